#include "rbw/selftest.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rbw/builtin.hpp"
#include "rbw/contraction.hpp"
#include "rbw/grouprep.hpp"
#include "rbw/mzi.hpp"
#include "rbw/relsim.hpp"
#include "rbw/symmetry_state.hpp"

namespace rbw::selftest {

namespace {

using std::optional;
using std::string;

constexpr double kTol = 1e-12;
constexpr double kK0 = 2.0 * std::numbers::pi;  // wavelength 1

optional<string> expect_near(double got, double want, double tol, const string& what) {
  if (std::abs(got - want) <= tol) return std::nullopt;
  std::ostringstream os;
  os.precision(17);
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

optional<string> expect_near(Complex got, Complex want, double tol, const string& what) {
  if (std::abs(got - want) <= tol) return std::nullopt;
  std::ostringstream os;
  os.precision(17);
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

optional<string> expect_matrix(const CMatrix& got, const CMatrix& want, double tol, const string& what) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) return what + ": shape differs";
  const double r = max_abs(got - want);
  if (r <= tol) return std::nullopt;
  return what + ": residual " + std::to_string(r);
}

template <class... Fs>
optional<string> first_failure(Fs... results) {
  optional<string> first;
  ((first = first ? first : results), ...);
  return first;
}

optional<string> expect_combination(const contraction::Combination& got, const contraction::Combination& want,
                                    const string& what) {
  if (got == want) return std::nullopt;
  return what + ": got " + contraction::to_string(got) + ", want " + contraction::to_string(want);
}

mzi::PipelineResult run(std::initializer_list<mzi::OpticalElement> els) {
  const std::vector<mzi::OpticalElement> v(els);
  return mzi::run_pipeline(v, kK0);
}

std::vector<Check> mzi_checks() {
  using namespace mzi;
  const double s = 1.0 / std::numbers::sqrt2;
  std::vector<Check> c;
  c.push_back({"mzi.reflection_at_origin", "S(0) is the antidiagonal swap", [] {
                 CMatrix want(2, 2);
                 want << 0.0, 1.0, 1.0, 0.0;
                 return expect_matrix(reflection_op(0.0, kK0), want, kTol, "S(0)");
               }});
  c.push_back({"mzi.reflection_eigenkets", "(e^{-ik0a}|+> ± e^{ik0a}|->)/√2 have S(a) eigenvalues ±1", [] {
                 const double a = 0.137;
                 const auto [up, down] = reflection_eigenkets(a, kK0);
                 const Matrix2 sa = reflection_op(a, kK0);
                 return first_failure(expect_matrix(sa * up.vector(), up.vector(), kTol, "S|+1>"),
                               expect_matrix(sa * down.vector(), -down.vector(), kTol, "S|-1>"));
               }});
  c.push_back({"mzi.beam_splitter_matrix", "Q(a0) = (1/√2)[[1,-1],[1,1]]", [s] {
                 CMatrix want(2, 2);
                 want << s, -s, s, s;
                 return expect_matrix(beam_splitter_op(kK0), want, kTol, "Q(a0)");
               }});
  c.push_back({"mzi.beam_splitter_unitary", "Q Q† = I", [] {
                 const Matrix2 q = beam_splitter_op(kK0);
                 return expect_matrix(q * q.adjoint(), CMatrix::Identity(2, 2), kTol, "QQ†");
               }});
  c.push_back({"mzi.one_splitter", "source, bs, detector: (1,1)/√2 and clicks (1/2, 1/2)", [s] {
                 const auto r = run({OpticalElement::source(), OpticalElement::beam_splitter(),
                                     OpticalElement::detector()});
                 return first_failure(expect_near(r.final_state.plus(), Complex(s), kTol, "c+"),
                               expect_near(r.final_state.minus(), Complex(s), kTol, "c-"),
                               expect_near(r.clicks.p_d1, 0.5, kTol, "p_D1"),
                               expect_near(r.clicks.p_d2, 0.5, kTol, "p_D2"));
               }});
  c.push_back({"mzi.mirrors_keep_state", "mirrors leave (1,1)/√2 unchanged (S(0) eigenvalue +1)", [s] {
                 const auto r = run({OpticalElement::source(), OpticalElement::beam_splitter(),
                                     OpticalElement::mirrors(), OpticalElement::detector()});
                 return first_failure(expect_near(r.final_state.plus(), Complex(s), kTol, "c+"),
                               expect_near(r.final_state.minus(), Complex(s), kTol, "c-"),
                               expect_near(r.clicks.p_d1, 0.5, kTol, "p_D1"));
               }});
  c.push_back({"mzi.balanced_interferometer", "two splitters and mirrors return |+>, clicks (1, 0)", [] {
                 const auto r = run({OpticalElement::source(), OpticalElement::beam_splitter(),
                                     OpticalElement::mirrors(), OpticalElement::beam_splitter(),
                                     OpticalElement::detector()});
                 return first_failure(expect_near(r.final_state.plus(), Complex(1.0), kTol, "c+"),
                               expect_near(r.final_state.minus(), Complex(0.0), kTol, "c-"),
                               expect_near(r.clicks.p_d1, 1.0, kTol, "p_D1"),
                               expect_near(r.clicks.p_d2, 0.0, kTol, "p_D2"));
               }});
  c.push_back({"mzi.phase_plate", "phase plate gives cos(k0a)|+> + i sin(k0a)|->, clicks (cos², sin²)", [] {
                 optional<string> fail;
                 for (int i = 0; i <= 100 && !fail; ++i) {
                   const double a = 0.01 * i;
                   const auto r = run({OpticalElement::source(), OpticalElement::beam_splitter(),
                                       OpticalElement::mirrors(), OpticalElement::phase_plate(a),
                                       OpticalElement::beam_splitter(), OpticalElement::detector()});
                   const double co = std::cos(kK0 * a), si = std::sin(kK0 * a);
                   fail = first_failure(expect_near(r.final_state.plus(), Complex(co), kTol, "c+"),
                                 expect_near(r.final_state.minus(), Complex(0.0, si), kTol, "c-"),
                                 expect_near(r.clicks.p_d1, co * co, kTol, "p_D1"),
                                 expect_near(r.clicks.p_d2, si * si, kTol, "p_D2"));
                 }
                 return fail;
               }});
  c.push_back({"mzi.t_expectation", "<psi_f|T(a)|psi_f> = e^{-ik0a}cos² + e^{ik0a}sin²", [] {
                 const double a = 0.23;
                 const double co = std::cos(kK0 * a), si = std::sin(kK0 * a);
                 const Ket psi(Complex(co), Complex(0.0, si));
                 const Complex want = std::exp(Complex(0, -kK0 * a)) * co * co + std::exp(Complex(0, kK0 * a)) * si * si;
                 return expect_near(expectation_T(psi, a, kK0), want, kTol, "<T(a)>");
               }});
  c.push_back({"mzi.balanced_density", "k0a = π/4 gives ρ = diag(1/2, 1/2)", [] {
                 const double a[] = {std::numbers::pi / 4.0 / kK0};
                 CMatrix want = CMatrix::Zero(2, 2);
                 want(0, 0) = want(1, 1) = 0.5;
                 return expect_matrix(density_from_sweep(kK0, a).front().matrix(), want, kTol, "rho");
               }});
  c.push_back({"mzi.hamiltonian_tags_along", "<H> = E at every phase for E = 1, ħ²k0²/2m and ħk0c", [] {
                 const auto as = linspace(0.0, 1.0, 50);
                 const auto rhos = density_from_sweep(kK0, as);
                 optional<string> fail;
                 for (double e : {1.0, massive_energy(1.0, kK0, 3.0), photon_energy(1.0, kK0, 2.0)})
                   for (const auto& rho : rhos)
                     if (!fail) fail = expect_near(hamiltonian_expectation(rho, e), e, 1e-12 * e, "<H>");
                 return fail;
               }});
  c.push_back({"mzi.density_eigenbasis", "ρ = diag(cos², sin²) has eigenbasis {|+>, |->}", [] {
                 const double a[] = {0.1};
                 const auto rho = density_from_sweep(kK0, a).front();
                 const auto eig = eigendecompose(rho);
                 const double co2 = std::pow(std::cos(kK0 * 0.1), 2);
                 return first_failure(expect_near(eig[0].weight, co2, kTol, "w1"),
                               expect_near(eig[1].weight, 1.0 - co2, kTol, "w2"),
                               expect_near(eig[0].ket(0), Complex(1.0), kTol, "|zeta1>"),
                               expect_near(eig[1].ket(1), Complex(1.0), kTol, "|zeta2>"));
               }});
  c.push_back({"mzi.clicks_as_translation_outcomes", "p(e^{-ik0a}) = cos², p(e^{ik0a}) = sin²", [] {
                 const double a[] = {0.07};
                 const auto rho = density_from_sweep(kK0, a).front();
                 const auto dist = outcome_probabilities(rho, translation_op(a[0], kK0));
                 const double co2 = std::pow(std::cos(kK0 * a[0]), 2);
                 return first_failure(expect_near(dist.probability_of(std::exp(Complex(0, -kK0 * a[0]))), co2, kTol, "p-"),
                               expect_near(dist.probability_of(std::exp(Complex(0, kK0 * a[0]))), 1 - co2, kTol, "p+"));
               }});
  c.push_back({"mzi.average_from_state", "Tr{ρ T(a)} = e^{-ik0a}cos² + e^{ik0a}sin²", [] {
                 const double a[] = {0.31};
                 const auto rho = density_from_sweep(kK0, a).front();
                 const double co = std::cos(kK0 * a[0]), si = std::sin(kK0 * a[0]);
                 const Complex want = std::exp(Complex(0, -kK0 * a[0])) * co * co + std::exp(Complex(0, kK0 * a[0])) * si * si;
                 return expect_near((rho.matrix() * translation_op(a[0], kK0)).trace(), want, kTol, "Tr");
               }});
  c.push_back({"mzi.expand_reflection_eigenket", "|S(0)=1> = (|+> + |->)/√2", [s] {
                 const auto up = reflection_eigenkets(0.0, kK0).first;
                 const std::vector<CVector> basis{CVector::Unit(2, 0), CVector::Unit(2, 1)};
                 const CVector coeffs = expand_eigenket(up.vector(), basis);
                 return first_failure(expect_near(coeffs(0), Complex(s), kTol, "<+|"),
                               expect_near(coeffs(1), Complex(s), kTol, "<-|"));
               }});
  return c;
}

std::vector<Check> relsim_checks() {
  using namespace relsim;
  const Boost b{0.6 * kLightSpeed, kLightSpeed, "girls"};
  std::vector<Check> c;
  c.push_back({"relsim.gamma", "γ(0.6c) = 1.25", [b] { return expect_near(gamma(b), 1.25, 1.25e-12, "gamma"); }});
  c.push_back({"relsim.boost_bob_kim", "(t=0, x=1000 km) at 0.6c -> T=-0.0025 s, X=1250 km", [b] {
                 const auto e = boost_event({"2", 0.0, 1000.0, "boys"}, b);
                 return first_failure(expect_near(e.t, -0.0025, 0.0025e-12, "T"), expect_near(e.x, 1250.0, 1250e-12, "X"));
               }});
  c.push_back({"relsim.boost_bob_alice", "(t=0.002 s, x=1000 km) at 0.6c -> T=0, X=800 km", [b] {
                 const auto e = boost_event({"3", 0.002, 1000.0, "boys"}, b);
                 return first_failure(expect_near(e.t, 0.0, 1e-12, "T"), expect_near(e.x, 800.0, 800e-12, "X"));
               }});
  c.push_back({"relsim.boys_simultaneous", "events 1 and 2 share t=0 for the boys", [] {
                 const SpacetimeEvent ev[] = {{"1", 0.0, 0.0, "boys"}, {"2", 0.0, 1000.0, "boys"}};
                 const auto cls = simultaneity_classes(ev, Boost{0.0, kLightSpeed, "boys"});
                 if (cls.size() != 1) return optional<string>("expected one class, got " + std::to_string(cls.size()));
                 return optional<string>();
               }});
  c.push_back({"relsim.girls_not_simultaneous", "events 1 and 2 fall at T=-0.0025 s and T=0 for the girls", [b] {
                 const SpacetimeEvent ev[] = {{"1", 0.0, 0.0, "boys"}, {"2", 0.0, 1000.0, "boys"}};
                 const auto cls = simultaneity_classes(ev, b);
                 if (cls.size() != 2) return optional<string>("expected two classes, got " + std::to_string(cls.size()));
                 return first_failure(expect_near(cls[0].time, -0.0025, 1e-12, "first"), expect_near(cls[1].time, 0.0, 1e-12, "second"));
               }});
  c.push_back({"relsim.girls_events_1_3", "events 1 and 3 share T=0 for the girls", [b] {
                 const SpacetimeEvent ev[] = {{"1", 0.0, 0.0, "boys"}, {"3", 0.002, 1000.0, "boys"}};
                 const auto cls = simultaneity_classes(ev, b);
                 if (cls.size() != 1) return optional<string>("expected one class, got " + std::to_string(cls.size()));
                 return expect_near(cls[0].time, 0.0, 1e-12, "T");
               }});
  c.push_back({"relsim.scenario_numbers", "Bob meets Alice at t=0.002 s; 1000 km -> 800 km; Kim-Alice 450 vs 360 km", [] {
                 const auto r = corealness_chain();
                 return first_failure(expect_near(r.bob_at_alice_t, 0.002, 1e-15, "Bob's clock"),
                               expect_near(r.boys_separation_girls_frame, 800.0, 1e-9, "contracted"),
                               expect_near(r.kim_alice_girls_frame, 450.0, 1e-9, "girls"),
                               expect_near(r.kim_alice_boys_frame, 360.0, 1e-9, "boys"),
                               expect_near(r.kim_at_bob_T, -0.0025, 1e-15, "Kim's clock"));
               }});
  return c;
}

std::vector<Check> contraction_checks() {
  using namespace contraction;
  const EpsPoly i_unit(ComplexRational::i());
  std::vector<Check> c;
  c.push_back({"contract.poincare_entries", "[J1,J2] = iJ3, [K1,K2] = -(i/c²)J3, [T1,K1] = (i/c²)T0, [T1,T2] = 0", [i_unit] {
                 const auto p = poincare_table();
                 return first_failure(expect_combination(p.bracket("J1", "J2"), term("J3", i_unit), "[J1,J2]"),
                               expect_combination(p.bracket("K1", "K2"), term("J3", EpsPoly::monomial(-ComplexRational::i(), 1)), "[K1,K2]"),
                               expect_combination(p.bracket("T1", "K1"), term("T0", EpsPoly::monomial(ComplexRational::i(), 1)), "[T1,K1]"),
                               expect_combination(p.bracket("T1", "T2"), {}, "[T1,T2]"));
               }});
  c.push_back({"contract.jacobi", "Jacobi identity holds exactly for the Poincaré, Galilean and contracted tables", [] {
                 for (const auto& t : {poincare_table(), galilean_table(), contract(poincare_table(), 1, 1)}) {
                   const auto r = jacobi_residual(t);
                   if (!r.zero || !r.antisymmetric) return optional<string>(t.name() + " fails Jacobi");
                 }
                 return optional<string>();
               }});
  c.push_back({"contract.limit_entries", "after c -> ∞: [K1,K2] = 0, [T1,K1] = (i/ħ)M, [J1,J2] = iJ3", [i_unit] {
                 const Rational hbar(3, 2);
                 const auto t = contract(poincare_table(), hbar, 2);
                 return first_failure(expect_combination(t.bracket("K1", "K2"), {}, "[K1,K2]"),
                               expect_combination(t.bracket("T1", "K1"), term("M", EpsPoly(ComplexRational::i() / ComplexRational(hbar))), "[T1,K1]"),
                               expect_combination(t.bracket("J1", "J2"), term("J3", i_unit), "[J1,J2]"),
                               expect_combination(t.bracket("M", "K1"), {}, "[M,K1]"));
               }});
  c.push_back({"contract.ccr", "[P_i,Q_n] = -iħ δ_in I on the contracted algebra", [] {
                 for (const Rational& hbar : {Rational(1), Rational(1, 7)}) {
                   const auto r = ccr_check(contract(poincare_table(), hbar, 5), hbar, 5);
                   if (!r.recovered()) return optional<string>("CCR not recovered for hbar " + exact::to_string(hbar));
                 }
                 return optional<string>();
               }});
  c.push_back({"contract.galilean", "Galilean: [T1,K1] = 0, [J1,K2] = iK3, no CCR", [i_unit] {
                 const auto g = galilean_table();
                 const auto r = ccr_check(g, 1, 1);
                 return first_failure(expect_combination(g.bracket("T1", "K1"), {}, "[T1,K1]"),
                               expect_combination(g.bracket("J1", "K2"), term("K3", i_unit), "[J1,K2]"),
                               r.all_zero() ? optional<string>() : optional<string>("Galilean brackets give CCR"));
               }});
  return c;
}

std::vector<Check> group_checks() {
  std::vector<Check> c;
  c.push_back({"group.builtin_theorems",
               "orthogonality, resolution identity and reconstruction on the trivial group, Z2 and S3", [] {
                 for (const auto& doc : {builtin::trivial_group(), builtin::z2_group(), builtin::s3_group()}) {
                   for (const auto& [name, irrep] : doc.irreps) {
                     const auto rep = verify_irrep(*irrep, 1e-10);
                     if (!rep.ok()) return optional<string>("irrep " + name + " fails verification");
                     if (orthogonality_residual(*irrep) > 1e-10) return optional<string>("orthogonality " + name);
                     for (const auto& g : doc.group->elements())
                       if (max_abs(resolution_identity(*irrep, g) - irrep->matrix(g)) > 1e-10)
                         return optional<string>("resolution identity " + name + " at " + g);
                     const auto n = static_cast<Eigen::Index>(irrep->dim());
                     const DensityMatrix rho(CMatrix::Identity(n, n) / static_cast<double>(n));
                     if (max_abs(reconstruct_density(expectations_from_state(rho, irrep)).rho.matrix() - rho.matrix()) > 1e-10)
                       return optional<string>("reconstruction " + name);
                   }
                 }
                 return optional<string>();
               }});
  return c;
}

}  // namespace

std::vector<Check> builtin_checks() {
  std::vector<Check> all;
  for (auto part : {group_checks(), mzi_checks(), relsim_checks(), contraction_checks()})
    for (auto& ch : part) all.push_back(std::move(ch));
  return all;
}

std::vector<Check> group_document_checks(const std::string& path, double tolerance) {
  auto doc = std::make_shared<optional<io::GroupDocument>>();
  auto load_error = std::make_shared<string>();
  try {
    *doc = io::parse_group_document(io::read_json_file(path));
  } catch (const Error& e) {
    *load_error = e.what();
  }
  std::vector<Check> c;
  c.push_back({"fixture.load", "group table in " + path + " is closed, associative, with identity and inverses",
               [load_error] { return load_error->empty() ? optional<string>() : optional<string>(*load_error); }});
  if (!doc->has_value()) return c;
  for (const auto& [name, irrep] : (*doc)->irreps) {
    const auto ir = irrep;
    c.push_back({"fixture.irrep." + name, "irrep " + name + " is unitary, a homomorphism and irreducible",
                 [ir, tolerance] {
                   const auto r = verify_irrep(*ir, tolerance);
                   if (r.ok()) return optional<string>();
                   return optional<string>("unitarity " + std::to_string(r.unitarity_residual) + ", homomorphism " +
                                           std::to_string(r.homomorphism_residual) + ", irreducibility " +
                                           std::to_string(r.irreducibility_indicator));
                 }});
    c.push_back({"fixture.orthogonality." + name, "orthogonality relation for " + name, [ir, tolerance] {
                   return expect_near(orthogonality_residual(*ir), 0.0, tolerance, "residual");
                 }});
  }
  return c;
}

std::vector<CheckResult> run(const std::vector<Check>& checks) {
  std::vector<CheckResult> out;
  for (const auto& ch : checks) {
    CheckResult r{ch.name, false, {}};
    try {
      const auto fail = ch.run();
      r.passed = !fail.has_value();
      if (fail) r.detail = *fail;
    } catch (const std::exception& e) {
      r.detail = string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rbw::selftest
