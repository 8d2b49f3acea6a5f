// One line per acceptance criterion. Reference values are closed forms
// written out here, not taken from the library.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "rbw/builtin.hpp"
#include "rbw/contraction.hpp"
#include "rbw/mzi.hpp"
#include "rbw/relsim.hpp"
#include "rbw/symmetry_state.hpp"
#include "../support.hpp"

using namespace rbw;

namespace {

constexpr double kK0 = 2.0 * std::numbers::pi;
const Complex kI{0.0, 1.0};

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

bool rel_close(double got, double want, double rel) { return std::abs(got - want) <= rel * std::abs(want); }

Outcome boosts() {
  Outcome o;
  const relsim::Boost b{0.6 * relsim::kLightSpeed, relsim::kLightSpeed, "girls"};
  const auto kim = relsim::boost_event({"1", 0.0, 1000.0, "boys"}, b);
  const auto alice = relsim::boost_event({"2", 0.002, 1000.0, "boys"}, b);
  o.require(rel_close(relsim::gamma(b), 1.25, 1e-12), "gamma(0.6c) != 1.25");
  o.require(rel_close(kim.t, -0.0025, 1e-12), "T of (0, 1000 km) != -0.0025 s");
  o.require(rel_close(kim.x, 1250.0, 1e-12), "X of (0, 1000 km) != 1250 km");
  // The reference value is 0, so the relative tolerance is taken against t = 0.002 s.
  o.require(std::abs(alice.t) <= 1e-12 * 0.002, "T of (0.002 s, 1000 km) != 0");
  o.require(rel_close(alice.x, 800.0, 1e-12), "X of (0.002 s, 1000 km) != 800 km");
  return o;
}

mzi::PipelineResult pipeline(std::vector<mzi::OpticalElement> els) { return mzi::run_pipeline(els, kK0); }

Outcome interferometer() {
  using mzi::OpticalElement;
  Outcome o;
  const double s = 1.0 / std::sqrt(2.0);
  const auto near = [](Complex a, Complex b) { return std::abs(a - b) <= 1e-12; };

  const auto b = pipeline({OpticalElement::source(), OpticalElement::beam_splitter(), OpticalElement::detector()});
  o.require(near(b.final_state.plus(), s) && near(b.final_state.minus(), s), "psi_b != (1,1)/sqrt2");
  o.require(near(b.clicks.p_d1, 0.5) && near(b.clicks.p_d2, 0.5), "one splitter clicks != (1/2,1/2)");

  const auto c = pipeline({OpticalElement::source(), OpticalElement::beam_splitter(), OpticalElement::mirrors(),
                           OpticalElement::detector()});
  o.require(near(c.final_state.plus(), s) && near(c.final_state.minus(), s), "psi_c != psi_b");
  o.require(near(c.clicks.p_d1, 0.5) && near(c.clicks.p_d2, 0.5), "mirror clicks != (1/2,1/2)");

  const auto d = pipeline({OpticalElement::source(), OpticalElement::beam_splitter(), OpticalElement::mirrors(),
                           OpticalElement::beam_splitter(), OpticalElement::detector()});
  o.require(near(d.final_state.plus(), 1.0) && near(d.final_state.minus(), 0.0), "psi_d != |+>");
  o.require(near(d.clicks.p_d1, 1.0) && near(d.clicks.p_d2, 0.0), "balanced clicks != (1,0)");

  for (double a : mzi::linspace(0.0, 1.0, 100)) {
    const auto f = pipeline({OpticalElement::source(), OpticalElement::beam_splitter(), OpticalElement::mirrors(),
                             OpticalElement::phase_plate(a), OpticalElement::beam_splitter(),
                             OpticalElement::detector()});
    const double cs = std::cos(kK0 * a), sn = std::sin(kK0 * a);
    o.require(near(f.final_state.plus(), cs) && near(f.final_state.minus(), kI * sn),
              "psi_f != cos|+> + i sin|-> at a=" + std::to_string(a));
    o.require(near(f.clicks.p_d1, cs * cs) && near(f.clicks.p_d2, sn * sn),
              "phase plate clicks != (cos^2, sin^2) at a=" + std::to_string(a));
  }
  return o;
}

Outcome expectation() {
  Outcome o;
  const auto as = mzi::linspace(0.0, 1.0, 100);
  for (const auto& row : mzi::sweep(kK0, as)) {
    const double cs = std::cos(kK0 * row.a), sn = std::sin(kK0 * row.a);
    const Complex want = std::exp(-kI * kK0 * row.a) * cs * cs + std::exp(kI * kK0 * row.a) * sn * sn;
    o.require(std::abs(row.t_expectation - want) <= 1e-12, "<T(a)> off at a=" + std::to_string(row.a));
  }
  const double hbar = 1.054571817e-34, mass = 9.1093837e-31, c = 2.99792458e8, k0 = 1e7;
  const double e_massive = hbar * hbar * k0 * k0 / (2.0 * mass);
  const double e_photon = hbar * k0 * c;
  o.require(rel_close(mzi::massive_energy(hbar, k0, mass), e_massive, 1e-15), "hbar^2 k0^2 / 2m");
  o.require(rel_close(mzi::photon_energy(hbar, k0, c), e_photon, 1e-15), "hbar k0 c");
  for (const auto& rho : mzi::density_from_sweep(k0, as)) {
    o.require(rel_close(mzi::hamiltonian_expectation(rho, e_massive), e_massive, 4e-16), "<H> massive depends on a");
    o.require(rel_close(mzi::hamiltonian_expectation(rho, e_photon), e_photon, 4e-16), "<H> photon depends on a");
  }
  return o;
}

std::vector<Complex> averages(const CMatrix& rho, const Irrep& irrep) {
  std::vector<Complex> v;
  for (std::size_t g = 0; g < irrep.group().order(); ++g) v.push_back((rho * irrep.matrix(g)).trace());
  return v;
}

Outcome theorems() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::size_t irreps = 0;
  for (const auto& doc : {builtin::trivial_group(), builtin::z2_group(), builtin::s3_group()}) {
    for (const auto& [name, irrep] : doc.irreps) {
      ++irreps;
      const std::string where = " (" + std::to_string(doc.group->order()) + "-element group, irrep " + name + ")";
      o.require(orthogonality_residual(*irrep) < 1e-10, "orthogonality" + where);
      for (const auto& l : doc.group->elements())
        o.require(max_abs(resolution_identity(*irrep, l) - irrep->matrix(l)) < 1e-10, "resolution identity" + where);
      const int n = static_cast<int>(irrep->dim());
      for (int trial = 0; trial < 100; ++trial) {
        const CMatrix rho = oracle::random_density(rng, n);
        const auto rec = reconstruct_density(ExpectationSet(irrep, averages(rho, *irrep)));
        o.require((rec.rho.matrix() - rho).norm() < 1e-10, "roundtrip" + where);
        o.require(rec.rho.hermiticity_residual() < 1e-12, "hermiticity" + where);
        const auto pairs = eigendecompose(rec.rho);
        for (std::size_t g = 0; g < doc.group->order(); ++g) {
          const Complex direct = (rho * irrep->matrix(g)).trace();
          o.require(std::abs(eigenbasis_expectation(pairs, irrep->matrix(g)) - direct) < 1e-10, "eigenbasis form" + where);
          o.require(std::abs(outcome_probabilities(rec.rho, irrep->matrix(g)).mean() - direct) < 1e-10,
                    "outcome form" + where);
        }
      }
    }
  }
  o.require(irreps == 6, "expected 6 irreps over the three groups");
  return o;
}

Outcome brackets() {
  using namespace contraction;
  Outcome o;
  const auto poincare = poincare_table();
  const auto galilean = galilean_table();
  for (const auto& t : {poincare, galilean, contract(poincare, 1, 1)}) {
    const auto j = jacobi_residual(t);
    o.require(j.zero && j.antisymmetric && j.max_magnitude == 0.0, "Jacobi residual nonzero on " + t.name());
  }
  const ComplexRational i = ComplexRational::i();
  for (const Rational& hbar : {Rational(1), Rational(1, 3)}) {
    const Rational m(2);
    const auto r = ccr_check(contract(poincare, hbar, m), hbar, m);
    const auto g = ccr_check(galilean, hbar, m);
    for (int a = 0; a < 3; ++a)
      for (int n = 0; n < 3; ++n) {
        const Combination want = a == n ? term("I", EpsPoly(-i * ComplexRational(hbar))) : Combination{};
        o.require(r.pq[a][n] == want, "contracted [P_i,Q_n] != -i hbar delta I");
        o.require(is_zero(g.pq[a][n]), "Galilean [P_i,Q_n] != 0");
      }
  }
  return o;
}

Outcome cross_module() {
  Outcome o;
  const auto as = mzi::linspace(0.0, 1.0, 100);
  const auto rhos = mzi::density_from_sweep(kK0, as);
  const auto rows = mzi::sweep(kK0, as);
  for (std::size_t k = 0; k < as.size(); ++k) {
    const Complex l1 = std::exp(-kI * kK0 * as[k]);  // T(a)|+>
    const Complex l2 = std::exp(kI * kK0 * as[k]);   // T(a)|->
    const auto dist = outcome_probabilities(rhos[k], mzi::translation_op(as[k], kK0));
    double seen = 0.0;
    for (std::size_t i = 0; i < dist.eigenvalues.size(); ++i) {
      double want = 0.0;
      if (std::abs(dist.eigenvalues[i] - l1) < 1e-9) want += rows[k].p_d1;
      if (std::abs(dist.eigenvalues[i] - l2) < 1e-9) want += rows[k].p_d2;
      o.require(std::abs(dist.probabilities[i] - want) < 1e-10, "outcome vs click mismatch at a=" + std::to_string(as[k]));
      seen += want;
    }
    o.require(std::abs(seen - 1.0) < 1e-10, "eigenvalues of T(a) missing at a=" + std::to_string(as[k]));
  }
  return o;
}

Outcome invariants() {
  Outcome o;
  std::mt19937_64 rng(1000);
  std::uniform_real_distribution<double> ut(-1.0, 1.0), ux(-3e5, 3e5), uv(-0.999, 0.999);
  const double c = relsim::kLightSpeed;
  for (int k = 0; k < 1000; ++k) {
    const relsim::SpacetimeEvent e{"e", ut(rng), ux(rng), "s"};
    const relsim::Boost there{uv(rng) * c, c, "s2"};
    const auto b = relsim::boost_event(e, there);
    const auto back = relsim::boost_event(b, {-there.v, c, "s"});
    o.require(std::abs(back.t - e.t) <= 1e-9 * (std::abs(e.t) + std::abs(e.x) / c), "inverse roundtrip (t)");
    o.require(std::abs(back.x - e.x) <= 1e-9 * (std::abs(e.x) + c * std::abs(e.t)), "inverse roundtrip (x)");
    const double s0 = c * c * e.t * e.t - e.x * e.x;
    const double s1 = c * c * b.t * b.t - b.x * b.x;
    o.require(std::abs(s1 - s0) <= 1e-9 * (c * c * e.t * e.t + e.x * e.x), "interval invariance");
  }
  return o;
}

struct Criterion {
  int id;
  std::string text;
  double limit_seconds;  // 0: none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "boost of the two reference events at 0.6c, gamma = 1.25", 1e-3, boosts},
      {2, "interferometer states and click distributions, 101 phase-plate lengths", 10e-3, interferometer},
      {3, "<T(a)> across the sweep and <H> = E for both energy forms", 0.0, expectation},
      {4, "orthogonality, resolution identity, 100 reconstructions per irrep, eigen forms", 1.0, theorems},
      {5, "exact Jacobi on three tables, CCR on contracted, none on Galilean", 0.1, brackets},
      {6, "sweep densities give the click distribution as T(a) outcome probabilities", 0.0, cross_module},
      {7, "1000 random boosts: inverse roundtrip and interval invariance", 0.0, invariants},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("threw: ") + e.what();
    }
    const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && c.limit_seconds > 0.0 && dt > c.limit_seconds) {
      o.ok = false;
      o.detail = "too slow";
    }
    failed += !o.ok;
    const std::string limit =
        c.limit_seconds > 0.0 ? "limit " + std::to_string(static_cast<int>(c.limit_seconds * 1e3)) + " ms" : "no limit";
    std::printf("criterion %d %s: %s [%.3f ms, %s]%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.text.c_str(), dt * 1e3,
                limit.c_str(), o.ok ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
