#include "rbw/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rbw/contraction.hpp"
#include "rbw/io.hpp"
#include "rbw/mzi.hpp"
#include "rbw/relsim.hpp"
#include "rbw/selftest.hpp"
#include "rbw/symmetry_state.hpp"

namespace rbw::cli {

namespace {

using io::format_number;
using io::json;

struct OutputOptions {
  std::string format;
  int precision = 12;
  std::string output;
};

void add_output_options(CLI::App* sub, OutputOptions& o, const std::string& default_format) {
  o.format = default_format;
  sub->add_option("--format", o.format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}))
      ->capture_default_str();
  sub->add_option("--precision", o.precision, "significant digits in numeric output")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  sub->add_option("-o,--output", o.output, "write to this file instead of stdout");
}

void emit(const OutputOptions& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write '" + o.output + "'");
  f << text;
}

std::string format_complex(Complex z, int p) {
  const std::string re = format_number(z.real(), p);
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  if (im == 0.0) return re;
  const std::string ims = format_number(std::abs(im), p);
  if (z.real() == 0.0) return (im < 0 ? "-" : "") + ims + "i";
  return re + (im < 0 ? "-" : "+") + ims + "i";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---- group-check ---------------------------------------------------------

struct GroupCheckArgs {
  std::string file;
  double tolerance = 0.0;
  OutputOptions out;
};

int run_group_check(const GroupCheckArgs& a, std::ostream& out) {
  const auto doc = io::parse_group_document(io::read_json_file(a.file));
  const Group& g = *doc.group;
  bool ok = true;
  json report = {{"order", g.order()}, {"elements", g.elements()}, {"tolerance", a.tolerance}};
  std::ostringstream table;
  table << "group of order " << g.order() << ":";
  for (const auto& l : g.elements()) table << ' ' << l;
  table << "\nidentity " << g.label(g.identity()) << ", closure, inverses and associativity verified\n";

  json irreps = json::object();
  for (const auto& [name, irrep] : doc.irreps) {
    const auto rep = verify_irrep(*irrep, a.tolerance);
    const double orth = orthogonality_residual(*irrep);
    double resolution = 0.0;
    for (const auto& l : g.elements())
      resolution = std::max(resolution, (resolution_identity(*irrep, l) - irrep->matrix(l)).norm());
    const bool good = rep.ok() && orth <= a.tolerance && resolution <= a.tolerance;
    ok = ok && good;
    const int p = a.out.precision;
    irreps[name] = {{"n", irrep->dim()},
                    {"unitarity_residual", io::round_significant(rep.unitarity_residual, p)},
                    {"homomorphism_residual", io::round_significant(rep.homomorphism_residual, p)},
                    {"irreducibility_indicator", io::round_significant(rep.irreducibility_indicator, p)},
                    {"orthogonality_residual", io::round_significant(orth, p)},
                    {"resolution_residual", io::round_significant(resolution, p)},
                    {"ok", good}};
    table << "irrep " << name << " (n=" << irrep->dim() << "): unitarity " << format_number(rep.unitarity_residual, 3)
          << ", homomorphism " << format_number(rep.homomorphism_residual, 3) << ", irreducibility "
          << format_number(rep.irreducibility_indicator, p) << ", orthogonality " << format_number(orth, 3)
          << ", resolution " << format_number(resolution, 3) << (good ? "  OK" : "  FAIL") << "\n";
  }
  report["irreps"] = std::move(irreps);
  report["ok"] = ok;
  emit(a.out, a.out.format == "json" ? dump(report) : table.str(), out);
  return ok ? kOk : kContractViolation;
}

// ---- reconstruct ---------------------------------------------------------

struct ReconstructArgs {
  std::string group_file;
  std::string expectation_file;
  std::string symmetry;
  double tolerance = 0.0;
  OutputOptions out;
};

int run_reconstruct(const ReconstructArgs& a, std::ostream& out, std::ostream& err) {
  const auto doc = io::parse_group_document(io::read_json_file(a.group_file));
  const auto expectations = io::parse_expectations(io::read_json_file(a.expectation_file), doc);
  const auto rec = reconstruct_density(expectations, a.tolerance);
  for (const auto& w : rec.warnings) err << "warning: " << w << "\n";
  const auto eig = eigendecompose(rec.rho, a.tolerance);
  const int p = a.out.precision;

  json j = io::density_to_json(rec.rho, eig, p);
  std::ostringstream table;
  table << "rho (n=" << rec.rho.dim() << ", irrep " << expectations.irrep().name() << ")\n";
  for (Eigen::Index r = 0; r < rec.rho.matrix().rows(); ++r) {
    table << " ";
    for (Eigen::Index c = 0; c < rec.rho.matrix().cols(); ++c) table << "  " << format_complex(rec.rho.matrix()(r, c), p);
    table << "\n";
  }
  table << "eigenvalues w(zeta):";
  for (const auto& e : eig) table << "  " << format_number(e.weight, p);
  table << "\n";
  for (std::size_t i = 0; i < eig.size(); ++i) {
    table << "|zeta" << i + 1 << "> =";
    for (Eigen::Index k = 0; k < eig[i].ket.size(); ++k) table << "  " << format_complex(eig[i].ket(k), p);
    table << "\n";
  }

  if (!a.symmetry.empty()) {
    const auto& irrep = expectations.irrep();
    const auto dist = outcome_probabilities(rec.rho, irrep.matrix(a.symmetry), a.tolerance);
    json outcomes = json::array();
    table << "outcomes of D(" << a.symmetry << "):\n";
    for (std::size_t i = 0; i < dist.eigenvalues.size(); ++i) {
      outcomes.push_back({{"eigenvalue", io::complex_to_json(dist.eigenvalues[i], p)},
                          {"probability", io::round_significant(dist.probabilities[i], p)}});
      table << "  lambda = " << format_complex(dist.eigenvalues[i], p)
            << "  p = " << format_number(dist.probabilities[i], p) << "\n";
    }
    j["outcomes"] = {{"symmetry", a.symmetry}, {"distribution", std::move(outcomes)}};
  }
  emit(a.out, a.out.format == "json" ? dump(j) : table.str(), out);
  return kOk;
}

// ---- mzi -----------------------------------------------------------------

struct MziArgs {
  std::string config;
  double k0 = 0.0;
  std::string elements;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  OutputOptions out;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  return parts;
}

int run_mzi(const MziArgs& a, std::ostream& out) {
  io::PipelineConfig cfg;
  if (!a.config.empty()) {
    cfg = io::parse_pipeline(io::read_json_file(a.config));
  } else {
    if (a.elements.empty()) throw CLI::ValidationError("mzi", "give --config or --elements with --k0");
    cfg.k0 = a.k0;
    for (const auto& tok : split(a.elements, ',')) cfg.elements.push_back(mzi::parse_element(tok));
  }
  const auto r = mzi::run_pipeline(cfg.elements, cfg.k0);
  const int p = a.out.precision;

  json j = io::pipeline_to_json(cfg);
  json stages = json::array();
  std::ostringstream table;
  table << "k0 = " << format_number(cfg.k0, p) << "\n";
  for (std::size_t i = 0; i < cfg.elements.size(); ++i) {
    const auto& s = r.stages[i];
    stages.push_back({{"element", mzi::to_string(cfg.elements[i])},
                      {"ket", json::array({io::complex_to_json(s.plus(), p), io::complex_to_json(s.minus(), p)})}});
    table << mzi::to_string(cfg.elements[i]) << ": " << format_complex(s.plus(), p) << " |+> + "
          << format_complex(s.minus(), p) << " |->\n";
  }
  j["stages"] = std::move(stages);
  j["p_D1"] = io::round_significant(r.clicks.p_d1, p);
  j["p_D2"] = io::round_significant(r.clicks.p_d2, p);
  table << "p_D1 = " << format_number(r.clicks.p_d1, p) << ", p_D2 = " << format_number(r.clicks.p_d2, p) << "\n";
  if (a.samples > 0) {
    const auto counts = mzi::sample_clicks(r.clicks, a.samples, a.seed);
    j["samples"] = {{"shots", a.samples}, {"seed", a.seed}, {"D1", counts.d1}, {"D2", counts.d2}};
    table << "sampled " << a.samples << " clicks (seed " << a.seed << "): D1 " << counts.d1 << ", D2 " << counts.d2
          << "\n";
  }
  emit(a.out, a.out.format == "json" ? dump(j) : table.str(), out);
  return kOk;
}

// ---- sweep ---------------------------------------------------------------

struct SweepArgs {
  double k0 = 0.0;
  double a_min = 0.0;
  double a_max = 1.0;
  std::size_t steps = 100;
  bool serial = false;
  OutputOptions out;
};

int run_sweep(const SweepArgs& a, std::ostream& out) {
  const auto as = mzi::linspace(a.a_min, a.a_max, a.steps);
  const auto rows = a.serial ? mzi::sweep_serial(a.k0, as) : mzi::sweep(a.k0, as);
  const int p = a.out.precision;
  std::string text;
  if (a.out.format == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"a", io::round_significant(r.a, p)},
                   {"p_D1", io::round_significant(r.p_d1, p)},
                   {"p_D2", io::round_significant(r.p_d2, p)},
                   {"ReT", io::round_significant(r.t_expectation.real(), p)},
                   {"ImT", io::round_significant(r.t_expectation.imag(), p)}});
    text = dump(json{{"k0", a.k0}, {"rows", std::move(j)}});
  } else {
    const char* sep = a.out.format == "csv" ? "," : "  ";
    std::ostringstream os;
    os << "a" << sep << "p_D1" << sep << "p_D2" << sep << "ReT" << sep << "ImT" << "\n";
    for (const auto& r : rows)
      os << format_number(r.a, p) << sep << format_number(r.p_d1, p) << sep << format_number(r.p_d2, p) << sep
         << format_number(r.t_expectation.real(), p) << sep << format_number(r.t_expectation.imag(), p) << "\n";
    text = os.str();
  }
  emit(a.out, text, out);
  return kOk;
}

// ---- boost ---------------------------------------------------------------

struct BoostArgs {
  std::string v = "0";
  double c = relsim::kLightSpeed;
  double t = 0.0;
  double x = 0.0;
  std::string events;
  std::string target = "girls";
  OutputOptions out;
};

int run_boost(const BoostArgs& a, std::ostream& out) {
  const relsim::Boost b{relsim::parse_velocity(a.v, a.c), a.c, a.target};
  const int p = a.out.precision;
  if (a.events.empty()) {
    const auto e = relsim::boost_event({"event", a.t, a.x, "boys"}, b);
    std::string text;
    if (a.out.format == "json")
      text = dump({{"gamma", io::round_significant(relsim::gamma(b), p)},
                   {"T", io::round_significant(e.t, p)},
                   {"X", io::round_significant(e.x, p)}});
    else
      text = "T=" + format_number(e.t, p) + " s, X=" + format_number(e.x, p) + " km\n";
    emit(a.out, text, out);
    return kOk;
  }

  const auto events = io::parse_events(io::read_json_file(a.events));
  const auto boosted = relsim::boost_events(events, b);
  const auto classes = relsim::simultaneity_classes(events, b);
  if (a.out.format == "json") {
    json j = io::events_to_json(boosted, p);
    json cls = json::array();
    for (const auto& c : classes) {
      json labels = json::array();
      for (const auto& e : c.events) labels.push_back(e.label);
      cls.push_back({{"T", io::round_significant(c.time, p)}, {"events", std::move(labels)}});
    }
    j["gamma"] = io::round_significant(relsim::gamma(b), p);
    j["simultaneity_classes"] = std::move(cls);
    emit(a.out, dump(j), out);
    return kOk;
  }
  std::ostringstream os;
  os << "gamma = " << format_number(relsim::gamma(b), p) << "\n";
  os << "label  t [s]  x [km]  ->  T [s]  X [km]\n";
  for (std::size_t i = 0; i < events.size(); ++i)
    os << events[i].label << "  " << format_number(events[i].t, p) << "  " << format_number(events[i].x, p)
       << "  ->  " << format_number(boosted[i].t, p) << "  " << format_number(boosted[i].x, p) << "\n";
  os << "simultaneous in " << (a.target.empty() ? "boosted frame" : a.target) << ":\n";
  for (const auto& c : classes) {
    os << "  T=" << format_number(c.time, p) << " s:";
    for (const auto& e : c.events) os << " " << e.label;
    os << "\n";
  }
  emit(a.out, os.str(), out);
  return kOk;
}

// ---- scenario ------------------------------------------------------------

int run_scenario(const OutputOptions& o, std::ostream& out) {
  const auto r = relsim::corealness_chain();
  const int p = o.precision;
  if (o.format == "json") {
    json links = json::array();
    for (const auto& l : r.links)
      links.push_back({{"statement", l.statement},
                       {"boys", {{"t", io::round_significant(l.boys_view.t, p)}, {"x", io::round_significant(l.boys_view.x, p)}}},
                       {"girls", {{"T", io::round_significant(l.girls_view.t, p)}, {"X", io::round_significant(l.girls_view.x, p)}}}});
    json j = {{"v", io::round_significant(r.boost.v, p)},
              {"gamma", io::round_significant(relsim::gamma(r.boost), p)},
              {"links", std::move(links)},
              {"conclusions", r.conclusions},
              {"boys_separation", {{"boys", r.boys_separation_boys_frame}, {"girls", io::round_significant(r.boys_separation_girls_frame, p)}}},
              {"sara_kim_separation", {{"boys", r.sara_kim_boys_frame}, {"girls", io::round_significant(r.sara_kim_girls_frame, p)}}},
              {"kim_alice_separation", {{"boys", io::round_significant(r.kim_alice_boys_frame, p)}, {"girls", io::round_significant(r.kim_alice_girls_frame, p)}}}};
    emit(o, dump(j), out);
    return kOk;
  }
  std::ostringstream os;
  os << "boys: Joe x=0, Bob x=1000 km; girls: Sara X=0, Alice X=800 km, Kim X=1250 km; v = "
     << format_number(r.boost.v / relsim::kLightSpeed, p) << "c, gamma = " << format_number(relsim::gamma(r.boost), p)
     << "\n\nco-real links\n";
  for (const auto& l : r.links)
    os << "  " << l.statement << "   [boys (t,x) = (" << format_number(l.boys_view.t, p) << " s, "
       << format_number(l.boys_view.x, p) << " km); girls (T,X) = (" << format_number(l.girls_view.t, p) << " s, "
       << format_number(l.girls_view.x, p) << " km)]\n";
  os << "\nseparations            boys' frame   girls' frame\n";
  os << "  Joe-Bob               " << format_number(r.boys_separation_boys_frame, p) << " km      "
     << format_number(r.boys_separation_girls_frame, p) << " km\n";
  os << "  Sara-Kim              " << format_number(r.sara_kim_boys_frame, p) << " km      "
     << format_number(r.sara_kim_girls_frame, p) << " km\n";
  os << "  Kim-Alice             " << format_number(r.kim_alice_boys_frame, p) << " km       "
     << format_number(r.kim_alice_girls_frame, p) << " km\n\nconclusions\n";
  for (const auto& c : r.conclusions) os << "  " << c << "\n";
  emit(o, os.str(), out);
  return kOk;
}

// ---- contract ------------------------------------------------------------

struct ContractArgs {
  std::string hbar = "1";
  std::string m = "1";
  std::string c = "300000";
  OutputOptions out;
};

std::string format_combination_at(const contraction::Combination& comb, int p) {
  if (comb.empty()) return "0";
  std::string s;
  for (const auto& [g, coeff] : comb) {
    const auto z = coeff.at_zero().to_complex();
    if (!s.empty()) s += " + ";
    s += "(" + format_complex(z, p) + ")*" + g;
  }
  return s;
}

void print_table(std::ostream& os, const contraction::BracketTable& t,
                 const std::function<std::string(const contraction::Combination&)>& show) {
  const auto& gens = t.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const auto v = t.bracket(gens[a], gens[b]);
      if (!v.empty()) os << "  [" << gens[a] << "," << gens[b] << "] = " << show(v) << "\n";
    }
}

json table_json(const contraction::BracketTable& t) {
  json j = json::object();
  const auto& gens = t.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      const auto v = t.bracket(gens[a], gens[b]);
      if (!v.empty()) j["[" + gens[a] + "," + gens[b] + "]"] = contraction::to_string(v);
    }
  return j;
}

std::string jacobi_line(const contraction::BracketTable& t) {
  const auto r = contraction::jacobi_residual(t);
  if (r.zero && r.antisymmetric) return t.name() + ": 0 (exact)";
  std::string s = t.name() + ": max residual " + format_number(r.max_magnitude, 6);
  if (r.worst_triple)
    s += " at (" + (*r.worst_triple)[0] + "," + (*r.worst_triple)[1] + "," + (*r.worst_triple)[2] + ") = " +
         contraction::to_string(r.worst_value);
  if (!r.antisymmetric) s += ", antisymmetry violated";
  return s;
}

int run_contract(const ContractArgs& a, std::ostream& out) {
  using namespace contraction;
  const Rational hbar = exact::parse_rational(a.hbar);
  const Rational mass = exact::parse_rational(a.m);
  const Rational c = exact::parse_rational(a.c);
  if (c <= 0) throw Error(ErrorKind::InvalidArgument, "c must be positive");
  const Rational eps = Rational(1) / (c * c);
  const int p = a.out.precision;

  const BracketTable poincare = poincare_table();
  const BracketTable galilean = galilean_table();
  const BracketTable contracted = contract(poincare, hbar, mass);
  const auto ccr = ccr_check(contracted, hbar, mass);
  const auto galilean_ccr = ccr_check(galilean, hbar, mass);
  const auto jp = jacobi_residual(poincare);
  const auto jg = jacobi_residual(galilean);
  const auto jc = jacobi_residual(contracted);
  const bool jacobi_ok = jp.zero && jg.zero && jc.zero && jp.antisymmetric && jg.antisymmetric && jc.antisymmetric;

  const std::string hbar_text = hbar == 1 ? "" : "*" + exact::to_string(hbar);
  const std::string verdict = ccr.recovered() ? "[P_i,Q_n] = -i" + hbar_text + " δ_in I : CCR RECOVERED"
                                              : "[P_i,Q_n] : CCR NOT RECOVERED";

  if (a.out.format == "json") {
    json pq = json::object();
    for (int i = 0; i < 3; ++i)
      for (int n = 0; n < 3; ++n)
        pq["[P" + std::to_string(i + 1) + ",Q" + std::to_string(n + 1) + "]"] = to_string(ccr.pq[i][n]);
    json j = {{"hbar", exact::to_string(hbar)},
              {"m", exact::to_string(mass)},
              {"c", exact::to_string(c)},
              {"poincare", table_json(poincare)},
              {"contracted", table_json(contracted)},
              {"galilean", table_json(galilean)},
              {"jacobi", {{"poincare", jp.zero}, {"galilean", jg.zero}, {"contracted", jc.zero}}},
              {"ccr", {{"pq", std::move(pq)}, {"recovered", ccr.recovered()}, {"galilean_all_zero", galilean_ccr.all_zero()}}},
              {"verdict", verdict}};
    emit(a.out, dump(j), out);
  } else {
    std::ostringstream os;
    os << "Poincare brackets, eps = 1/c^2\n";
    print_table(os, poincare, [](const Combination& v) { return to_string(v); });
    os << "\nat c = " << exact::to_string(c) << "\n";
    print_table(os, poincare, [&](const Combination& v) { return format_combination_at(evaluate(v, eps), p); });
    os << "\nc -> infinity, M = hbar*eps*T0, hbar = " << exact::to_string(hbar) << ", m = " << exact::to_string(mass)
       << "\n";
    print_table(os, contracted, [](const Combination& v) { return to_string(v); });
    os << "\nGalilean brackets\n";
    print_table(os, galilean, [](const Combination& v) { return to_string(v); });
    os << "\nJacobi residual\n  " << jacobi_line(poincare) << "\n  " << jacobi_line(contracted) << "\n  "
       << jacobi_line(galilean) << "\n";
    os << "\nGalilean [P_i,Q_n] = " << (galilean_ccr.all_zero() ? "0 : no CCR" : "nonzero") << "\n";
    os << verdict << "\n";
    emit(a.out, os.str(), out);
  }
  return (jacobi_ok && ccr.recovered() && galilean_ccr.all_zero()) ? kOk : kContractViolation;
}

// ---- selftest ------------------------------------------------------------

struct SelftestArgs {
  bool list = false;
  std::vector<std::string> fixtures;
  double tolerance = 0.0;
};

int run_selftest(const SelftestArgs& a, std::ostream& out) {
  auto checks = selftest::builtin_checks();
  for (const auto& f : a.fixtures)
    for (auto& c : selftest::group_document_checks(f, a.tolerance)) checks.push_back(std::move(c));
  if (a.list) {
    for (const auto& c : checks) out << c.name << "  " << c.description << "\n";
    return kOk;
  }
  const auto results = selftest::run(checks);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) out << "  " << r.detail;
    out << "\n";
    if (!r.passed) ++failed;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kOk : kContractViolation;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spacetime-symmetry quantum toolkit: group reconstruction, interferometer, boosts, contraction", "rbw"};
  app.require_subcommand(1, 1);

  double tolerance = default_tolerance();
  const auto add_tolerance = [&](CLI::App* sub) {
    sub->add_option("--tolerance", tolerance, "absolute tolerance on residuals (RBW_TOLERANCE)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  GroupCheckArgs gc;
  auto* group_check = app.add_subcommand("group-check", "validate a group document and its irreps");
  group_check->add_option("file", gc.file, "group document")->required()->check(CLI::ExistingFile);
  add_tolerance(group_check);
  add_output_options(group_check, gc.out, "table");

  ReconstructArgs rc;
  auto* reconstruct = app.add_subcommand("reconstruct", "density matrix from irrep averages");
  reconstruct->add_option("--group", rc.group_file, "group document")->required()->check(CLI::ExistingFile);
  reconstruct->add_option("--expectations", rc.expectation_file, "expectation document")
      ->required()
      ->check(CLI::ExistingFile);
  reconstruct->add_option("--symmetry", rc.symmetry, "also report outcome probabilities of D(g)");
  add_tolerance(reconstruct);
  add_output_options(reconstruct, rc.out, "json");

  MziArgs mz;
  auto* mzi_cmd = app.add_subcommand("mzi", "run an interferometer pipeline");
  mzi_cmd->add_option("--config", mz.config, "pipeline document")->check(CLI::ExistingFile);
  mzi_cmd->add_option("--k0", mz.k0, "wave number [1/length]");
  mzi_cmd->add_option("--elements", mz.elements, "comma list: source,bs,mirrors,phase:<a>,bs,detector");
  mzi_cmd->add_option("--samples", mz.samples, "draw this many clicks");
  mzi_cmd->add_option("--seed", mz.seed, "seed for sampled clicks")->capture_default_str();
  add_output_options(mzi_cmd, mz.out, "table");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "phase-plate sweep of the full interferometer");
  sweep_cmd->add_option("--k0", sw.k0, "wave number [1/length]")->required();
  sweep_cmd->add_option("--a-min", sw.a_min, "first phase-plate length")->capture_default_str();
  sweep_cmd->add_option("--a-max", sw.a_max, "last phase-plate length")->capture_default_str();
  sweep_cmd->add_option("--steps", sw.steps, "intervals; steps+1 rows")->capture_default_str();
  sweep_cmd->add_flag("--serial", sw.serial, "use the single-threaded reference loop");
  add_output_options(sweep_cmd, sw.out, "csv");

  BoostArgs bo;
  auto* boost_cmd = app.add_subcommand("boost", "Lorentz boost of an event or an event list");
  boost_cmd->add_option("--v", bo.v, "velocity in km/s, or a fraction of c as '0.6c'")->required();
  boost_cmd->add_option("--c", bo.c, "speed of light [km/s]")->capture_default_str();
  boost_cmd->add_option("--t", bo.t, "time [s]");
  boost_cmd->add_option("--x", bo.x, "position [km]");
  boost_cmd->add_option("--events", bo.events, "event document")->check(CLI::ExistingFile);
  boost_cmd->add_option("--target-frame", bo.target, "label of the boosted frame")->capture_default_str();
  add_output_options(boost_cmd, bo.out, "table");

  OutputOptions sc;
  auto* scenario = app.add_subcommand("scenario", "the five-observer co-realness chain");
  add_output_options(scenario, sc, "table");

  ContractArgs ct;
  auto* contract_cmd = app.add_subcommand("contract", "Poincaré brackets, c -> infinity limit and CCR");
  contract_cmd->add_option("--hbar", ct.hbar, "scaling factor (exact decimal or fraction)")->capture_default_str();
  contract_cmd->add_option("--m", ct.m, "mass (exact decimal or fraction)")->capture_default_str();
  contract_cmd->add_option("--c", ct.c, "finite c for the numeric table")->capture_default_str();
  add_output_options(contract_cmd, ct.out, "table");

  SelftestArgs st;
  auto* selftest_cmd = app.add_subcommand("selftest", "run the built-in reference checks");
  selftest_cmd->add_flag("--list", st.list, "list checks without running them");
  selftest_cmd->add_option("--fixture", st.fixtures, "also check this group document")->check(CLI::ExistingFile);
  add_tolerance(selftest_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kValidationError;
  }

  try {
    gc.tolerance = rc.tolerance = st.tolerance = tolerance;
    if (*group_check) return run_group_check(gc, out);
    if (*reconstruct) return run_reconstruct(rc, out, err);
    if (*mzi_cmd) return run_mzi(mz, out);
    if (*sweep_cmd) return run_sweep(sw, out);
    if (*boost_cmd) return run_boost(bo, out);
    if (*scenario) return run_scenario(sc, out);
    if (*contract_cmd) return run_contract(ct, out);
    if (*selftest_cmd) return run_selftest(st, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_numerical() ? kContractViolation : kValidationError;
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kValidationError;
  }
  return kValidationError;
}

}  // namespace rbw::cli
