#include "rbw/mzi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace rbw::mzi {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_wave_number(double k0) {
  if (!(k0 > 0.0) || !std::isfinite(k0))
    throw Error(ErrorKind::InvalidArgument, "wave number k0 must be positive, got " + std::to_string(k0));
}

[[noreturn]] void malformed(const std::string& rule) { throw Error(ErrorKind::MalformedPipeline, rule); }

}  // namespace

Ket::Ket(Complex plus, Complex minus, double tolerance) : Ket(Eigen::Vector2cd(plus, minus), tolerance) {}

Ket::Ket(const Eigen::Vector2cd& v, double tolerance) : v_(v) {
  const double norm2 = v_.squaredNorm();
  if (std::abs(norm2 - 1.0) > tolerance)
    throw Error(ErrorKind::InvalidArgument, "ket is not normalized: |c+|^2 + |c-|^2 = " + std::to_string(norm2));
}

Matrix2 translation_op(double a, double k0) {
  Matrix2 t = Matrix2::Zero();
  t(0, 0) = std::exp(-kI * (k0 * a));
  t(1, 1) = std::exp(kI * (k0 * a));
  return t;
}

Matrix2 reflection_op(double a, double k0) {
  Matrix2 s = Matrix2::Zero();
  s(0, 1) = std::exp(-2.0 * kI * (k0 * a));
  s(1, 0) = std::exp(2.0 * kI * (k0 * a));
  return s;
}

double quarter_phase_length(double k0) {
  require_wave_number(k0);
  return std::numbers::pi / (4.0 * k0);
}

Matrix2 beam_splitter_op(double k0) {
  const double a0 = quarter_phase_length(k0);
  return (Matrix2::Identity() - kI * reflection_op(a0, k0)) / std::numbers::sqrt2;
}

std::pair<Ket, Ket> reflection_eigenkets(double a, double k0) {
  const Complex lo = std::exp(-kI * (k0 * a)) / std::numbers::sqrt2;
  const Complex hi = std::exp(kI * (k0 * a)) / std::numbers::sqrt2;
  return {Ket(lo, hi), Ket(lo, -hi)};
}

OpticalElement parse_element(const std::string& token) {
  if (token == "source") return OpticalElement::source();
  if (token == "bs") return OpticalElement::beam_splitter();
  if (token == "mirrors") return OpticalElement::mirrors();
  if (token == "detector") return OpticalElement::detector();
  if (token.rfind("phase:", 0) == 0) {
    const std::string num = token.substr(6);
    std::size_t used = 0;
    double a = 0.0;
    try {
      a = std::stod(num, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != num.size() || !std::isfinite(a))
      throw Error(ErrorKind::ParseError, "bad phase plate length in '" + token + "'");
    return OpticalElement::phase_plate(a);
  }
  throw Error(ErrorKind::ParseError, "unknown optical element '" + token + "'");
}

std::string to_string(const OpticalElement& element) {
  switch (element.kind) {
    case ElementKind::Source: return "source";
    case ElementKind::BeamSplitter: return "bs";
    case ElementKind::MirrorPair: return "mirrors";
    case ElementKind::PhasePlate: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "phase:%.17g", element.a);
      return buf;
    }
    case ElementKind::Detector: return "detector";
  }
  return "?";
}

PipelineResult run_pipeline(std::span<const OpticalElement> elements, double k0) {
  require_wave_number(k0);
  if (elements.empty() || elements.front().kind != ElementKind::Source)
    malformed("pipeline must begin with a source");
  if (elements.size() < 2 || elements.back().kind != ElementKind::Detector)
    malformed("pipeline must end with a detector");

  const Matrix2 q = beam_splitter_op(k0);
  Eigen::Vector2cd psi(1.0, 0.0);
  std::vector<Ket> stages{Ket(psi)};
  int splitters = 0;
  bool mirrors = false;
  bool phase = false;

  for (std::size_t i = 1; i + 1 < elements.size(); ++i) {
    const auto& el = elements[i];
    switch (el.kind) {
      case ElementKind::Source:
        malformed("only one source is allowed, at the start");
      case ElementKind::Detector:
        malformed("the detector must be the last element");
      case ElementKind::BeamSplitter:
        if (++splitters > 2) malformed("at most two beam splitters are allowed");
        psi = (splitters == 1 ? Matrix2(q) : Matrix2(q.adjoint())) * psi;
        break;
      case ElementKind::MirrorPair:
        if (splitters != 1) malformed("mirrors must sit between the first and second beam splitter");
        if (mirrors) malformed("at most one mirror pair is allowed");
        if (phase) malformed("mirrors must precede the phase plate");
        mirrors = true;
        psi = reflection_op(0.0, k0) * psi;
        break;
      case ElementKind::PhasePlate:
        if (splitters != 1) malformed("a phase plate must sit between the first and second beam splitter");
        if (phase) malformed("at most one phase plate is allowed");
        phase = true;
        psi = translation_op(el.a, k0) * psi;
        break;
    }
    stages.emplace_back(psi);
  }
  stages.emplace_back(psi);  // detector leaves the state unchanged

  const ClickDistribution clicks{std::norm(psi(0)), std::norm(psi(1))};
  return {Ket(psi), clicks, std::move(stages)};
}

Complex expectation_T(const Ket& ket, double a, double k0) {
  return ket.vector().dot(translation_op(a, k0) * ket.vector());
}

std::vector<DensityMatrix> density_from_sweep(double k0, std::span<const double> phase_values) {
  require_wave_number(k0);
  std::vector<DensityMatrix> out;
  out.reserve(phase_values.size());
  for (double a : phase_values) {
    const double c = std::cos(k0 * a);
    const double s = std::sin(k0 * a);
    CMatrix rho = CMatrix::Zero(2, 2);
    rho(0, 0) = c * c;
    rho(1, 1) = s * s;
    out.emplace_back(std::move(rho));
  }
  return out;
}

double hamiltonian_expectation(const DensityMatrix& rho, double energy) {
  const auto n = static_cast<Eigen::Index>(rho.dim());
  const CMatrix h = energy * CMatrix::Identity(n, n);
  return (rho.matrix() * h).trace().real();
}

double massive_energy(double hbar, double k0, double mass) {
  if (!(mass > 0.0)) throw Error(ErrorKind::InvalidArgument, "mass must be positive");
  return hbar * hbar * k0 * k0 / (2.0 * mass);
}

double photon_energy(double hbar, double k0, double c) { return hbar * k0 * c; }

namespace {

SweepRow sweep_point(double k0, double a) {
  const OpticalElement chain[] = {OpticalElement::source(),         OpticalElement::beam_splitter(),
                                  OpticalElement::mirrors(),        OpticalElement::phase_plate(a),
                                  OpticalElement::beam_splitter(),  OpticalElement::detector()};
  const PipelineResult r = run_pipeline(chain, k0);
  return {a, r.clicks.p_d1, r.clicks.p_d2, expectation_T(r.final_state, a, k0)};
}

}  // namespace

std::vector<SweepRow> sweep_serial(double k0, std::span<const double> phase_values) {
  require_wave_number(k0);
  std::vector<SweepRow> rows;
  rows.reserve(phase_values.size());
  for (double a : phase_values) rows.push_back(sweep_point(k0, a));
  return rows;
}

std::vector<SweepRow> sweep(double k0, std::span<const double> phase_values) {
  require_wave_number(k0);
  const auto count = static_cast<std::int64_t>(phase_values.size());
  std::vector<SweepRow> rows(phase_values.size());
  // sweep_point only throws on bad k0, which was checked above
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = sweep_point(k0, phase_values[static_cast<std::size_t>(i)]);
  return rows;
}

std::vector<double> linspace(double a_min, double a_max, std::size_t steps) {
  if (steps == 0) return {a_min};
  std::vector<double> out(steps + 1);
  const double h = (a_max - a_min) / static_cast<double>(steps);
  for (std::size_t i = 0; i <= steps; ++i) out[i] = a_min + h * static_cast<double>(i);
  out.back() = a_max;
  return out;
}

ClickCounts sample_clicks(const ClickDistribution& clicks, std::uint64_t shots, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution d1(std::clamp(clicks.p_d1, 0.0, 1.0));
  ClickCounts counts;
  for (std::uint64_t i = 0; i < shots; ++i) (d1(rng) ? counts.d1 : counts.d2) += 1;
  return counts;
}

}  // namespace rbw::mzi
