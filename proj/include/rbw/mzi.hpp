#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rbw/common.hpp"
#include "rbw/symmetry_state.hpp"

namespace rbw::mzi {

using Matrix2 = Eigen::Matrix2cd;

/// Amplitudes in the translation eigenbasis {|+⟩, |−⟩}.
class Ket {
 public:
  /// Throws InvalidArgument unless |c₊|² + |c₋|² = 1 within tolerance.
  Ket(Complex plus, Complex minus, double tolerance = default_tolerance());
  explicit Ket(const Eigen::Vector2cd& v, double tolerance = default_tolerance());

  static Ket plus_state() { return Ket(1.0, 0.0); }
  static Ket minus_state() { return Ket(0.0, 1.0); }

  Complex plus() const noexcept { return v_(0); }
  Complex minus() const noexcept { return v_(1); }
  const Eigen::Vector2cd& vector() const noexcept { return v_; }
  double norm() const { return v_.norm(); }

 private:
  Eigen::Vector2cd v_;
};

/// T(a) = diag(e^{−ik₀a}, e^{ik₀a})
Matrix2 translation_op(double a, double k0);
/// S(a) = [[0, e^{−2ik₀a}], [e^{2ik₀a}, 0]]
Matrix2 reflection_op(double a, double k0);
/// a₀ = π/(4k₀), one eighth of a wavelength.
double quarter_phase_length(double k0);
/// Q(a₀) = (I − i S(a₀))/√2
Matrix2 beam_splitter_op(double k0);

/// Eigenkets of S(a) in the T basis, eigenvalue +1 then −1.
std::pair<Ket, Ket> reflection_eigenkets(double a, double k0);

enum class ElementKind { Source, BeamSplitter, MirrorPair, PhasePlate, Detector };

struct OpticalElement {
  ElementKind kind;
  double a = 0.0;  // phase plate translation length

  static OpticalElement source() { return {ElementKind::Source}; }
  static OpticalElement beam_splitter() { return {ElementKind::BeamSplitter}; }
  static OpticalElement mirrors() { return {ElementKind::MirrorPair}; }
  static OpticalElement phase_plate(double a) { return {ElementKind::PhasePlate, a}; }
  static OpticalElement detector() { return {ElementKind::Detector}; }
};

/// Parses "source", "bs", "mirrors", "phase:<a>", "detector".
OpticalElement parse_element(const std::string& token);
std::string to_string(const OpticalElement& element);

struct ClickDistribution {
  double p_d1 = 0.0;
  double p_d2 = 0.0;
};

struct PipelineResult {
  Ket final_state;
  ClickDistribution clicks;
  std::vector<Ket> stages;  // state after each element, source included
};

/// Accepts Source [BS [Mirrors] [Phase] [BS]] Detector. The first beam splitter
/// applies Q(a₀), the second Q†(a₀), mirrors S(0), a phase plate T(a).
/// Throws MalformedPipeline naming the violated rule.
PipelineResult run_pipeline(std::span<const OpticalElement> elements, double k0);

/// ⟨ket|T(a)|ket⟩
Complex expectation_T(const Ket& ket, double a, double k0);

/// ρ(a) = cos²(k₀a)|+⟩⟨+| + sin²(k₀a)|−⟩⟨−| for each a.
std::vector<DensityMatrix> density_from_sweep(double k0, std::span<const double> phase_values);

/// Tr{ρ E I}
double hamiltonian_expectation(const DensityMatrix& rho, double energy);
/// ħ²k₀²/2m
double massive_energy(double hbar, double k0, double mass);
/// ħk₀c
double photon_energy(double hbar, double k0, double c);

struct SweepRow {
  double a;
  double p_d1;
  double p_d2;
  Complex t_expectation;  // ⟨ψ_f|T(a)|ψ_f⟩
};

/// Full interferometer with a phase plate at each a. sweep() runs the points
/// in parallel (OpenMP when available); sweep_serial() is the reference loop.
/// Both return rows in input order and agree bit for bit.
std::vector<SweepRow> sweep(double k0, std::span<const double> phase_values);
std::vector<SweepRow> sweep_serial(double k0, std::span<const double> phase_values);

/// steps+1 evenly spaced points from a_min to a_max inclusive.
std::vector<double> linspace(double a_min, double a_max, std::size_t steps);

struct ClickCounts {
  std::uint64_t d1 = 0;
  std::uint64_t d2 = 0;
};

/// Draws `shots` independent clicks from the distribution with a seeded mt19937_64.
ClickCounts sample_clicks(const ClickDistribution& clicks, std::uint64_t shots, std::uint64_t seed);

}  // namespace rbw::mzi
