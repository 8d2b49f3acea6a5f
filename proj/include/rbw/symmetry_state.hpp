#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rbw/common.hpp"
#include "rbw/grouprep.hpp"

namespace rbw {

/// Measured averages ⟨D(g)⟩ of an irrep, one per group element.
class ExpectationSet {
 public:
  /// values[g] is ⟨D(g)⟩ for element index g. Throws InvalidArgument if the
  /// count does not match the group order.
  ExpectationSet(std::shared_ptr<const Irrep> irrep, std::vector<Complex> values);

  /// Keyed by element label; every element must be present.
  static ExpectationSet from_labels(std::shared_ptr<const Irrep> irrep,
                                    const std::map<std::string, Complex>& values);

  const Irrep& irrep() const noexcept { return *irrep_; }
  const std::shared_ptr<const Irrep>& irrep_ptr() const noexcept { return irrep_; }
  const std::vector<Complex>& values() const noexcept { return values_; }
  Complex value(std::size_t g) const { return values_.at(g); }
  Complex value(const std::string& label) const { return values_.at(irrep_->group().index(label)); }

  /// max_g |⟨D(g⁻¹)⟩ − ⟨D(g)⟩*|
  double conjugation_residual() const;

 private:
  std::shared_ptr<const Irrep> irrep_;
  std::vector<Complex> values_;
};

/// Square complex matrix standing for ρ. Hermiticity, trace and positivity are
/// reported, not enforced, so that noisy reconstructions can still be held.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const noexcept { return m_; }
  Complex trace() const { return m_.trace(); }
  double hermiticity_residual() const { return max_abs(m_ - m_.adjoint()); }

 private:
  CMatrix m_;
};

ExpectationSet expectations_from_state(const DensityMatrix& rho, std::shared_ptr<const Irrep> irrep);

struct Reconstruction {
  DensityMatrix rho;
  double min_eigenvalue = 0.0;
  bool physical = true;             // all eigenvalues ≥ physical threshold
  double consistency_residual = 0.0;  // max_g |Tr{ρ D(g)} − ⟨D(g)⟩|
  std::vector<std::string> warnings;
};

/// Eigenvalues below this are reported as non-physical.
inline constexpr double kPhysicalThreshold = -1e-8;

/// ρ = (n/N) Σ_g D(g⁻¹) ⟨D(g)⟩.
/// Throws InconsistentExpectations when ⟨D(g⁻¹)⟩ ≠ ⟨D(g)⟩* or when the result does
/// not reproduce the input averages (the averages lie outside the span of the irrep).
Reconstruction reconstruct_density(const ExpectationSet& expectations, double tolerance = default_tolerance());

struct Eigenpair {
  double weight;  // w(ζ)
  CVector ket;    // |ζ⟩
};

/// Hermitian eigendecomposition, weights descending. Eigenvectors are fixed
/// canonically: inside each (near-)degenerate cluster the basis is obtained by
/// pivoted projection of the standard basis, then sorted lexicographically by
/// the real parts of the entries. Throws NotHermitian.
std::vector<Eigenpair> eigendecompose(const CMatrix& rho, double tolerance = default_tolerance());
std::vector<Eigenpair> eigendecompose(const DensityMatrix& rho, double tolerance = default_tolerance());

/// Σ_ζ w(ζ) ⟨ζ|D|ζ⟩, the average of D evaluated in the eigenbasis of ρ.
Complex eigenbasis_expectation(const std::vector<Eigenpair>& pairs, const CMatrix& symmetry);

/// Eigenvalues and orthonormal eigenvectors (columns) of a unitary matrix.
struct UnitaryEigenbasis {
  std::vector<Complex> eigenvalues;
  CMatrix vectors;
};

/// Throws NotUnitary.
UnitaryEigenbasis unitary_eigenbasis(const CMatrix& symmetry, double tolerance = default_tolerance());

struct OutcomeDistribution {
  std::vector<Complex> eigenvalues;     // distinct λ_i, sorted by phase
  std::vector<double> probabilities;    // p(λ_i)
  std::vector<CMatrix> eigenspaces;     // orthonormal columns spanning each eigenspace

  double total() const;
  Complex mean() const;  // Σ λ_i p(λ_i)
  /// p(λ) for the outcome whose eigenvalue is within `tolerance` of λ, 0 if none.
  double probability_of(Complex lambda, double tolerance = 1e-9) const;
};

/// p(λ_j) = Σ_ζ w(ζ) |⟨ζ|λ_j⟩|², degenerate λ merged by phase rounded to 12
/// decimals. Throws NotUnitary, DimensionMismatch.
OutcomeDistribution outcome_probabilities(const DensityMatrix& rho, const CMatrix& symmetry,
                                          double tolerance = default_tolerance());

/// Coefficients ⟨λ_i|ζ⟩. Throws NonOrthonormalBasis, DimensionMismatch.
CVector expand_eigenket(const CVector& zeta, const std::vector<CVector>& basis,
                        double tolerance = default_tolerance());

}  // namespace rbw
