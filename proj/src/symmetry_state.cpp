#include "rbw/symmetry_state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace rbw {

namespace {

void require_square(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols())
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                                                  std::to_string(m.cols()) + ", expected square");
}

// Orthonormal basis of span(cluster) chosen independently of the solver's
// arbitrary rotation: repeatedly project the standard basis vector with the
// largest remaining component.
CMatrix canonical_basis(const CMatrix& cluster) {
  const Eigen::Index n = cluster.rows();
  const Eigen::Index k = cluster.cols();
  const CMatrix proj = cluster * cluster.adjoint();
  CMatrix basis(n, k);
  for (Eigen::Index c = 0; c < k; ++c) {
    double best_norm = -1.0;
    CVector best_vec;
    for (Eigen::Index i = 0; i < n; ++i) {
      CVector v = proj.col(i);
      for (Eigen::Index p = 0; p < c; ++p) v -= basis.col(p) * basis.col(p).dot(v);
      const double nv = v.norm();
      if (nv > best_norm * (1.0 + 1e-9)) {
        best_norm = nv;
        best_vec = std::move(v);
      }
    }
    basis.col(c) = best_vec / best_norm;
  }
  return basis;
}

// Rotate the phase so the first non-negligible entry is real and positive.
void fix_phase(CVector& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-9) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      return;
    }
  }
}

bool lex_greater_real(const CVector& a, const CVector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i).real() > b(i).real() + 1e-12) return true;
    if (a(i).real() < b(i).real() - 1e-12) return false;
  }
  return false;
}

// Phase of λ rounded to 12 decimals; −π folds onto +π.
long long phase_key(Complex lambda) {
  long long key = std::llround(std::arg(lambda) * 1e12);
  const long long pi_key = std::llround(std::numbers::pi * 1e12);
  if (key == -pi_key) key = pi_key;
  return key;
}

}  // namespace

ExpectationSet::ExpectationSet(std::shared_ptr<const Irrep> irrep, std::vector<Complex> values)
    : irrep_(std::move(irrep)), values_(std::move(values)) {
  if (!irrep_) throw Error(ErrorKind::InvalidArgument, "expectation set has no irrep");
  if (values_.size() != irrep_->group().order())
    throw Error(ErrorKind::InvalidArgument, "expectation set has " + std::to_string(values_.size()) +
                                                " values for a group of order " +
                                                std::to_string(irrep_->group().order()));
}

ExpectationSet ExpectationSet::from_labels(std::shared_ptr<const Irrep> irrep,
                                           const std::map<std::string, Complex>& values) {
  if (!irrep) throw Error(ErrorKind::InvalidArgument, "expectation set has no irrep");
  const Group& grp = irrep->group();
  std::vector<Complex> dense(grp.order());
  std::vector<bool> seen(grp.order(), false);
  for (const auto& [label, v] : values) {
    const auto g = grp.index(label);
    dense[g] = v;
    seen[g] = true;
  }
  for (std::size_t g = 0; g < grp.order(); ++g)
    if (!seen[g]) throw Error(ErrorKind::InvalidArgument, "no average given for '" + grp.label(g) + "'");
  return ExpectationSet(std::move(irrep), std::move(dense));
}

double ExpectationSet::conjugation_residual() const {
  const Group& grp = irrep_->group();
  double worst = 0.0;
  for (std::size_t g = 0; g < grp.order(); ++g)
    worst = std::max(worst, std::abs(values_[grp.inverse(g)] - std::conj(values_[g])));
  return worst;
}

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) { require_square(m_, "density matrix"); }

ExpectationSet expectations_from_state(const DensityMatrix& rho, std::shared_ptr<const Irrep> irrep) {
  if (!irrep) throw Error(ErrorKind::InvalidArgument, "no irrep");
  if (rho.dim() != irrep->dim())
    throw Error(ErrorKind::DimensionMismatch, "density matrix has dimension " + std::to_string(rho.dim()) +
                                                  ", irrep '" + irrep->name() + "' has dimension " +
                                                  std::to_string(irrep->dim()));
  std::vector<Complex> values(irrep->group().order());
  for (std::size_t g = 0; g < values.size(); ++g) values[g] = (rho.matrix() * irrep->matrix(g)).trace();
  return ExpectationSet(std::move(irrep), std::move(values));
}

Reconstruction reconstruct_density(const ExpectationSet& expectations, double tolerance) {
  const Irrep& irrep = expectations.irrep();
  const Group& grp = irrep.group();
  const auto n = static_cast<Eigen::Index>(irrep.dim());

  const double conj_res = expectations.conjugation_residual();
  if (conj_res > tolerance)
    throw Error(ErrorKind::InconsistentExpectations,
                "<D(g^-1)> differs from conj(<D(g)>) by " + std::to_string(conj_res));

  CMatrix rho = CMatrix::Zero(n, n);
  for (std::size_t g = 0; g < grp.order(); ++g) rho += irrep.matrix(grp.inverse(g)) * expectations.value(g);
  rho *= static_cast<double>(n) / static_cast<double>(grp.order());

  Reconstruction out{DensityMatrix(rho), 0.0, true, 0.0, {}};
  for (std::size_t g = 0; g < grp.order(); ++g) {
    const Complex back = (rho * irrep.matrix(g)).trace();
    out.consistency_residual = std::max(out.consistency_residual, std::abs(back - expectations.value(g)));
  }
  if (out.consistency_residual > tolerance)
    throw Error(ErrorKind::InconsistentExpectations,
                "reconstructed state reproduces the averages only to " + std::to_string(out.consistency_residual) +
                    "; they are not the averages of any state on irrep '" + irrep.name() + "'");

  const CMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm, Eigen::EigenvaluesOnly);
  out.min_eigenvalue = solver.eigenvalues().minCoeff();
  if (out.min_eigenvalue < kPhysicalThreshold) {
    out.physical = false;
    out.warnings.push_back("NonPhysical: smallest eigenvalue " + std::to_string(out.min_eigenvalue));
  }
  if (std::abs(rho.trace() - 1.0) > tolerance)
    out.warnings.push_back("trace is not 1 (<D(e)> = " + std::to_string(rho.trace().real()) + ")");
  return out;
}

std::vector<Eigenpair> eigendecompose(const CMatrix& rho, double tolerance) {
  require_square(rho, "density matrix");
  const double herm_res = max_abs(rho - rho.adjoint());
  if (herm_res > tolerance)
    throw Error(ErrorKind::NotHermitian, "max |rho - rho^dagger| = " + std::to_string(herm_res));

  const CMatrix herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(herm);
  const Eigen::VectorXd& w = solver.eigenvalues();  // ascending
  const CMatrix& v = solver.eigenvectors();
  const Eigen::Index n = herm.rows();

  std::vector<Eigenpair> out;
  out.reserve(static_cast<std::size_t>(n));
  // walk clusters from the largest eigenvalue down
  Eigen::Index hi = n - 1;
  while (hi >= 0) {
    Eigen::Index lo = hi;
    while (lo > 0 && std::abs(w(lo - 1) - w(hi)) <= tolerance) --lo;
    const CMatrix basis = canonical_basis(v.middleCols(lo, hi - lo + 1));
    std::vector<Eigenpair> cluster;
    for (Eigen::Index c = 0; c < basis.cols(); ++c) {
      CVector ket = basis.col(c);
      fix_phase(ket);
      const double weight = ket.dot(herm * ket).real();
      cluster.push_back({weight, std::move(ket)});
    }
    std::stable_sort(cluster.begin(), cluster.end(),
                     [](const Eigenpair& a, const Eigenpair& b) { return lex_greater_real(a.ket, b.ket); });
    for (auto& p : cluster) out.push_back(std::move(p));
    hi = lo - 1;
  }
  return out;
}

std::vector<Eigenpair> eigendecompose(const DensityMatrix& rho, double tolerance) {
  return eigendecompose(rho.matrix(), tolerance);
}

Complex eigenbasis_expectation(const std::vector<Eigenpair>& pairs, const CMatrix& symmetry) {
  Complex sum{0.0, 0.0};
  for (const auto& p : pairs) sum += p.weight * p.ket.dot(symmetry * p.ket);
  return sum;
}

UnitaryEigenbasis unitary_eigenbasis(const CMatrix& symmetry, double tolerance) {
  require_square(symmetry, "symmetry");
  const auto n = symmetry.rows();
  const double unit_res = max_abs(symmetry * symmetry.adjoint() - CMatrix::Identity(n, n));
  if (unit_res > tolerance)
    throw Error(ErrorKind::NotUnitary, "max |U U^dagger - I| = " + std::to_string(unit_res));

  // A unitary matrix is normal, so its Schur form is diagonal and the Schur
  // vectors are an orthonormal eigenbasis even for repeated eigenvalues.
  Eigen::ComplexSchur<CMatrix> schur(symmetry);
  UnitaryEigenbasis out;
  out.vectors = schur.matrixU();
  for (Eigen::Index i = 0; i < n; ++i) out.eigenvalues.push_back(schur.matrixT()(i, i));
  return out;
}

double OutcomeDistribution::total() const {
  double s = 0.0;
  for (double p : probabilities) s += p;
  return s;
}

Complex OutcomeDistribution::mean() const {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) s += eigenvalues[i] * probabilities[i];
  return s;
}

double OutcomeDistribution::probability_of(Complex lambda, double tolerance) const {
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    if (std::abs(eigenvalues[i] - lambda) <= tolerance) return probabilities[i];
  return 0.0;
}

OutcomeDistribution outcome_probabilities(const DensityMatrix& rho, const CMatrix& symmetry, double tolerance) {
  if (static_cast<std::size_t>(symmetry.rows()) != rho.dim() || symmetry.rows() != symmetry.cols())
    throw Error(ErrorKind::DimensionMismatch, "symmetry and density matrix dimensions differ");
  const UnitaryEigenbasis basis = unitary_eigenbasis(symmetry, tolerance);
  const auto pairs = eigendecompose(rho, tolerance);

  std::map<long long, std::vector<Eigen::Index>> groups;
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(basis.eigenvalues.size()); ++i)
    groups[phase_key(basis.eigenvalues[static_cast<std::size_t>(i)])].push_back(i);

  OutcomeDistribution out;
  for (const auto& [key, cols] : groups) {
    Complex lambda{0.0, 0.0};
    CMatrix space(basis.vectors.rows(), static_cast<Eigen::Index>(cols.size()));
    double p = 0.0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Eigen::Index col = cols[c];
      lambda += basis.eigenvalues[static_cast<std::size_t>(col)];
      space.col(static_cast<Eigen::Index>(c)) = basis.vectors.col(col);
      for (const auto& z : pairs) p += z.weight * std::norm(z.ket.dot(basis.vectors.col(col)));
    }
    lambda /= static_cast<double>(cols.size());
    out.eigenvalues.push_back(lambda);
    out.probabilities.push_back(p);
    out.eigenspaces.push_back(std::move(space));
  }
  return out;
}

CVector expand_eigenket(const CVector& zeta, const std::vector<CVector>& basis, double tolerance) {
  const auto n = zeta.size();
  for (const auto& b : basis)
    if (b.size() != n) throw Error(ErrorKind::DimensionMismatch, "basis vector dimension differs from ket");
  double worst = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Complex g = basis[i].dot(basis[j]);
      worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
    }
  if (worst > tolerance)
    throw Error(ErrorKind::NonOrthonormalBasis, "Gram matrix deviates from identity by " + std::to_string(worst));
  CVector coeffs(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) coeffs(static_cast<Eigen::Index>(i)) = basis[i].dot(zeta);
  return coeffs;
}

}  // namespace rbw
