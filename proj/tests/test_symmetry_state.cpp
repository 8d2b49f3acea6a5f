#include "doctest.h"

#include <random>

#include "rbw/builtin.hpp"
#include "rbw/symmetry_state.hpp"
#include "support.hpp"

using namespace rbw;

namespace {

// Tr(rho D(g)) computed directly, independent of expectations_from_state.
std::vector<Complex> averages(const CMatrix& rho, const Irrep& irrep) {
  std::vector<Complex> v;
  for (std::size_t g = 0; g < irrep.group().order(); ++g) v.push_back((rho * irrep.matrix(g)).trace());
  return v;
}

}  // namespace

TEST_CASE("Z2 sign irrep: <D(r)> = -1 gives rho = [1]") {
  const auto doc = builtin::z2_group();
  const ExpectationSet e(doc.irrep("sign"), {1.0, -1.0});
  const auto rec = reconstruct_density(e);
  CHECK(rec.rho.dim() == 1);
  CHECK(std::abs(rec.rho.matrix()(0, 0) - 1.0) < 1e-15);
  CHECK(rec.physical);
  CHECK(rec.warnings.empty());
}

TEST_CASE("averages that no state produces are rejected") {
  const auto doc = builtin::z2_group();
  const ExpectationSet e(doc.irrep("sign"), {1.0, 0.5});
  try {
    reconstruct_density(e);
    FAIL("expected InconsistentExpectations");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::InconsistentExpectations);
    CHECK(err.is_numerical());
  }
}

TEST_CASE("averages violating <D(g^-1)> = conj <D(g)> are rejected") {
  const auto doc = builtin::s3_group();
  const auto irrep = doc.irrep("standard");
  std::mt19937_64 rng(3);
  auto v = averages(oracle::random_density(rng, 2), *irrep);
  v[doc.group->index("231")] += Complex(0.0, 0.3);
  CHECK_THROWS_AS(reconstruct_density(ExpectationSet(irrep, v)), Error);
}

TEST_CASE("expectation vector length must match the group") {
  const auto doc = builtin::z2_group();
  CHECK_THROWS_AS(ExpectationSet(doc.irrep("sign"), {1.0}), Error);
}

TEST_CASE("maximally mixed state is reconstructed") {
  const auto doc = builtin::s3_group();
  const auto irrep = doc.irrep("standard");
  const CMatrix rho = CMatrix::Identity(2, 2) / 2.0;
  const auto rec = reconstruct_density(ExpectationSet(irrep, averages(rho, *irrep)));
  CHECK(max_abs(rec.rho.matrix() - rho) < 1e-14);
  const auto eig = eigendecompose(rec.rho);
  REQUIRE(eig.size() == 2);
  CHECK(eig[0].weight == doctest::Approx(0.5));
  CHECK(eig[1].weight == doctest::Approx(0.5));
  // Degenerate cluster gets the canonical basis.
  CHECK(max_abs(eig[0].ket - CMatrix::Identity(2, 2).col(0)) < 1e-14);
  CHECK(max_abs(eig[1].ket - CMatrix::Identity(2, 2).col(1)) < 1e-14);
}

TEST_CASE("property: reconstruction roundtrip on every builtin irrep") {
  std::mt19937_64 rng(20260101);
  for (const auto& doc : {builtin::trivial_group(), builtin::z2_group(), builtin::s3_group()}) {
    for (const auto& [name, irrep] : doc.irreps) {
      CAPTURE(name);
      const int n = static_cast<int>(irrep->dim());
      for (int trial = 0; trial < 50; ++trial) {
        const CMatrix rho = trial % 5 == 0 ? oracle::random_pure(rng, n) : oracle::random_density(rng, n);
        const auto rec = reconstruct_density(ExpectationSet(irrep, averages(rho, *irrep)));
        CHECK((rec.rho.matrix() - rho).norm() < 1e-10);
        CHECK(rec.rho.hermiticity_residual() < 1e-12);
        CHECK(std::abs(rec.rho.trace() - 1.0) < 1e-12);
        CHECK(rec.physical);
      }
    }
  }
}

TEST_CASE("property: eigenbasis and outcome forms of <D(g)> agree") {
  std::mt19937_64 rng(99);
  const auto doc = builtin::s3_group();
  const auto irrep = doc.irrep("standard");
  for (int trial = 0; trial < 30; ++trial) {
    const DensityMatrix rho(oracle::random_density(rng, 2));
    const auto pairs = eigendecompose(rho);
    double wsum = 0.0;
    for (const auto& p : pairs) wsum += p.weight;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t g = 0; g < doc.group->order(); ++g) {
      const Complex direct = (rho.matrix() * irrep->matrix(g)).trace();
      CHECK(std::abs(eigenbasis_expectation(pairs, irrep->matrix(g)) - direct) < 1e-10);
      const auto dist = outcome_probabilities(rho, irrep->matrix(g));
      CHECK(std::abs(dist.total() - 1.0) < 1e-10);
      CHECK(std::abs(dist.mean() - direct) < 1e-10);
      for (double p : dist.probabilities) CHECK(p >= -1e-12);
    }
  }
}

TEST_CASE("outcome probabilities merge degenerate eigenvalues") {
  const auto doc = builtin::s3_group();
  const auto irrep = doc.irrep("standard");
  const DensityMatrix rho(CMatrix::Identity(2, 2) / 2.0);
  const auto id = outcome_probabilities(rho, irrep->matrix("123"));
  REQUIRE(id.eigenvalues.size() == 1);
  CHECK(id.probabilities[0] == doctest::Approx(1.0));
  CHECK(id.eigenspaces[0].cols() == 2);
  // A transposition has eigenvalues +1 and -1.
  const auto tr = outcome_probabilities(rho, irrep->matrix("213"));
  REQUIRE(tr.eigenvalues.size() == 2);
  CHECK(tr.probability_of(1.0) == doctest::Approx(0.5));
  CHECK(tr.probability_of(-1.0) == doctest::Approx(0.5));
  CHECK(tr.probability_of(Complex(0.0, 1.0)) == 0.0);
}

TEST_CASE("eigendecompose and unitary eigenbasis validate input") {
  CMatrix m(2, 2);
  m << 1.0, 2.0, 0.0, 1.0;
  CHECK_THROWS_AS(eigendecompose(m), Error);
  CHECK_THROWS_AS(unitary_eigenbasis(m), Error);
  CHECK_THROWS_AS(outcome_probabilities(DensityMatrix(CMatrix::Identity(2, 2) / 2.0), CMatrix::Identity(3, 3)), Error);
}

TEST_CASE("unitary eigenbasis diagonalizes") {
  const auto doc = builtin::s3_group();
  const CMatrix u = doc.irrep("standard")->matrix("231");
  const auto ub = unitary_eigenbasis(u);
  REQUIRE(ub.eigenvalues.size() == 2);
  for (int k = 0; k < 2; ++k) {
    CHECK(std::abs(std::abs(ub.eigenvalues[k]) - 1.0) < 1e-12);
    CHECK((u * ub.vectors.col(k) - ub.eigenvalues[k] * ub.vectors.col(k)).norm() < 1e-12);
  }
  CHECK(max_abs(ub.vectors.adjoint() * ub.vectors - CMatrix::Identity(2, 2)) < 1e-12);
}

TEST_CASE("expand_eigenket") {
  std::vector<CVector> basis{CVector::Unit(2, 0), CVector::Unit(2, 1)};
  CVector z(2);
  z << Complex(0.6, 0.0), Complex(0.0, 0.8);
  CHECK((expand_eigenket(z, basis) - z).norm() < 1e-15);
  basis[1] = CVector::Unit(2, 0);
  CHECK_THROWS_AS(expand_eigenket(z, basis), Error);
}

TEST_CASE("non-physical averages give a warning, not an error") {
  // Hermitian, unit trace, but an eigenvalue of -0.2.
  const auto doc = builtin::s3_group();
  const auto irrep = doc.irrep("standard");
  CMatrix rho(2, 2);
  rho << 1.2, 0.0, 0.0, -0.2;
  const auto rec = reconstruct_density(ExpectationSet(irrep, averages(rho, *irrep)));
  CHECK_FALSE(rec.physical);
  CHECK(rec.min_eigenvalue == doctest::Approx(-0.2));
  CHECK_FALSE(rec.warnings.empty());
}
