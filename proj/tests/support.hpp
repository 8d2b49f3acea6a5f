#pragma once

// Independent oracles shared by the test suites. Nothing here calls into the
// code under test except for plain data types.

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

/// A random density matrix of dimension n and (generically) full rank: A A† / Tr.
inline CMatrix random_density(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  CMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a(r, c) = {g(rng), g(rng)};
  CMatrix rho = a * a.adjoint();
  return rho / rho.trace().real();
}

/// A random pure state projector |v><v|.
inline CMatrix random_pure(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd v(n);
  for (int k = 0; k < n; ++k) v(k) = {g(rng), g(rng)};
  v.normalize();
  return v * v.adjoint();
}

/// S3 by brute force: all permutations of {1,2,3} in one-line notation,
/// composed right to left, with their 3x3 permutation matrices.
struct S3 {
  std::vector<std::array<int, 3>> perms;

  S3() {
    std::array<int, 3> p{1, 2, 3};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  static std::string label(const std::array<int, 3>& p) {
    return std::to_string(p[0]) + std::to_string(p[1]) + std::to_string(p[2]);
  }

  static std::array<int, 3> compose(const std::array<int, 3>& g, const std::array<int, 3>& h) {
    return {g[h[0] - 1], g[h[1] - 1], g[h[2] - 1]};
  }

  static int fixed_points(const std::array<int, 3>& p) { return (p[0] == 1) + (p[1] == 2) + (p[2] == 3); }

  static double parity(const std::array<int, 3>& p) {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
    return inversions % 2 ? -1.0 : 1.0;
  }

  static Eigen::Matrix3d permutation_matrix(const std::array<int, 3>& p) {
    Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
    for (int x = 0; x < 3; ++x) m(p[x] - 1, x) = 1.0;
    return m;
  }

  /// Characters by irrep name: trivial 1, sign parity, standard (fixed points - 1).
  std::map<std::string, std::map<std::string, double>> characters() const {
    std::map<std::string, std::map<std::string, double>> chi;
    for (const auto& p : perms) {
      chi["trivial"][label(p)] = 1.0;
      chi["sign"][label(p)] = parity(p);
      chi["standard"][label(p)] = fixed_points(p) - 1.0;
    }
    return chi;
  }
};

}  // namespace oracle
