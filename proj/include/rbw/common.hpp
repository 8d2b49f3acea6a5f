#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace rbw {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

enum class ErrorKind {
  MissingIdentity,
  MissingInverse,
  NonAssociative,
  NonClosed,
  UnknownElement,
  DimensionMismatch,
  InconsistentExpectations,
  NotHermitian,
  NotUnitary,
  NonOrthonormalBasis,
  MalformedPipeline,
  SuperluminalVelocity,
  MixedFrames,
  UnknownGenerator,
  MNotCentral,
  IllDefinedContraction,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. Structural problems (bad tables, bad
/// documents) and numerical contract violations share this type and are told
/// apart through kind() / is_numerical().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }
  bool is_numerical() const noexcept;

 private:
  ErrorKind kind_;
};

/// 1e-10 unless the RBW_TOLERANCE environment variable holds a positive number.
double default_tolerance();

/// Largest entrywise modulus.
double max_abs(const CMatrix& m);

}  // namespace rbw
