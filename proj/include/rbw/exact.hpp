#pragma once

#include <complex>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rbw::exact {

using Rational = boost::multiprecision::cpp_rational;

/// Parses integers, fractions ("3/4"), decimals and scientific notation
/// ("1.054571817e-34") into an exact rational. Throws ParseError.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

/// Gaussian rational re + i·im.
struct ComplexRational {
  Rational re{0};
  Rational im{0};

  ComplexRational() = default;
  ComplexRational(Rational r, Rational i = Rational(0)) : re(std::move(r)), im(std::move(i)) {}
  ComplexRational(int r) : re(r) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  ComplexRational conj() const { return {re, -im}; }
  std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
  /// |z| as a double; exactness is only needed for the zero test.
  double magnitude() const { return std::abs(to_complex()); }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b);
  ComplexRational operator-() const { return {-re, -im}; }
  ComplexRational& operator+=(const ComplexRational& b) { return *this = *this + b; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const ComplexRational& z);

/// Polynomial in ε = 1/c² with Gaussian-rational coefficients. Trailing zero
/// coefficients are never stored, so the zero polynomial has no coefficients.
class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(ComplexRational constant);
  EpsPoly(int constant) : EpsPoly(ComplexRational(constant)) {}
  static EpsPoly monomial(ComplexRational coeff, std::size_t degree);
  static EpsPoly eps() { return monomial(ComplexRational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  /// −1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  ComplexRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ComplexRational(); }
  const std::vector<ComplexRational>& coefficients() const { return c_; }

  ComplexRational evaluate(const Rational& eps) const;
  ComplexRational at_zero() const { return coeff(0); }
  /// p(ε)/ε; throws IllDefinedContraction if p(0) ≠ 0.
  EpsPoly divide_by_eps() const;
  /// Largest coefficient magnitude over all degrees.
  double max_magnitude() const;

  friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& b) { return *this = *this + b; }
  friend bool operator==(const EpsPoly& a, const EpsPoly& b) { return a.c_ == b.c_; }

  /// e.g. "i", "-i*eps", "(1/2+i)*eps^2 + 3"
  std::string to_string(const std::string& symbol = "eps") const;

 private:
  void trim();
  std::vector<ComplexRational> c_;
};

}  // namespace rbw::exact
