#include "rbw/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "rbw/common.hpp"

namespace rbw::exact {

namespace {

boost::multiprecision::cpp_int pow10(unsigned k) {
  boost::multiprecision::cpp_int p = 1;
  for (unsigned i = 0; i < k; ++i) p *= 10;
  return p;
}

[[noreturn]] void bad_number(const std::string& text) {
  throw Error(ErrorKind::ParseError, "not a number: '" + text + "'");
}

Rational parse_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.erase(0, 1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    const std::string ex = s.substr(e + 1);
    s.resize(e);
    std::size_t used = 0;
    try {
      exponent = std::stol(ex, &used);
    } catch (const std::exception&) {
      bad_number(text);
    }
    if (used != ex.size()) bad_number(text);
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (char ch : s) {
    if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) ++frac_digits;
    } else {
      bad_number(text);
    }
  }
  if (digits.empty()) bad_number(text);
  // cpp_int reads a leading 0 as an octal prefix
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
  boost::multiprecision::cpp_int num(digits);
  const long shift = exponent - frac_digits;
  Rational q = shift >= 0 ? Rational(num * pow10(static_cast<unsigned>(shift)))
                          : Rational(num, pow10(static_cast<unsigned>(-shift)));
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return parse_decimal(text.substr(0, slash)) / den;
  }
  return parse_decimal(text);
}

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
  const Rational den = b.re * b.re + b.im * b.im;
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  const ComplexRational num = a * b.conj();
  return {num.re / den, num.im / den};
}

std::string to_string(const ComplexRational& z) {
  if (z.im == 0) return to_string(z.re);
  std::string imag;
  if (z.im == 1) imag = "i";
  else if (z.im == -1) imag = "-i";
  else imag = to_string(z.im) + "i";
  if (z.re == 0) return imag;
  std::string out = "(" + to_string(z.re);
  if (imag[0] != '-') out += "+";
  return out + imag + ")";
}

EpsPoly::EpsPoly(ComplexRational constant) : c_{std::move(constant)} { trim(); }

EpsPoly EpsPoly::monomial(ComplexRational coeff, std::size_t degree) {
  EpsPoly p;
  p.c_.assign(degree + 1, ComplexRational());
  p.c_[degree] = std::move(coeff);
  p.trim();
  return p;
}

void EpsPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ComplexRational EpsPoly::evaluate(const Rational& eps) const {
  ComplexRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * ComplexRational(eps) + *it;
  return acc;
}

EpsPoly EpsPoly::divide_by_eps() const {
  if (!at_zero().is_zero())
    throw Error(ErrorKind::IllDefinedContraction,
                "coefficient " + to_string() + " does not vanish at eps = 0; the limit diverges");
  EpsPoly p;
  if (c_.size() > 1) p.c_.assign(c_.begin() + 1, c_.end());
  return p;
}

double EpsPoly::max_magnitude() const {
  double m = 0.0;
  for (const auto& z : c_) m = std::max(m, z.magnitude());
  return m;
}

EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly out;
  out.c_.resize(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < out.c_.size(); ++k) out.c_[k] = a.coeff(k) + b.coeff(k);
  out.trim();
  return out;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly out = *this;
  for (auto& z : out.c_) z = -z;
  return out;
}

EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + (-b); }

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  EpsPoly out;
  out.c_.assign(a.c_.size() + b.c_.size() - 1, ComplexRational());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  out.trim();
  return out;
}

std::string EpsPoly::to_string(const std::string& symbol) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].is_zero()) continue;
    std::string coeff = exact::to_string(c_[k]);
    if (!out.empty()) {
      if (coeff[0] == '-') {
        out += " - ";
        coeff.erase(0, 1);
      } else {
        out += " + ";
      }
    }
    if (k == 0) {
      out += coeff;
      continue;
    }
    const std::string mono = k == 1 ? symbol : symbol + "^" + std::to_string(k);
    if (coeff == "1") out += mono;
    else if (coeff == "-1") out += "-" + mono;
    else out += coeff + "*" + mono;
  }
  return out;
}

}  // namespace rbw::exact
