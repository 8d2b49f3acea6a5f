#include "doctest.h"

#include <Eigen/Dense>
#include <algorithm>
#include <map>

#include "rbw/common.hpp"
#include "rbw/contraction.hpp"

using namespace rbw;
using namespace rbw::contraction;

namespace {

const ComplexRational I = ComplexRational::i();

// Affine 5x5 realization of the Poincare algebra on (t, x, y, z, 1) with
// eps = 1/c^2: rotations, boosts t -> x/c^2, x -> t, spatial and time
// translations. Hermitian-convention generators are i times these, with T0
// carrying the opposite sign.
using M5 = Eigen::Matrix<std::complex<double>, 5, 5>;

M5 unit(int r, int c) {
  M5 m = M5::Zero();
  m(r, c) = 1.0;
  return m;
}

std::map<std::string, M5> realization(double eps) {
  const std::complex<double> i{0.0, 1.0};
  std::map<std::string, M5> g;
  g["J1"] = i * (unit(3, 2) - unit(2, 3));
  g["J2"] = i * (unit(1, 3) - unit(3, 1));
  g["J3"] = i * (unit(2, 1) - unit(1, 2));
  for (int k = 1; k <= 3; ++k) {
    g["K" + std::to_string(k)] = i * (eps * unit(0, k) + unit(k, 0));
    g["T" + std::to_string(k)] = i * unit(k, 4);
  }
  g["T0"] = -i * unit(0, 4);
  return g;
}

M5 realize(const Combination& c, const std::map<std::string, M5>& g, const Rational& eps) {
  M5 m = M5::Zero();
  for (const auto& [name, coeff] : evaluate(c, eps)) m += coeff.at_zero().to_complex() * g.at(name);
  return m;
}

double realization_residual(const BracketTable& t, const Rational& eps) {
  const auto g = realization(exact::to_double(eps));
  double worst = 0.0;
  for (const auto& x : t.generators())
    for (const auto& y : t.generators()) {
      const M5 lhs = g.at(x) * g.at(y) - g.at(y) * g.at(x);
      worst = std::max(worst, (lhs - realize(t.bracket(x, y), g, eps)).cwiseAbs().maxCoeff());
    }
  return worst;
}

}  // namespace

TEST_CASE("exact arithmetic") {
  CHECK(exact::parse_rational("0.125") == Rational(1, 8));
  CHECK(exact::parse_rational("-3/4") == Rational(-3, 4));
  CHECK(exact::parse_rational("1e-3") == Rational(1, 1000));
  CHECK_THROWS_AS(exact::parse_rational("x"), Error);
  CHECK(I * I == ComplexRational(-1));
  const EpsPoly p = EpsPoly(2) + EpsPoly::monomial(I, 2);
  CHECK(p.degree() == 2);
  CHECK(p.evaluate(Rational(1, 2)) == ComplexRational(2, Rational(1, 4)));
  CHECK((p - p).is_zero());
  CHECK_THROWS_AS(p.divide_by_eps(), Error);
  CHECK((EpsPoly::monomial(I, 1)).divide_by_eps() == EpsPoly(I));
}

TEST_CASE("Poincare table is realized by 5x5 matrices at finite c") {
  const auto t = poincare_table();
  CHECK(realization_residual(t, Rational(1, 9)) < 1e-14);
  CHECK(realization_residual(t, Rational(1, 90000) / 1000000) < 1e-14);
}

TEST_CASE("the opposite [T_i,K_i] sign is not a Lie algebra") {
  auto t = poincare_table();
  for (const char* k : {"1", "2", "3"})
    t.set(std::string("T") + k, std::string("K") + k, term("T0", EpsPoly::monomial(-I, 1)));
  const auto j = jacobi_residual(t);
  CHECK_FALSE(j.zero);
  CHECK(realization_residual(t, Rational(1, 9)) > 0.1);
}

TEST_CASE("Jacobi residual is exactly zero on all three tables") {
  for (const auto& t : {poincare_table(), galilean_table(), contract(poincare_table(), 1, 1),
                        contract(poincare_table(), Rational(1, 3), Rational(7, 2))}) {
    CAPTURE(t.name());
    const auto r = jacobi_residual(t);
    CHECK(r.zero);
    CHECK(r.antisymmetric);
    CHECK(r.max_magnitude == 0.0);
  }
}

TEST_CASE("bracket table entries") {
  const auto p = poincare_table();
  CHECK(p.bracket("J1", "J2") == term("J3", I));
  CHECK(p.bracket("J2", "J1") == term("J3", -I));
  CHECK(p.bracket("K1", "K2") == term("J3", EpsPoly::monomial(-I, 1)));
  CHECK(p.bracket("T1", "K1") == term("T0", EpsPoly::monomial(I, 1)));
  CHECK(p.bracket("T1", "K2").empty());
  CHECK(p.bracket("K1", "T0") == term("T1", -I));
  CHECK(p.bracket("J1", "J1").empty());
  CHECK_THROWS_AS(p.bracket("J1", "Z9"), Error);

  const auto g = galilean_table();
  CHECK(g.bracket("K1", "K2").empty());
  CHECK(g.bracket("T1", "K1").empty());
  CHECK(g.bracket("K1", "T0") == term("T1", -I));
}

TEST_CASE("contraction replaces T0 by a central M") {
  const Rational hbar(2, 5);
  const auto c = contract(poincare_table(), hbar, 3);
  CHECK(c.has("M"));
  CHECK(c.has("I"));
  CHECK(c.bracket("T1", "K1") == term("M", EpsPoly(I * ComplexRational(1 / hbar))));
  CHECK(c.bracket("K1", "K2").empty());
  for (const auto& x : c.generators()) {
    CHECK(c.bracket("M", x).empty());
    CHECK(c.bracket("I", x).empty());
  }
}

TEST_CASE("CCR on the contracted table and none on the Galilean one") {
  for (const Rational& hbar : {Rational(1), Rational(1, 7), Rational(3)}) {
    const Rational m(5, 2);
    const auto r = ccr_check(contract(poincare_table(), hbar, m), hbar, m);
    CHECK(r.recovered());
    for (int i = 0; i < 3; ++i)
      for (int n = 0; n < 3; ++n) {
        const Combination want = i == n ? term("I", EpsPoly(-I * ComplexRational(hbar))) : Combination{};
        CHECK(r.pq[i][n] == want);
        CHECK(is_zero(r.pp[i][n]));
        CHECK(is_zero(r.qq[i][n]));
      }
    const auto both = ccr_define_then_contract(poincare_table(), hbar, m);
    CHECK(both.recovered());
    CHECK(both.pq == r.pq);
    CHECK(ccr_check(galilean_table(), hbar, m).all_zero());
  }
}

TEST_CASE("non-central M is detected") {
  auto c = contract(poincare_table(), 1, 1);
  c.set("M", "K1", term("T1"));
  CHECK_THROWS_AS(ccr_check(c, 1, 1), Error);
}

TEST_CASE("property: bracket is bilinear and antisymmetric") {
  const auto p = poincare_table();
  const Combination a = add(term("J1", 2), add(term("K2", I), term("T3", EpsPoly::eps())));
  const Combination b = add(term("K1", 3), term("T0", -I));
  const Combination c = add(term("J3", 1), term("T1", 5));
  CHECK(p.bracket(a, add(b, c)) == add(p.bracket(a, b), p.bracket(a, c)));
  CHECK(p.bracket(a, b) == scale(p.bracket(b, a), -1));
  CHECK(p.bracket(scale(a, I), b) == scale(p.bracket(a, b), I));
}

TEST_CASE("weak boost") {
  const auto w = weak_boost_transform(2.0, 10.0, 3.0, std::numeric_limits<double>::infinity());
  CHECK(w.t == 2.0);
  CHECK(w.x == 4.0);
  const auto f = weak_boost_transform(0.0, 1000.0, 180000.0, 300000.0);
  CHECK(f.t == doctest::Approx(-0.002));  // first order: no gamma
}

TEST_CASE("a single flipped entry is reported with its triple") {
  auto t = poincare_table();
  t.set("T1", "K1", term("T0", EpsPoly::monomial(-I, 1)));
  const auto j = jacobi_residual(t);
  CHECK_FALSE(j.zero);
  REQUIRE(j.worst_triple.has_value());
  const auto& tr = *j.worst_triple;
  CHECK(std::count(tr.begin(), tr.end(), "T1") + std::count(tr.begin(), tr.end(), "K1") >= 1);
  CHECK_FALSE(is_zero(j.worst_value));
}
