#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rbw/exact.hpp"

namespace rbw::contraction {

using exact::ComplexRational;
using exact::EpsPoly;
using exact::Rational;

/// Linear combination of generators, label -> coefficient. Zero terms are dropped.
using Combination = std::map<std::string, EpsPoly>;

Combination term(const std::string& generator, EpsPoly coeff = EpsPoly(1));
Combination add(const Combination& a, const Combination& b);
Combination scale(const Combination& a, const EpsPoly& s);
bool is_zero(const Combination& c);
/// Every coefficient evaluated at ε (e.g. 1/c², or 0 for the limit).
Combination evaluate(const Combination& c, const Rational& eps);
std::string to_string(const Combination& c, const std::string& symbol = "eps");

/// Structure constants stored as the listed ordered pairs; bracket() supplies
/// the antisymmetric partner and zero for anything unlisted.
class BracketTable {
 public:
  BracketTable(std::string name, std::vector<std::string> generators);

  const std::string& name() const noexcept { return name_; }
  const std::vector<std::string>& generators() const noexcept { return generators_; }
  bool has(const std::string& g) const;

  /// Sets [x, y]; a zero combination removes the entry. Throws UnknownGenerator.
  void set(const std::string& x, const std::string& y, Combination value);
  const std::map<std::pair<std::string, std::string>, Combination>& entries() const noexcept { return entries_; }

  /// Throws UnknownGenerator.
  Combination bracket(const std::string& x, const std::string& y) const;
  /// Bilinear extension.
  Combination bracket(const Combination& a, const Combination& b) const;

 private:
  void require(const std::string& g) const;

  std::string name_;
  std::vector<std::string> generators_;
  std::map<std::pair<std::string, std::string>, Combination> entries_;
};

/// J1..J3 rotations, K1..K3 boosts, T1..T3 spatial and T0 time translations.
/// Coefficients carry ε = 1/c².
BracketTable poincare_table();
/// poincare_table() with every ε-suppressed term deleted.
BracketTable galilean_table();

/// c → ∞ with M = ħ ε T0 replacing T0, a central I appended, then ε = 0.
/// Throws IllDefinedContraction if a limit diverges.
BracketTable contract(const BracketTable& table, const Rational& hbar, const Rational& mass);

/// Rewrites a combination over the uncontracted generators in the contracted
/// basis: c(ε)·T0 → (c(ε)/ε)|₀ · M/ħ, every other coefficient → c(0).
Combination contract_combination(const Combination& c, const Rational& hbar);

struct JacobiReport {
  bool zero = true;
  bool antisymmetric = true;
  double max_magnitude = 0.0;
  std::optional<std::array<std::string, 3>> worst_triple;
  Combination worst_value;
};

/// [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] over all ordered triples, exact in ε.
JacobiReport jacobi_residual(const BracketTable& table);

struct CCRReport {
  std::array<std::array<Combination, 3>, 3> pq;  // [P_i, Q_n]
  std::array<std::array<Combination, 3>, 3> pp;  // [P_i, P_n]
  std::array<std::array<Combination, 3>, 3> qq;  // [Q_i, Q_n]
  Rational hbar;

  /// [P_i,Q_n] = −iħδ_in I and [P,P] = [Q,Q] = 0, exactly.
  bool recovered() const;
  /// Every [P,Q], [P,P], [Q,Q] vanishes.
  bool all_zero() const;
};

/// P_i = ħT_i, Q_n = −(ħ/m)K_n, M identified with m·I. Throws MNotCentral.
CCRReport ccr_check(const BracketTable& table, const Rational& hbar, const Rational& mass);

/// The other side of the diagram: [P_i, Q_n] formed in the uncontracted table
/// and only then sent through contract_combination, with M → m·I.
CCRReport ccr_define_then_contract(const BracketTable& table, const Rational& hbar, const Rational& mass);

struct WeakBoost {
  double t = 0.0;
  double x = 0.0;
};

/// X = x − vt, T = t − vx/c²; c may be infinite.
WeakBoost weak_boost_transform(double t, double x, double v, double c);

}  // namespace rbw::contraction
