#include "rbw/contraction.hpp"

#include <cmath>
#include <limits>

#include "rbw/common.hpp"

namespace rbw::contraction {

namespace {

const ComplexRational kI = ComplexRational::i();

std::string idx(const char* prefix, int i) { return prefix + std::to_string(i); }

// ε_{ink} for distinct i, n in {1,2,3}
int levi_civita(int i, int n) { return ((n - i + 3) % 3 == 1) ? 1 : -1; }

// M → m·I
Combination identify_mass(const Combination& c, const Rational& mass) {
  auto it = c.find("M");
  if (it == c.end()) return c;
  Combination out = c;
  const EpsPoly coeff = it->second;
  out.erase("M");
  return add(out, term("I", coeff * EpsPoly(ComplexRational(mass))));
}

void require_positive(const Rational& q, const char* what) {
  if (q <= 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be positive");
}

template <class F>
CCRReport build_ccr(const Rational& hbar, F&& pair_bracket) {
  CCRReport r;
  r.hbar = hbar;
  for (int i = 1; i <= 3; ++i)
    for (int n = 1; n <= 3; ++n) {
      r.pq[i - 1][n - 1] = pair_bracket('P', i, 'Q', n);
      r.pp[i - 1][n - 1] = pair_bracket('P', i, 'P', n);
      r.qq[i - 1][n - 1] = pair_bracket('Q', i, 'Q', n);
    }
  return r;
}

// P_i = ħT_i, Q_n = −(ħ/m)K_n as combinations over the table's own generators.
Combination pq_generator(char which, int i, const Rational& hbar, const Rational& mass) {
  if (which == 'P') return term(idx("T", i), EpsPoly(ComplexRational(hbar)));
  return term(idx("K", i), EpsPoly(ComplexRational(Rational(-hbar / mass))));
}

}  // namespace

Combination term(const std::string& generator, EpsPoly coeff) {
  Combination c;
  if (!coeff.is_zero()) c.emplace(generator, std::move(coeff));
  return c;
}

Combination add(const Combination& a, const Combination& b) {
  Combination out = a;
  for (const auto& [g, coeff] : b) {
    EpsPoly sum = out[g] + coeff;
    if (sum.is_zero()) out.erase(g);
    else out[g] = std::move(sum);
  }
  return out;
}

Combination scale(const Combination& a, const EpsPoly& s) {
  Combination out;
  for (const auto& [g, coeff] : a) {
    EpsPoly p = coeff * s;
    if (!p.is_zero()) out.emplace(g, std::move(p));
  }
  return out;
}

bool is_zero(const Combination& c) { return c.empty(); }

Combination evaluate(const Combination& c, const Rational& eps) {
  Combination out;
  for (const auto& [g, coeff] : c) {
    EpsPoly v(coeff.evaluate(eps));
    if (!v.is_zero()) out.emplace(g, std::move(v));
  }
  return out;
}

std::string to_string(const Combination& c, const std::string& symbol) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [g, coeff] : c) {
    std::string s = coeff.to_string(symbol);
    const bool compound = coeff.coefficients().size() > 1 ||
                          (s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos);
    if (compound) s = "(" + s + ")";
    std::string piece;
    if (s == "1") piece = g;
    else if (s == "-1") piece = "-" + g;
    else piece = s + "*" + g;
    if (!out.empty()) {
      if (piece[0] == '-') out += " - " + piece.substr(1);
      else out += " + " + piece;
    } else {
      out = piece;
    }
  }
  return out;
}

BracketTable::BracketTable(std::string name, std::vector<std::string> generators)
    : name_(std::move(name)), generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    for (std::size_t j = i + 1; j < generators_.size(); ++j)
      if (generators_[i] == generators_[j])
        throw Error(ErrorKind::InvalidArgument, "duplicate generator '" + generators_[i] + "'");
}

bool BracketTable::has(const std::string& g) const {
  for (const auto& x : generators_)
    if (x == g) return true;
  return false;
}

void BracketTable::require(const std::string& g) const {
  if (!has(g)) throw Error(ErrorKind::UnknownGenerator, "'" + g + "' is not a generator of " + name_);
}

void BracketTable::set(const std::string& x, const std::string& y, Combination value) {
  require(x);
  require(y);
  for (const auto& [g, coeff] : value) {
    (void)coeff;
    require(g);
  }
  if (value.empty()) entries_.erase({x, y});
  else entries_[{x, y}] = std::move(value);
}

Combination BracketTable::bracket(const std::string& x, const std::string& y) const {
  require(x);
  require(y);
  if (x == y) return {};
  if (auto it = entries_.find({x, y}); it != entries_.end()) return it->second;
  if (auto it = entries_.find({y, x}); it != entries_.end()) return scale(it->second, EpsPoly(-1));
  return {};
}

Combination BracketTable::bracket(const Combination& a, const Combination& b) const {
  Combination out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out = add(out, scale(bracket(x, y), cx * cy));
  return out;
}

BracketTable poincare_table() {
  BracketTable t("poincare", {"J1", "J2", "J3", "K1", "K2", "K3", "T1", "T2", "T3", "T0"});
  const EpsPoly i_unit(kI);
  const EpsPoly minus_i_eps = EpsPoly::monomial(-kI, 1);
  for (int i = 1; i <= 3; ++i) {
    for (int n = 1; n <= 3; ++n) {
      if (i == n) continue;
      const int k = 6 - i - n;
      const EpsPoly s(levi_civita(i, n));
      t.set(idx("J", i), idx("J", n), term(idx("J", k), s * i_unit));
      t.set(idx("J", i), idx("K", n), term(idx("K", k), s * i_unit));
      t.set(idx("J", i), idx("T", n), term(idx("T", k), s * i_unit));
      t.set(idx("K", i), idx("K", n), term(idx("J", k), s * minus_i_eps));
    }
    t.set("T0", idx("K", i), term(idx("T", i), i_unit));
    // +i/c²: with −i/c² here the (K_i, K_n, T_n) Jacobi triple fails and the
    // contracted algebra yields [P,Q] = +iħ.
    t.set(idx("T", i), idx("K", i), term("T0", EpsPoly::monomial(kI, 1)));
  }
  return t;
}

BracketTable galilean_table() {
  const BracketTable p = poincare_table();
  BracketTable g("galilean", p.generators());
  for (const auto& [key, value] : p.entries()) g.set(key.first, key.second, evaluate(value, Rational(0)));
  return g;
}

Combination contract_combination(const Combination& c, const Rational& hbar) {
  require_positive(hbar, "hbar");
  Combination out;
  for (const auto& [g, coeff] : c) {
    if (g == "T0") {
      const ComplexRational v = coeff.divide_by_eps().at_zero() / ComplexRational(hbar);
      out = add(out, term("M", EpsPoly(v)));
    } else {
      out = add(out, term(g, EpsPoly(coeff.at_zero())));
    }
  }
  return out;
}

BracketTable contract(const BracketTable& table, const Rational& hbar, const Rational& mass) {
  require_positive(hbar, "hbar");
  require_positive(mass, "m");
  if (!table.has("T0"))
    throw Error(ErrorKind::UnknownGenerator, "table '" + table.name() + "' has no T0 to contract");

  std::vector<std::string> gens;
  for (const auto& g : table.generators()) gens.push_back(g == "T0" ? "M" : g);
  gens.push_back("I");
  BracketTable out("contracted " + table.name(), gens);

  // M = ħ ε T0 in terms of the old generators
  const auto lift = [&](const std::string& g) {
    if (g == "M") return term("T0", EpsPoly::monomial(ComplexRational(hbar), 1));
    return term(g);
  };
  for (std::size_t a = 0; a < gens.size(); ++a) {
    if (gens[a] == "I") continue;
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      if (gens[b] == "I") continue;
      out.set(gens[a], gens[b], contract_combination(table.bracket(lift(gens[a]), lift(gens[b])), hbar));
    }
  }
  return out;
}

JacobiReport jacobi_residual(const BracketTable& table) {
  JacobiReport r;
  for (const auto& [key, value] : table.entries()) {
    if (key.first == key.second) {
      r.antisymmetric = false;
      continue;
    }
    if (auto it = table.entries().find({key.second, key.first}); it != table.entries().end())
      if (!is_zero(add(value, it->second))) r.antisymmetric = false;
  }

  const auto& gens = table.generators();
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        Combination sum = table.bracket(term(x), table.bracket(y, z));
        sum = add(sum, table.bracket(term(y), table.bracket(z, x)));
        sum = add(sum, table.bracket(term(z), table.bracket(x, y)));
        if (is_zero(sum)) continue;
        r.zero = false;
        double mag = 0.0;
        for (const auto& [g, coeff] : sum) {
          (void)g;
          mag = std::max(mag, coeff.max_magnitude());
        }
        if (!r.worst_triple || mag > r.max_magnitude) {
          r.max_magnitude = mag;
          r.worst_triple = std::array<std::string, 3>{x, y, z};
          r.worst_value = sum;
        }
      }
  return r;
}

bool CCRReport::recovered() const {
  for (int i = 0; i < 3; ++i)
    for (int n = 0; n < 3; ++n) {
      const Combination expected =
          i == n ? term("I", EpsPoly(ComplexRational(Rational(0), Rational(-hbar)))) : Combination{};
      if (pq[i][n] != expected || !is_zero(pp[i][n]) || !is_zero(qq[i][n])) return false;
    }
  return true;
}

bool CCRReport::all_zero() const {
  for (int i = 0; i < 3; ++i)
    for (int n = 0; n < 3; ++n)
      if (!is_zero(pq[i][n]) || !is_zero(pp[i][n]) || !is_zero(qq[i][n])) return false;
  return true;
}

CCRReport ccr_check(const BracketTable& table, const Rational& hbar, const Rational& mass) {
  require_positive(hbar, "hbar");
  require_positive(mass, "m");
  if (table.has("M")) {
    for (const auto& g : table.generators()) {
      const Combination c = table.bracket("M", g);
      if (!is_zero(c))
        throw Error(ErrorKind::MNotCentral, "[M, " + g + "] = " + to_string(c) + " in " + table.name());
    }
  }
  return build_ccr(hbar, [&](char a, int i, char b, int n) {
    return identify_mass(table.bracket(pq_generator(a, i, hbar, mass), pq_generator(b, n, hbar, mass)), mass);
  });
}

CCRReport ccr_define_then_contract(const BracketTable& table, const Rational& hbar, const Rational& mass) {
  require_positive(hbar, "hbar");
  require_positive(mass, "m");
  return build_ccr(hbar, [&](char a, int i, char b, int n) {
    const Combination raw =
        table.bracket(pq_generator(a, i, hbar, mass), pq_generator(b, n, hbar, mass));
    return identify_mass(contract_combination(raw, hbar), mass);
  });
}

WeakBoost weak_boost_transform(double t, double x, double v, double c) {
  const double shift = std::isinf(c) ? 0.0 : v * x / (c * c);
  return {t - shift, x - v * t};
}

}  // namespace rbw::contraction
