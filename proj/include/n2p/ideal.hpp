#ifndef N2P_IDEAL_HPP
#define N2P_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "n2p/errors.hpp"

namespace n2p {

// Ordered set of variable names; the index of a name is its position.
class VariableSet {
 public:
  VariableSet() = default;
  explicit VariableSet(std::vector<std::string> names)
      : names_(std::move(names)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], static_cast<int>(i)).second)
        throw Error("duplicate variable name " + names_[i]);
    }
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& names() const { return names_; }

  // -1 when the name is not present.
  int index_of(const std::string& n) const {
    auto it = index_.find(n);
    return it == index_.end() ? -1 : it->second;
  }
  bool contains(const std::string& n) const { return index_.count(n) != 0; }

  friend bool operator==(const VariableSet& a, const VariableSet& b) {
    return a.names_ == b.names_;
  }
  friend bool operator!=(const VariableSet& a, const VariableSet& b) {
    return !(a == b);
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

// A monomial as an exponent vector over some VariableSet.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  static Monomial one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
  bool is_one() const { return degree() == 0; }
  bool squarefree() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x <= 1; });
  }
  std::uint64_t support_mask() const {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) m |= std::uint64_t{1} << i;
    return m;
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > other.e[i]) return false;
    return true;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  // Canonical order: total degree, then by variable sequence so that earlier
  // variables with higher exponents come first (x0*x2 precedes x1*x3).
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare(b.e.begin(), b.e.end(),
                                        a.e.begin(), a.e.end());
  }

  std::string str(const VariableSet& vars) const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars.name(static_cast<int>(i));
      if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
  }
};

// A monomial ideal in canonical form: the unique minimal generating set,
// sorted. The unit ideal is representable (single generator 1) but only
// arises as a saturation output, never from minimalize() or parsing.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(VariableSet vars, std::vector<Monomial> canonical_gens)
      : vars_(std::move(vars)), gens_(std::move(canonical_gens)) {}

  const VariableSet& vars() const { return vars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (g.divides(m)) return true;
    return false;
  }

  int max_gen_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
  }

  // lcm of all generators; 1 for the zero ideal.
  Monomial gens_lcm() const {
    Monomial m = Monomial::one(vars_.size());
    for (const auto& g : gens_) m = lcm(m, g);
    return m;
  }

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.vars_ == b.vars_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

  std::string str() const {
    if (gens_.empty()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
      if (i) s += ", ";
      s += gens_[i].str(vars_);
    }
    return s + ")";
  }

 private:
  VariableSet vars_;
  std::vector<Monomial> gens_;
};

namespace detail {

// Divisibility-reduce and sort; the unit monomial, if present, swallows
// everything.
inline MonomialIdeal minimalize_allow_unit(std::vector<Monomial> gens,
                                           const VariableSet& vars) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.e.size()) != vars.size())
      throw Error("exponent vector length does not match the variable set");
    if (g.is_one())
      return MonomialIdeal(vars, {Monomial::one(vars.size())});
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (m.divides(g)) { redundant = true; break; }
    if (!redundant) minimal.push_back(g);
  }
  return MonomialIdeal(vars, std::move(minimal));
}

}  // namespace detail

// The unique minimal generating set (divisibility-reduced, canonically
// sorted). Rejects the unit monomial.
inline MonomialIdeal minimalize(std::vector<Monomial> gens,
                                const VariableSet& vars) {
  for (const auto& g : gens)
    if (g.is_one()) throw GeneratorIsUnit();
  return detail::minimalize_allow_unit(std::move(gens), vars);
}

// Image of I in the polynomial ring on `keep`: generators whose support
// lies inside `keep`, re-minimalized over the smaller ring.
inline MonomialIdeal coordinate_section(const MonomialIdeal& I,
                                        const std::vector<std::string>& keep) {
  if (keep.empty()) throw EmptyVariableSet();
  std::vector<int> old_index;
  std::vector<std::string> names;
  for (const auto& n : keep) {
    int i = I.vars().index_of(n);
    if (i < 0) throw UnknownVariable(n);
    old_index.push_back(i);
    names.push_back(n);
  }
  VariableSet sub(names);
  std::vector<bool> kept(static_cast<std::size_t>(I.vars().size()), false);
  for (int i : old_index) kept[static_cast<std::size_t>(i)] = true;

  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    bool inside = true;
    for (std::size_t i = 0; i < g.e.size(); ++i)
      if (g.e[i] > 0 && !kept[i]) { inside = false; break; }
    if (!inside) continue;
    Monomial m = Monomial::one(sub.size());
    for (std::size_t k = 0; k < old_index.size(); ++k)
      m.e[k] = g.e[static_cast<std::size_t>(old_index[k])];
    gens.push_back(std::move(m));
  }
  return minimalize(std::move(gens), sub);
}

// Result of polarization: a squarefree ideal together with, for each new
// variable, the index of the original variable it copies.
struct Polarization {
  MonomialIdeal ideal;
  std::vector<int> origin;  // origin[j] = index into the input's VariableSet
};

// Standard polarization. A variable x whose maximal exponent across the
// generators is e >= 2 is replaced by fresh copies x_1,...,x_e (appended
// after all surviving original names, in original variable order); the
// factor x^k of a generator becomes x_1*...*x_k. Variables with maximal
// exponent <= 1 keep their name and position. Squarefree input is a fixed
// point.
inline Polarization polarize(const MonomialIdeal& I) {
  const int n = I.vars().size();
  std::vector<int> maxexp(static_cast<std::size_t>(n), 0);
  for (const auto& g : I.gens())
    for (int i = 0; i < n; ++i)
      maxexp[static_cast<std::size_t>(i)] =
          std::max(maxexp[static_cast<std::size_t>(i)], g.e[static_cast<std::size_t>(i)]);

  std::vector<std::string> names;
  std::vector<int> origin;
  // copies[i] = list of new indices standing in for original variable i.
  std::vector<std::vector<int>> copies(static_cast<std::size_t>(n));
  auto taken = [&](const std::string& s) {
    if (std::find(names.begin(), names.end(), s) != names.end()) return true;
    return I.vars().contains(s);
  };
  for (int i = 0; i < n; ++i) {
    if (maxexp[static_cast<std::size_t>(i)] <= 1) {
      copies[static_cast<std::size_t>(i)] = {static_cast<int>(names.size())};
      names.push_back(I.vars().name(i));
      origin.push_back(i);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (maxexp[static_cast<std::size_t>(i)] <= 1) continue;
    for (int k = 1; k <= maxexp[static_cast<std::size_t>(i)]; ++k) {
      std::string cand = I.vars().name(i) + "_" + std::to_string(k);
      while (taken(cand)) cand = "_" + cand;
      copies[static_cast<std::size_t>(i)].push_back(static_cast<int>(names.size()));
      names.push_back(cand);
      origin.push_back(i);
    }
  }
  VariableSet pvars(names);
  std::vector<Monomial> gens;
  for (const auto& g : I.gens()) {
    Monomial m = Monomial::one(pvars.size());
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < g.e[static_cast<std::size_t>(i)]; ++k)
        m.e[static_cast<std::size_t>(copies[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])] = 1;
    gens.push_back(std::move(m));
  }
  return Polarization{minimalize(std::move(gens), pvars), std::move(origin)};
}

namespace detail {

// (I : x_i^infinity): generators with their x_i-exponent set to 0.
inline MonomialIdeal colon_var_power(const MonomialIdeal& I, int i) {
  std::vector<Monomial> gens;
  for (auto g : I.gens()) {
    g.e[static_cast<std::size_t>(i)] = 0;
    gens.push_back(std::move(g));
  }
  return minimalize_allow_unit(std::move(gens), I.vars());
}

// Intersection via pairwise lcms.
inline MonomialIdeal intersect(const MonomialIdeal& A, const MonomialIdeal& B) {
  std::vector<Monomial> gens;
  for (const auto& a : A.gens())
    for (const auto& b : B.gens())
      gens.push_back(lcm(a, b));
  return minimalize_allow_unit(std::move(gens), A.vars());
}

}  // namespace detail

// Brute-force saturation with respect to the ideal of all variables:
// the intersection over all i of (I : x_i^infinity). May return the unit
// ideal.
inline MonomialIdeal saturate_oracle(const MonomialIdeal& I) {
  if (I.is_zero() || I.vars().size() == 0) return I;
  MonomialIdeal acc = detail::colon_var_power(I, 0);
  for (int i = 1; i < I.vars().size(); ++i)
    acc = detail::intersect(acc, detail::colon_var_power(I, i));
  return acc;
}

}  // namespace n2p

#endif  // N2P_IDEAL_HPP
