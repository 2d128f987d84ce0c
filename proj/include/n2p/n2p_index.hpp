#ifndef N2P_N2P_INDEX_HPP
#define N2P_N2P_INDEX_HPP

#include <string>

namespace n2p {

// The answer type for "what is the maximal p with N_{2,p}": the ideal is
// not quadratically generated, or N_{2,p} holds up to a finite maximal p,
// or the ideal is 2-regular (N_{2,p} for every p >= 1).
struct N2pIndex {
  enum class Kind { NotQuadratic, Finite, TwoRegular };
  Kind kind = Kind::NotQuadratic;
  int p = 0;  // meaningful only for Finite

  static N2pIndex not_quadratic() { return {Kind::NotQuadratic, 0}; }
  static N2pIndex finite(int p) { return {Kind::Finite, p}; }
  static N2pIndex two_regular() { return {Kind::TwoRegular, 0}; }

  bool is_finite() const { return kind == Kind::Finite; }
  bool is_two_regular() const { return kind == Kind::TwoRegular; }
  bool is_not_quadratic() const { return kind == Kind::NotQuadratic; }

  // True when N_{2,q} holds (so for TwoRegular, always; never for
  // non-quadratic input).
  bool at_least(int q) const {
    if (kind == Kind::TwoRegular) return true;
    if (kind == Kind::Finite) return p >= q;
    return false;
  }

  std::string str() const {
    switch (kind) {
      case Kind::NotQuadratic: return "not-quadratic";
      case Kind::TwoRegular: return "2-regular";
      default: return "N_{2," + std::to_string(p) + "}";
    }
  }

  friend bool operator==(const N2pIndex& a, const N2pIndex& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.p == b.p);
  }
  friend bool operator!=(const N2pIndex& a, const N2pIndex& b) {
    return !(a == b);
  }
};

}  // namespace n2p

#endif  // N2P_N2P_INDEX_HPP
