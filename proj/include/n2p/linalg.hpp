#ifndef N2P_LINALG_HPP
#define N2P_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <type_traits>
#include <vector>

#include "n2p/errors.hpp"

namespace n2p {

// Exact coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };
  Kind kind = Kind::Rationals;
  std::int64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
  static FieldSpec prime(std::int64_t p) {
    if (p < 2) throw Error("field characteristic must be a prime >= 2");
    for (std::int64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error(std::to_string(p) + " is not prime");
    return FieldSpec{Kind::PrimeField, p};
  }

  bool is_rationals() const { return kind == Kind::Rationals; }
  std::string str() const {
    return is_rationals() ? "QQ" : "F" + std::to_string(p);
  }
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

// Dense integer matrix, row-major. Entries of the matrices built here are
// in {-1, 0, +1}; rank computations stay exact.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

  std::int64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
  std::int64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j)]; }
};

namespace detail {

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended Euclid; a nonzero mod p
  std::int64_t t = 0, newt = 1, r = p, newr = a % p;
  if (newr < 0) newr += p;
  while (newr != 0) {
    std::int64_t q = r / newr;
    t -= q * newt; std::swap(t, newt);
    r -= q * newr; std::swap(r, newr);
  }
  return t < 0 ? t + p : t;
}

inline int rank_mod_p(const IntMat& m, std::int64_t p) {
  const int R = m.rows, C = m.cols;
  std::vector<std::int64_t> w(m.a);
  auto at = [&](int i, int j) -> std::int64_t& {
    return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(C) + static_cast<std::size_t>(j)];
  };
  for (auto& x : w) { x %= p; if (x < 0) x += p; }
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int i = rank; i < R; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    for (int j = 0; j < C; ++j) std::swap(at(piv, j), at(rank, j));
    std::int64_t inv = mod_inverse(at(rank, col), p);
    for (int j = col; j < C; ++j) at(rank, j) = at(rank, j) * inv % p;
    for (int i = rank + 1; i < R; ++i) {
      std::int64_t f = at(i, col);
      if (f == 0) continue;
      for (int j = col; j < C; ++j) {
        at(i, j) = (at(i, j) - f * at(rank, j)) % p;
        if (at(i, j) < 0) at(i, j) += p;
      }
    }
    ++rank;
  }
  return rank;
}

// Fraction-free (Bareiss) elimination over the integers. Templated so the
// fast __int128 path can fall back to arbitrary precision when the
// intermediate minors grow too large.
template <typename I>
int rank_bareiss(const IntMat& m, bool* overflow) {
  const int R = m.rows, C = m.cols;
  std::vector<I> w(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> I& {
    return w[static_cast<std::size_t>(i) * static_cast<std::size_t>(C) + static_cast<std::size_t>(j)];
  };
  constexpr bool checked = std::is_same_v<I, __int128>;
  const I limit = checked ? (I{1} << 62) : I{0};
  I prev = 1;
  int rank = 0;
  for (int col = 0; col < C && rank < R; ++col) {
    int piv = -1;
    for (int i = rank; i < R; ++i)
      if (at(i, col) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < C; ++j) std::swap(at(piv, j), at(rank, j));
    const I pivot = at(rank, col);
    for (int i = rank + 1; i < R; ++i) {
      const I f = at(i, col);
      for (int j = col; j < C; ++j) {
        at(i, j) = (at(i, j) * pivot - f * at(rank, j)) / prev;
        if constexpr (checked) {
          if (at(i, j) > limit || at(i, j) < -limit) {
            *overflow = true;
            return 0;
          }
        }
      }
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Exact rank of an integer matrix over the given field.
inline int matrix_rank(const IntMat& m, const FieldSpec& f) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (!f.is_rationals()) return detail::rank_mod_p(m, f.p);
  bool overflow = false;
  int r = detail::rank_bareiss<__int128>(m, &overflow);
  if (!overflow) return r;
  return detail::rank_bareiss<boost::multiprecision::cpp_int>(m, nullptr);
}

}  // namespace n2p

#endif  // N2P_LINALG_HPP
