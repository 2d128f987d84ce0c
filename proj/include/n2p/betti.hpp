#ifndef N2P_BETTI_HPP
#define N2P_BETTI_HPP

#include <map>
#include <thread>
#include <utility>
#include <vector>

#include "n2p/homology.hpp"
#include "n2p/ideal.hpp"
#include "n2p/linalg.hpp"
#include "n2p/n2p_index.hpp"
#include "n2p/simplicial.hpp"

namespace n2p {

// Graded Betti numbers beta_{i,j}(I) = dim Tor_i(I,k)_j under the coarse
// (total-degree) grading. The finer grading (per subset W, or per exponent
// vector) is kept for debugging but takes no part in equality.
struct GradedBettiTable {
  struct FineEntry {
    std::vector<int> multidegree;  // exponent vector in the computing ring
    int i = 0;
    long long mult = 0;
  };

  std::map<std::pair<int, int>, long long> entries;  // (i, j) -> multiplicity
  FieldSpec field;
  std::string fingerprint;
  bool complete = true;
  std::vector<FineEntry> fine;

  long long at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void add(int i, int j, long long mult) {
    if (mult != 0) entries[{i, j}] += mult;
  }

  // Tables agree when their coarse entries agree.
  friend bool operator==(const GradedBettiTable& a, const GradedBettiTable& b) {
    return a.entries == b.entries;
  }
  friend bool operator!=(const GradedBettiTable& a, const GradedBettiTable& b) {
    return !(a == b);
  }
};

constexpr int kHochsterVarCap = 20;

// Hochster's formula: beta_{i,j}(I) is the sum over the size-j vertex
// subsets W of dim H~_{j-i-2} of the full subcomplex of Delta(I) on W.
inline GradedBettiTable hochster_table(const MonomialIdeal& I,
                                       const FieldSpec& f,
                                       int max_vars = kHochsterVarCap,
                                       int threads = 1) {
  const int n = I.vars().size();
  if (n > max_vars) throw TooManyVariables(n, max_vars);
  const SimplicialComplex delta = sr_complex(I);

  GradedBettiTable t;
  t.field = f;
  t.fingerprint = I.str();
  if (n == 0) return t;

  const VertexMask all = (n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1);

  auto sweep = [&](VertexMask first, VertexMask stride, GradedBettiTable* out) {
    for (VertexMask w = first; w <= all; w += stride) {
      if (w == 0) continue;
      const int j = __builtin_popcountll(w);
      // cone shortcut: a vertex lying in every facet of the restriction
      // makes the subcomplex acyclic
      VertexMask apex = w;
      for (auto fac : delta.facets()) apex &= fac;
      if (apex != 0) continue;
      SimplicialComplex sub = full_subcomplex(delta, w);
      HomologyDims h = reduced_homology_dims(sub, f);
      for (int k = -1; k <= h.top(); ++k) {
        long long d = h.dim(k);
        int i = j - k - 2;
        if (d == 0 || i < 0) continue;
        out->add(i, j, d);
        std::vector<int> mdeg(static_cast<std::size_t>(n), 0);
        for (int v : detail::mask_vertices(w)) mdeg[static_cast<std::size_t>(v)] = 1;
        out->fine.push_back({std::move(mdeg), i, d});
      }
    }
  };

  if (threads <= 1) {
    sweep(1, 1, &t);
  } else {
    std::vector<GradedBettiTable> parts(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int k = 0; k < threads; ++k)
      pool.emplace_back(sweep, static_cast<VertexMask>(k + 1),
                        static_cast<VertexMask>(threads),
                        &parts[static_cast<std::size_t>(k)]);
    for (auto& th : pool) th.join();
    for (auto& part : parts) {
      for (auto& [ij, mult] : part.entries) t.entries[ij] += mult;
      t.fine.insert(t.fine.end(), part.fine.begin(), part.fine.end());
    }
  }
  return t;
}

// Independent route via Koszul homology of S/I: the Koszul complex on all
// variables tensored with S/I computes Tor_*(S/I, k), and
// beta_{i,j}(I) = beta_{i+1,j}(S/I). The computation decomposes by
// multidegree; only divisors of the lcm of the generators can contribute.
inline GradedBettiTable koszul_table(const MonomialIdeal& I,
                                     const FieldSpec& f,
                                     int max_total_degree = -1) {
  const int n = I.vars().size();
  const Monomial L = I.gens_lcm();
  const int full_degree = L.degree();
  if (max_total_degree >= 0 &&
      max_total_degree < n + I.max_gen_degree())
    throw DegreeCapTooLow(max_total_degree, n + I.max_gen_degree());
  const int cap = max_total_degree < 0 ? full_degree : max_total_degree;

  long long divisor_count = 1;
  for (int e : L.e) {
    divisor_count *= e + 1;
    if (divisor_count > 2'000'000)
      throw TooLarge("too many multidegrees in the Koszul sweep");
  }

  GradedBettiTable t;
  t.field = f;
  t.fingerprint = I.str();
  t.complete = cap >= full_degree;

  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto process = [&]() {
    int deg = 0;
    for (int e : a) deg += e;
    if (deg == 0 || deg > cap) return;
    std::vector<int> supp;
    for (int v = 0; v < n; ++v)
      if (a[static_cast<std::size_t>(v)] > 0) supp.push_back(v);
    const int s = static_cast<int>(supp.size());

    // strand basis per homological degree: subsets T of the support with
    // x^a / x_T a standard monomial
    auto standard = [&](std::uint32_t tmask) {
      Monomial m(a);
      for (int k = 0; k < s; ++k)
        if ((tmask >> k) & 1) --m.e[static_cast<std::size_t>(supp[static_cast<std::size_t>(k)])];
      return !I.contains(m);
    };
    std::vector<std::vector<std::uint32_t>> basis(static_cast<std::size_t>(s + 1));
    std::vector<std::map<std::uint32_t, int>> index(static_cast<std::size_t>(s + 1));
    for (std::uint32_t tm = 0; tm < (std::uint32_t{1} << s); ++tm)
      if (standard(tm)) {
        int i = __builtin_popcount(tm);
        index[static_cast<std::size_t>(i)][tm] =
            static_cast<int>(basis[static_cast<std::size_t>(i)].size());
        basis[static_cast<std::size_t>(i)].push_back(tm);
      }

    // differentials d_i: basis[i] -> basis[i-1], d(e_T (x) m) =
    // sum over t in T of sign * e_{T-t} (x) x_t m
    std::vector<int> rank(static_cast<std::size_t>(s + 2), 0);
    for (int i = 1; i <= s; ++i) {
      IntMat m(static_cast<int>(basis[static_cast<std::size_t>(i - 1)].size()),
               static_cast<int>(basis[static_cast<std::size_t>(i)].size()));
      for (std::size_t col = 0; col < basis[static_cast<std::size_t>(i)].size(); ++col) {
        std::uint32_t tm = basis[static_cast<std::size_t>(i)][col];
        int sign = 1;
        for (int k = 0; k < s; ++k) {
          if (!((tm >> k) & 1)) continue;
          std::uint32_t sub = tm & ~(std::uint32_t{1} << k);
          auto it = index[static_cast<std::size_t>(i - 1)].find(sub);
          if (it != index[static_cast<std::size_t>(i - 1)].end())
            m.at(it->second, static_cast<int>(col)) = sign;
          sign = -sign;
        }
      }
      rank[static_cast<std::size_t>(i)] = matrix_rank(m, f);
    }
    for (int i = 1; i <= s; ++i) {
      long long h = static_cast<long long>(basis[static_cast<std::size_t>(i)].size()) -
                    rank[static_cast<std::size_t>(i)] -
                    rank[static_cast<std::size_t>(i + 1)];
      if (h != 0) {
        t.add(i - 1, deg, h);  // shift to ideal indexing
        t.fine.push_back({a, i - 1, h});
      }
    }
  };

  // iterate over all divisors of the lcm
  auto iterate = [&](auto&& self, int v) -> void {
    if (v == n) { process(); return; }
    for (a[static_cast<std::size_t>(v)] = 0;
         a[static_cast<std::size_t>(v)] <= L.e[static_cast<std::size_t>(v)];
         ++a[static_cast<std::size_t>(v)])
      self(self, v + 1);
    a[static_cast<std::size_t>(v)] = 0;
  };
  iterate(iterate, 0);
  return t;
}

// General monomial ideals reduce to the squarefree case by polarization,
// which preserves total degrees and Betti numbers.
inline GradedBettiTable betti_table_general(const MonomialIdeal& I,
                                            const FieldSpec& f,
                                            int max_vars = kHochsterVarCap,
                                            int threads = 1) {
  Polarization p = polarize(I);
  GradedBettiTable t = hochster_table(p.ideal, f, max_vars, threads);
  t.fingerprint = I.str();
  return t;
}

// Read the N_{2,p} verdict from a Betti table of an ideal: quadratic
// generation requires the i = 0 row to live in degree 2, and N_{2,p} asks
// for beta_{i,j} = 0 whenever i <= p-1 and j > i+2.
inline N2pIndex n2p_from_table(const GradedBettiTable& t) {
  if (!t.complete) throw IncompleteTable();
  for (const auto& [ij, mult] : t.entries)
    if (ij.first == 0 && ij.second != 2 && mult != 0)
      return N2pIndex::not_quadratic();
  int first_bad = -1;
  for (const auto& [ij, mult] : t.entries) {
    if (mult == 0 || ij.second <= ij.first + 2) continue;
    if (first_bad < 0 || ij.first < first_bad) first_bad = ij.first;
  }
  if (first_bad < 0) return N2pIndex::two_regular();
  return N2pIndex::finite(first_bad);
}

// Castelnuovo-Mumford regularity of the ideal as read from its table:
// max j - i over the nonzero entries.
inline int regularity(const GradedBettiTable& t) {
  if (!t.complete) throw IncompleteTable();
  bool any = false;
  int reg = 0;
  for (const auto& [ij, mult] : t.entries) {
    if (mult == 0) continue;
    any = true;
    reg = std::max(reg, ij.second - ij.first);
  }
  if (!any) throw ZeroIdealRegularity();
  return reg;
}

}  // namespace n2p

#endif  // N2P_BETTI_HPP
