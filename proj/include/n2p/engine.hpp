#ifndef N2P_ENGINE_HPP
#define N2P_ENGINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "n2p/betti.hpp"
#include "n2p/graph_analysis.hpp"
#include "n2p/n2p_index.hpp"
#include "n2p/quadratic.hpp"

namespace n2p {

// Certificate that N_{2,p+1} fails at the reported index. Each variant can
// be re-verified from the input ideal alone.
struct FailureWitness {
  enum class Kind {
    Hole,                // chordless cycle in the 1-skeleton
    LinkNotSimplex,      // square vertex x with non-adjacent y,z in link(x)
    SquareVertexInLink,  // square vertex y inside link(square vertex x)
    NonQuadraticGenerator
  };
  Kind kind;
  MinimalCycle hole;          // Hole
  int x = -1, y = -1, z = -1; // vertex indices for the square-vertex variants
  Monomial generator;         // NonQuadraticGenerator

  // Independent re-verification against the raw ideal.
  bool verify(const MonomialIdeal& I) const {
    switch (kind) {
      case Kind::NonQuadraticGenerator: {
        for (const auto& g : I.gens())
          if (g == generator) return g.degree() != 2;
        return false;
      }
      case Kind::Hole: {
        QuadraticDecomposition d = quadratic_decompose(I);
        return hole.verify(one_skeleton(d.delta));
      }
      case Kind::LinkNotSimplex: {
        QuadraticDecomposition d = quadratic_decompose(I);
        if (!((d.square_vertices >> x) & 1)) return false;
        Graph g = one_skeleton(d.delta);
        return g.adjacent(x, y) && g.adjacent(x, z) && !g.adjacent(y, z);
      }
      case Kind::SquareVertexInLink: {
        QuadraticDecomposition d = quadratic_decompose(I);
        if (!((d.square_vertices >> x) & 1)) return false;
        if (!((d.square_vertices >> y) & 1)) return false;
        return one_skeleton(d.delta).adjacent(x, y);
      }
    }
    return false;
  }
};

// Theorem-driven index for squarefree quadratic ideals: chordal 1-skeleton
// means 2-regular, otherwise the maximal p is (shortest hole length) - 3.
inline N2pIndex n2p_squarefree(const SimplicialComplex& delta) {
  if (!is_clique_complex(delta)) return N2pIndex::not_quadratic();
  Graph g = one_skeleton(delta);
  auto hole = shortest_hole(g);
  if (!hole) return N2pIndex::two_regular();
  return N2pIndex::finite(hole->length() - 3);
}

namespace detail {

// Link condition of the square-vertex criterion: for every square vertex x,
// link(x, Delta) is a simplex containing no square vertex. The empty link
// counts as a simplex.
inline bool square_links_ok(const QuadraticDecomposition& d) {
  for (int x : d.square_vertex_list()) {
    SimplicialComplex lk = link(d.delta, x);
    if (!lk.is_simplex()) return false;
    for (int k = 0; k < lk.ground().size(); ++k) {
      int orig = d.delta.ground().index_of(lk.ground().name(k));
      if ((d.square_vertices >> orig) & 1) return false;
    }
  }
  return true;
}

}  // namespace detail

// Combinatorial index of an arbitrary quadratic monomial ideal. Quadratic
// generation alone gives N_{2,1}; the square-vertex link condition governs
// N_{2,2}, and beyond that the index is that of the squarefree part.
inline N2pIndex n2p_quadratic(const MonomialIdeal& I) {
  QuadraticDecomposition d;
  try {
    d = quadratic_decompose(I);
  } catch (const NotQuadratic&) {
    return N2pIndex::not_quadratic();
  } catch (const ContainsLinearForm&) {
    return N2pIndex::not_quadratic();
  }
  N2pIndex s = n2p_squarefree(d.delta);
  if (d.square_vertices == 0) return s;
  if (detail::square_links_ok(d) && s.at_least(2)) return s;
  return N2pIndex::finite(1);
}

inline bool is_two_regular(const MonomialIdeal& I) {
  return n2p_quadratic(I).is_two_regular();
}

// A witness for the failure of N_{2,p+1}, absent iff the ideal is
// 2-regular. When both a short hole and a square-vertex violation bind at
// the same p, the square-vertex witness wins.
inline std::optional<FailureWitness> failure_witness(const MonomialIdeal& I) {
  QuadraticDecomposition d;
  try {
    d = quadratic_decompose(I);
  } catch (const Error&) {
    for (const auto& g : I.gens())
      if (g.degree() != 2) {
        FailureWitness w;
        w.kind = FailureWitness::Kind::NonQuadraticGenerator;
        w.generator = g;
        return w;
      }
    throw;  // decompose failed for another reason; surface it
  }

  N2pIndex idx = n2p_quadratic(I);
  if (idx.is_two_regular()) return std::nullopt;

  if (d.square_vertices != 0 && !detail::square_links_ok(d)) {
    // binding at p = 2; find the first offending square vertex
    Graph g = one_skeleton(d.delta);
    for (int x : d.square_vertex_list()) {
      SimplicialComplex lk = link(d.delta, x);
      auto nbrs = detail::mask_vertices(g.neighbors(x));
      if (!lk.is_simplex()) {
        for (std::size_t i = 0; i < nbrs.size(); ++i)
          for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.adjacent(nbrs[i], nbrs[j])) {
              FailureWitness w;
              w.kind = FailureWitness::Kind::LinkNotSimplex;
              w.x = x; w.y = nbrs[i]; w.z = nbrs[j];
              return w;
            }
      }
      for (int y : nbrs)
        if ((d.square_vertices >> y) & 1) {
          FailureWitness w;
          w.kind = FailureWitness::Kind::SquareVertexInLink;
          w.x = x; w.y = y;
          return w;
        }
    }
  }

  auto hole = shortest_hole(one_skeleton(d.delta));
  FailureWitness w;
  w.kind = FailureWitness::Kind::Hole;
  w.hole = *hole;  // some hole exists: the index is finite and not square-driven
  return w;
}

// Consistency report: the combinatorial index against the homological
// oracles per field. Disagreement on an in-scope input is a bug.
struct CrossCheckReport {
  struct FieldResult {
    FieldSpec field;
    N2pIndex hochster_index;  // via betti_table_general
    N2pIndex koszul_index;
  };
  N2pIndex combinatorial;
  std::vector<FieldResult> oracle;
  bool agree = false;
  std::optional<FailureWitness> witness;
};

inline CrossCheckReport cross_check(const MonomialIdeal& I,
                                    const std::vector<FieldSpec>& fields,
                                    int max_vars = kHochsterVarCap,
                                    int threads = 1) {
  CrossCheckReport r;
  r.combinatorial = n2p_quadratic(I);
  r.witness = failure_witness(I);
  r.agree = true;
  for (const auto& f : fields) {
    CrossCheckReport::FieldResult fr;
    fr.field = f;
    fr.hochster_index = n2p_from_table(betti_table_general(I, f, max_vars, threads));
    fr.koszul_index = n2p_from_table(koszul_table(I, f));
    if (fr.hochster_index != r.combinatorial || fr.koszul_index != r.combinatorial)
      r.agree = false;
    r.oracle.push_back(std::move(fr));
  }
  return r;
}

}  // namespace n2p

#endif  // N2P_ENGINE_HPP
