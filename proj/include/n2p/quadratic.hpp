#ifndef N2P_QUADRATIC_HPP
#define N2P_QUADRATIC_HPP

#include <vector>

#include "n2p/errors.hpp"
#include "n2p/ideal.hpp"
#include "n2p/simplicial.hpp"

namespace n2p {

// The unique splitting I = I_Delta + I_s of a quadratic monomial ideal:
// Delta carries the squarefree part as its Stanley-Reisner ideal and the
// square vertices are the x with x^2 a generator.
struct QuadraticDecomposition {
  SimplicialComplex delta;
  VertexMask square_vertices = 0;

  std::vector<int> square_vertex_list() const {
    return detail::mask_vertices(square_vertices);
  }
};

inline QuadraticDecomposition quadratic_decompose(const MonomialIdeal& I) {
  std::vector<std::string> offenders;
  for (const auto& g : I.gens()) {
    if (g.degree() == 1) throw ContainsLinearForm(g.str(I.vars()));
    if (g.degree() != 2) offenders.push_back(g.str(I.vars()));
  }
  if (!offenders.empty()) throw NotQuadratic(std::move(offenders));

  VertexMask squares = 0;
  std::vector<VertexMask> nonedges;
  for (const auto& g : I.gens()) {
    if (g.squarefree()) {
      nonedges.push_back(g.support_mask());
    } else {
      squares |= g.support_mask();
    }
  }
  // Delta is the clique complex of the graph whose non-edges are the
  // supports of the squarefree quadrics.
  const int n = I.vars().size();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      VertexMask p = (VertexMask{1} << u) | (VertexMask{1} << v);
      if (std::find(nonedges.begin(), nonedges.end(), p) == nonedges.end())
        edges.emplace_back(u, v);
    }
  return QuadraticDecomposition{clique_complex(Graph(I.vars(), std::move(edges))),
                                squares};
}

// Reassemble I_Delta + (x^2 : x square vertex); inverse of
// quadratic_decompose on quadratic input.
inline MonomialIdeal recompose(const QuadraticDecomposition& d) {
  MonomialIdeal sq = sr_ideal(d.delta);
  std::vector<Monomial> gens = sq.gens();
  for (int v : d.square_vertex_list()) {
    Monomial m = Monomial::one(d.delta.ground().size());
    m.e[static_cast<std::size_t>(v)] = 2;
    gens.push_back(std::move(m));
  }
  return minimalize(std::move(gens), d.delta.ground());
}

// Saturation test for quadratic monomial ideals: I is saturated iff every
// facet of Delta contains at least one non-square vertex.
inline bool is_saturated_quadratic(const MonomialIdeal& I) {
  QuadraticDecomposition d = quadratic_decompose(I);
  for (auto f : d.delta.facets())
    if (f != 0 && (f & ~d.square_vertices) == 0) return false;
  return true;
}

}  // namespace n2p

#endif  // N2P_QUADRATIC_HPP
