#ifndef N2P_SIMPLICIAL_HPP
#define N2P_SIMPLICIAL_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "n2p/errors.hpp"
#include "n2p/ideal.hpp"

namespace n2p {

using VertexMask = std::uint64_t;

namespace detail {

inline std::vector<int> mask_vertices(VertexMask m) {
  std::vector<int> v;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) v.push_back(i);
  return v;
}

// Order on same-cardinality masks matching lexicographic order of the
// sorted vertex tuples.
inline bool mask_lex_less(VertexMask a, VertexMask b) {
  while (a && b) {
    VertexMask la = a & (~a + 1), lb = b & (~b + 1);
    if (la != lb) return la < lb;
    a ^= la;
    b ^= lb;
  }
  return a == 0 && b != 0;
}

inline bool facet_order(VertexMask a, VertexMask b) {
  int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
  if (pa != pb) return pa < pb;
  return mask_lex_less(a, b);
}

}  // namespace detail

// Simple undirected graph on a VariableSet.
class Graph {
 public:
  Graph() = default;
  Graph(VariableSet vertices, std::vector<std::pair<int, int>> edges)
      : verts_(std::move(vertices)),
        adj_(static_cast<std::size_t>(verts_.size()), 0) {
    if (verts_.size() > 64) throw TooLarge("graphs are capped at 64 vertices");
    for (auto [u, v] : edges) add_edge(u, v);
  }

  const VariableSet& vertices() const { return verts_; }
  int num_vertices() const { return verts_.size(); }
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const {
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
  }
  int num_edges() const {
    int m = 0;
    for (auto a : adj_) m += __builtin_popcountll(a);
    return m / 2;
  }
  // Sorted (u < v) edge list.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < num_vertices(); ++u)
      for (int v = u + 1; v < num_vertices(); ++v)
        if (adjacent(u, v)) es.emplace_back(u, v);
    return es;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.verts_ == b.verts_ && a.adj_ == b.adj_;
  }

 private:
  void add_edge(int u, int v) {
    if (u == v) throw SelfLoop(verts_.name(u));
    if (adjacent(u, v))
      throw DuplicateEdge(verts_.name(u) + "-" + verts_.name(v));
    adj_[static_cast<std::size_t>(u)] |= VertexMask{1} << v;
    adj_[static_cast<std::size_t>(v)] |= VertexMask{1} << u;
  }

  VariableSet verts_;
  std::vector<VertexMask> adj_;
};

// Facet-represented simplicial complex over an ordered ground set.
// The irrelevant complex {emptyset} is the single facet 0; the void
// complex (no faces at all) is rejected at construction.
class SimplicialComplex {
 public:
  SimplicialComplex() : facets_{0} {}

  // `faces` need not be maximal; the maximal ones are kept. An empty list
  // denotes the void complex and is rejected.
  SimplicialComplex(VariableSet ground, std::vector<VertexMask> faces)
      : ground_(std::move(ground)) {
    if (ground_.size() > 64)
      throw TooLarge("complexes are capped at 64 vertices");
    if (faces.empty()) throw VoidComplex();
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    for (auto f : faces) {
      bool maximal = true;
      for (auto g : faces)
        if (f != g && (f & g) == f) { maximal = false; break; }
      if (maximal) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end(), detail::facet_order);
  }

  static SimplicialComplex irrelevant(VariableSet ground = VariableSet{}) {
    return SimplicialComplex(std::move(ground), {0});
  }
  static SimplicialComplex simplex(VariableSet ground) {
    VertexMask full = ground.size() == 64
                          ? ~VertexMask{0}
                          : (VertexMask{1} << ground.size()) - 1;
    return SimplicialComplex(std::move(ground), {full});
  }

  const VariableSet& ground() const { return ground_; }
  const std::vector<VertexMask>& facets() const { return facets_; }

  bool is_irrelevant() const { return facets_.size() == 1 && facets_[0] == 0; }
  bool is_simplex() const { return facets_.size() == 1; }

  int dim() const {
    int d = -1;
    for (auto f : facets_) d = std::max(d, __builtin_popcountll(f) - 1);
    return d;
  }

  bool has_face(VertexMask f) const {
    for (auto g : facets_)
      if ((f & g) == f) return true;
    return false;
  }
  bool has_vertex(int v) const { return has_face(VertexMask{1} << v); }

  // All faces, including the empty face.
  std::vector<VertexMask> all_faces() const {
    std::unordered_set<VertexMask> seen;
    for (auto f : facets_) {
      // enumerate subsets of f
      VertexMask s = f;
      while (true) {
        seen.insert(s);
        if (s == 0) break;
        s = (s - 1) & f;
      }
    }
    return {seen.begin(), seen.end()};
  }

  // k-faces in lexicographic order of their sorted vertex tuples; k = -1
  // yields the empty face.
  std::vector<VertexMask> faces_of_dim(int k) const {
    std::vector<VertexMask> out;
    for (auto f : all_faces())
      if (__builtin_popcountll(f) == k + 1) out.push_back(f);
    std::sort(out.begin(), out.end(), detail::mask_lex_less);
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.ground_ == b.ground_ && a.facets_ == b.facets_;
  }
  friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
    return !(a == b);
  }

 private:
  VariableSet ground_;
  std::vector<VertexMask> facets_;
};

// Faces of the result are the faces of `c` contained in W; the ground set
// shrinks to W (original name order). W = emptyset yields the irrelevant
// complex.
inline SimplicialComplex full_subcomplex(const SimplicialComplex& c,
                                         VertexMask w) {
  std::vector<int> verts = detail::mask_vertices(w);
  std::vector<std::string> names;
  for (int v : verts) names.push_back(c.ground().name(v));
  // remap old indices to positions within W
  std::vector<VertexMask> faces;
  for (auto f : c.facets()) {
    VertexMask g = f & w;
    VertexMask r = 0;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if ((g >> verts[k]) & 1) r |= VertexMask{1} << k;
    faces.push_back(r);
  }
  return SimplicialComplex(VariableSet(names), std::move(faces));
}

// link(v) = { F : v not in F, F + v a face }, on the neighbor vertices of v.
inline SimplicialComplex link(const SimplicialComplex& c, int v) {
  if (!c.has_vertex(v)) throw VertexNotInComplex(c.ground().name(v));
  VertexMask nbrs = 0;
  std::vector<VertexMask> faces;
  for (auto f : c.facets())
    if ((f >> v) & 1) {
      faces.push_back(f & ~(VertexMask{1} << v));
      nbrs |= faces.back();
    }
  if (faces.empty()) faces.push_back(0);
  std::vector<int> verts = detail::mask_vertices(nbrs);
  std::vector<std::string> names;
  for (int u : verts) names.push_back(c.ground().name(u));
  std::vector<VertexMask> remapped;
  for (auto f : faces) {
    VertexMask r = 0;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if ((f >> verts[k]) & 1) r |= VertexMask{1} << k;
    remapped.push_back(r);
  }
  return SimplicialComplex(VariableSet(names), std::move(remapped));
}

// star(v) = v joined with its link; always a cone with apex v, hence
// contractible.
inline SimplicialComplex star(const SimplicialComplex& c, int v) {
  if (!c.has_vertex(v)) throw VertexNotInComplex(c.ground().name(v));
  VertexMask verts_mask = VertexMask{1} << v;
  std::vector<VertexMask> faces;
  for (auto f : c.facets())
    if ((f >> v) & 1) {
      faces.push_back(f);
      verts_mask |= f;
    }
  if (faces.empty()) faces.push_back(VertexMask{1} << v);
  std::vector<int> verts = detail::mask_vertices(verts_mask);
  std::vector<std::string> names;
  for (int u : verts) names.push_back(c.ground().name(u));
  std::vector<VertexMask> remapped;
  for (auto f : faces) {
    VertexMask r = 0;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if ((f >> verts[k]) & 1) r |= VertexMask{1} << k;
    remapped.push_back(r);
  }
  return SimplicialComplex(VariableSet(names), std::move(remapped));
}

// Vertices and 1-faces of the complex.
inline Graph one_skeleton(const SimplicialComplex& c) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < c.ground().size(); ++u)
    for (int v = u + 1; v < c.ground().size(); ++v)
      if (c.has_face((VertexMask{1} << u) | (VertexMask{1} << v)))
        edges.emplace_back(u, v);
  return Graph(c.ground(), std::move(edges));
}

// Flag complex of G: faces are exactly the cliques. Facets are the maximal
// cliques, found by Bron-Kerbosch with pivoting.
inline SimplicialComplex clique_complex(const Graph& g) {
  std::vector<VertexMask> cliques;
  const int n = g.num_vertices();
  VertexMask all = n == 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;

  auto expand = [&](auto&& self, VertexMask r, VertexMask p, VertexMask x) -> void {
    if (p == 0 && x == 0) {
      cliques.push_back(r);
      return;
    }
    // pivot: vertex of p|x maximizing |p & N(u)|
    int pivot = -1, best = -1;
    for (int u : detail::mask_vertices(p | x)) {
      int cnt = __builtin_popcountll(p & g.neighbors(u));
      if (cnt > best) { best = cnt; pivot = u; }
    }
    VertexMask cand = p & ~g.neighbors(pivot);
    for (int v : detail::mask_vertices(cand)) {
      VertexMask vb = VertexMask{1} << v;
      self(self, r | vb, p & g.neighbors(v), x & g.neighbors(v));
      p &= ~vb;
      x |= vb;
    }
  };
  if (n == 0) return SimplicialComplex::irrelevant(g.vertices());
  expand(expand, 0, all, 0);
  return SimplicialComplex(g.vertices(), std::move(cliques));
}

namespace detail {

// Minimal non-faces of a complex: sets N not in the complex all of whose
// hyperfaces are. Every minimal non-face is face + one vertex, so it
// suffices to grow faces by a vertex.
inline std::vector<VertexMask> minimal_nonfaces(const SimplicialComplex& c) {
  const int n = c.ground().size();
  if (n > 25) throw TooLarge("minimal non-face enumeration capped at 25 vertices");
  auto faces = c.all_faces();
  std::unordered_set<VertexMask> face_set(faces.begin(), faces.end());
  std::unordered_set<VertexMask> out;
  for (auto f : faces) {
    for (int v = 0; v < n; ++v) {
      VertexMask vb = VertexMask{1} << v;
      if (f & vb) continue;
      VertexMask cand = f | vb;
      if (face_set.count(cand)) continue;
      bool minimal = true;
      for (int u : mask_vertices(cand)) {
        if (!face_set.count(cand & ~(VertexMask{1} << u))) { minimal = false; break; }
      }
      if (minimal) out.insert(cand);
    }
  }
  std::vector<VertexMask> res(out.begin(), out.end());
  std::sort(res.begin(), res.end(), facet_order);
  return res;
}

}  // namespace detail

// Stanley-Reisner ideal: generated by the minimal non-faces.
inline MonomialIdeal sr_ideal(const SimplicialComplex& c) {
  std::vector<Monomial> gens;
  for (auto nf : detail::minimal_nonfaces(c)) {
    Monomial m = Monomial::one(c.ground().size());
    for (int v : detail::mask_vertices(nf)) m.e[static_cast<std::size_t>(v)] = 1;
    gens.push_back(std::move(m));
  }
  return minimalize(std::move(gens), c.ground());
}

// Stanley-Reisner complex of a squarefree ideal: faces are the squarefree
// monomials outside I.
inline SimplicialComplex sr_complex(const MonomialIdeal& I) {
  for (const auto& g : I.gens())
    if (!g.squarefree()) throw NotSquarefree(g.str(I.vars()));
  const int n = I.vars().size();
  if (n > 25) throw TooLarge("sr_complex is capped at 25 variables");
  // F is a face iff no generator's support is inside F.
  std::vector<VertexMask> gen_masks;
  for (const auto& g : I.gens()) gen_masks.push_back(g.support_mask());
  VertexMask all = n == 0 ? 0 : (VertexMask{1} << n) - 1;
  auto is_face = [&](VertexMask f) {
    for (auto gm : gen_masks)
      if ((gm & f) == gm) return false;
    return true;
  };
  // Keep only maximal faces: f with f + v a face for no vertex v outside f.
  std::vector<VertexMask> faces;
  for (VertexMask f = 0;; ++f) {
    if (is_face(f)) {
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v) {
        VertexMask vb = VertexMask{1} << v;
        if (!(f & vb) && is_face(f | vb)) maximal = false;
      }
      if (maximal) faces.push_back(f);
    }
    if (f == all) break;
  }
  if (faces.empty()) faces.push_back(0);
  return SimplicialComplex(I.vars(), std::move(faces));
}

// True iff every minimal non-face has exactly 2 vertices (no non-faces at
// all also qualifies).
inline bool is_clique_complex(const SimplicialComplex& c) {
  for (auto nf : detail::minimal_nonfaces(c))
    if (__builtin_popcountll(nf) != 2) return false;
  return true;
}

}  // namespace n2p

#endif  // N2P_SIMPLICIAL_HPP
