#ifndef N2P_GRAPH_ANALYSIS_HPP
#define N2P_GRAPH_ANALYSIS_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <vector>

#include "n2p/errors.hpp"
#include "n2p/simplicial.hpp"

namespace n2p {

// A chordless cycle of length >= 4, stored in canonical orientation:
// starts at its smallest vertex, second vertex smaller than the last.
struct MinimalCycle {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }

  // Re-verify the hole invariants directly against the graph.
  bool verify(const Graph& g) const {
    const int q = length();
    if (q < 4) return false;
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      return false;
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) {
        bool consecutive = (j == i + 1) || (i == 0 && j == q - 1);
        if (g.adjacent(vertices[static_cast<std::size_t>(i)],
                       vertices[static_cast<std::size_t>(j)]) != consecutive)
          return false;
      }
    return true;
  }

  // Canonical form: rotate to the minimum vertex, then pick the direction
  // with the smaller successor.
  static MinimalCycle canonical(std::vector<int> cyc) {
    const int q = static_cast<int>(cyc.size());
    int pos = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
    std::vector<int> fwd(static_cast<std::size_t>(q)), bwd(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
      fwd[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>((pos + i) % q)];
      bwd[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>((pos - i + q * 2) % q)];
    }
    return MinimalCycle{fwd <= bwd ? fwd : bwd};
  }

  friend bool operator==(const MinimalCycle& a, const MinimalCycle& b) {
    return a.vertices == b.vertices;
  }
  friend bool operator<(const MinimalCycle& a, const MinimalCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  }
};

// Chordality via lexicographic BFS: the reverse of a LexBFS visit order is
// a perfect elimination ordering iff the graph is chordal, so we run LexBFS
// and verify the ordering directly.
inline bool is_chordal(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> visit_no(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (visit_no[static_cast<std::size_t>(v)] >= 0) continue;
      if (best < 0 || label[static_cast<std::size_t>(v)] > label[static_cast<std::size_t>(best)])
        best = v;
    }
    visit_no[static_cast<std::size_t>(best)] = step;
    for (int u : detail::mask_vertices(g.neighbors(best)))
      if (visit_no[static_cast<std::size_t>(u)] < 0)
        label[static_cast<std::size_t>(u)].push_back(n - step);
  }
  // Elimination check: earlier-visited neighbors of each vertex must form
  // a clique.
  for (int v = 0; v < n; ++v) {
    std::vector<int> prior;
    for (int u : detail::mask_vertices(g.neighbors(v)))
      if (visit_no[static_cast<std::size_t>(u)] < visit_no[static_cast<std::size_t>(v)])
        prior.push_back(u);
    for (std::size_t i = 0; i < prior.size(); ++i)
      for (std::size_t j = i + 1; j < prior.size(); ++j)
        if (!g.adjacent(prior[i], prior[j])) return false;
  }
  return true;
}

// All holes of length <= max_len, each once up to rotation/reflection,
// sorted by (length, vertex list). DFS over chordless paths anchored at the
// cycle's minimum vertex.
inline std::vector<MinimalCycle> enumerate_holes(const Graph& g, int max_len) {
  if (max_len < 4) throw Error("max_len must be >= 4");
  const int n = g.num_vertices();
  std::vector<MinimalCycle> out;
  std::vector<int> path;

  auto dfs = [&](auto&& self) -> void {
    const int len = static_cast<int>(path.size());
    if (len >= max_len) return;
    const int v0 = path.front(), last = path.back();
    for (int w : detail::mask_vertices(g.neighbors(last))) {
      if (w <= v0) continue;
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      // chordless: w may touch the path only at its endpoint (and possibly
      // at v0, which closes the cycle)
      bool chord = false;
      for (int i = 1; i < len - 1; ++i)
        if (g.adjacent(w, path[static_cast<std::size_t>(i)])) { chord = true; break; }
      if (chord) continue;
      if (g.adjacent(w, v0)) {
        if (len + 1 >= 4 && path[1] < w) {
          auto cyc = path;
          cyc.push_back(w);
          out.push_back(MinimalCycle::canonical(std::move(cyc)));
        }
        continue;  // extending past w would leave the chord (w, v0)
      }
      path.push_back(w);
      self(self);
      path.pop_back();
    }
  };

  for (int v = 0; v < n; ++v)
    for (int u : detail::mask_vertices(g.neighbors(v))) {
      if (u <= v) continue;
      path = {v, u};
      dfs(dfs);
    }
  std::sort(out.begin(), out.end());
  return out;
}

// Shortest hole, or absent iff the graph is chordal. For each edge (u,v) we
// search a shortest u-v path with the edge and the common neighborhood of u
// and v removed: such a path is induced (shortest paths have no shortcuts)
// and closing it with uv gives a chordless cycle, while every hole through
// uv survives the removal, so the minimum over edges is exact.
inline std::optional<MinimalCycle> shortest_hole(const Graph& g) {
  const int n = g.num_vertices();
  int best = -1;
  for (int u = 0; u < n; ++u)
    for (int v : detail::mask_vertices(g.neighbors(u))) {
      if (v <= u) continue;
      VertexMask banned = g.neighbors(u) & g.neighbors(v);
      std::vector<int> dist(static_cast<std::size_t>(n), -1);
      std::deque<int> queue{u};
      dist[static_cast<std::size_t>(u)] = 0;
      while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : detail::mask_vertices(g.neighbors(x))) {
          if (dist[static_cast<std::size_t>(y)] >= 0) continue;
          if ((banned >> y) & 1) continue;
          if (x == u && y == v) continue;  // the edge uv itself
          dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
          queue.push_back(y);
        }
      }
      int d = dist[static_cast<std::size_t>(v)];
      if (d >= 3 && (best < 0 || d + 1 < best)) best = d + 1;
    }
  if (best < 0) return std::nullopt;
  // deterministic witness: canonically least hole of the minimum length
  for (const auto& h : enumerate_holes(g, best))
    if (h.length() == best) return h;
  return std::nullopt;  // unreachable
}

// Exhaustive oracle: scan all vertex subsets whose induced subgraph is a
// cycle. Hard-capped at 14 vertices.
inline std::optional<MinimalCycle> brute_force_shortest_hole(const Graph& g) {
  const int n = g.num_vertices();
  if (n > 14) throw TooLarge("brute-force hole search capped at 14 vertices");
  std::optional<MinimalCycle> best;
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    const int k = __builtin_popcountll(s);
    if (k < 4) continue;
    if (best && k > best->length()) continue;
    auto verts = detail::mask_vertices(s);
    // induced subgraph is a cycle iff every vertex has induced degree 2
    // and the subgraph is connected
    bool ok = true;
    for (int v : verts)
      if (__builtin_popcountll(g.neighbors(v) & s) != 2) { ok = false; break; }
    if (!ok) continue;
    // walk the cycle from the smallest vertex
    std::vector<int> cyc{verts.front()};
    int prev = -1, cur = verts.front();
    while (true) {
      auto nb = detail::mask_vertices(g.neighbors(cur) & s);
      int next = (nb[0] == prev) ? nb[1] : nb[0];
      if (next == verts.front()) break;
      cyc.push_back(next);
      prev = cur;
      cur = next;
    }
    if (static_cast<int>(cyc.size()) != k) continue;  // disconnected union
    MinimalCycle cand = MinimalCycle::canonical(std::move(cyc));
    if (!best || cand < *best) best = cand;
  }
  return best;
}

}  // namespace n2p

#endif  // N2P_GRAPH_ANALYSIS_HPP
