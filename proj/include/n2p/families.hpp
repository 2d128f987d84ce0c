#ifndef N2P_FAMILIES_HPP
#define N2P_FAMILIES_HPP

#include <string>
#include <vector>

#include "n2p/ideal.hpp"
#include "n2p/simplicial.hpp"

namespace n2p {

// The n-cycle graph on vertices v0..v{n-1}, n >= 3.
inline Graph cycle_graph(int n) {
  if (n < 3) throw Error("a cycle needs at least 3 vertices");
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  return Graph(VariableSet(names), std::move(edges));
}

// Stanley-Reisner ideal of the n-cycle complex: the non-edges v_i v_j.
// Zero for n = 3 (the triangle is a full simplex).
inline MonomialIdeal cycle_ideal(int n) {
  Graph g = cycle_graph(n);
  std::vector<Monomial> gens;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) {
        Monomial m = Monomial::one(n);
        m.e[static_cast<std::size_t>(u)] = m.e[static_cast<std::size_t>(v)] = 1;
        gens.push_back(std::move(m));
      }
  return minimalize(std::move(gens), g.vertices());
}

// Petersen graph: girth 5 and triangle-free, so its shortest hole has
// length 5.
inline Graph petersen_graph() {
  std::vector<std::string> names;
  for (int i = 0; i < 10; ++i) names.push_back("p" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  return Graph(VariableSet(names), std::move(edges));
}

}  // namespace n2p

#endif  // N2P_FAMILIES_HPP
