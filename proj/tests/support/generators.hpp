// Deterministic random instance generators shared by the unit and
// acceptance suites.
#ifndef N2P_TESTS_GENERATORS_HPP
#define N2P_TESTS_GENERATORS_HPP

#include <random>
#include <string>
#include <vector>

#include "n2p/ideal.hpp"
#include "n2p/simplicial.hpp"

namespace n2p_tests {

inline n2p::VariableSet var_set(int n, const std::string& stem = "v") {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(stem + std::to_string(i));
  return n2p::VariableSet(names);
}

inline n2p::Graph random_graph(std::mt19937& rng, int n, double edge_prob) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return n2p::Graph(var_set(n), std::move(edges));
}

// Graph from an edge bitmask over the C(n,2) vertex pairs in row order;
// mask 0..2^C(n,2)-1 enumerates all labeled graphs on n vertices.
inline n2p::Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1) edges.emplace_back(u, v);
  return n2p::Graph(var_set(n), std::move(edges));
}

// Random quadratic monomial ideal: a random set of squarefree quadrics
// plus a random square-vertex set.
inline n2p::MonomialIdeal random_quadratic_ideal(std::mt19937& rng,
                                                 int max_vars = 6) {
  std::uniform_int_distribution<int> nvars(2, max_vars);
  const int n = nvars(rng);
  std::bernoulli_distribution pair_coin(0.4), square_coin(0.3);
  std::vector<n2p::Monomial> gens;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (pair_coin(rng)) {
        n2p::Monomial m = n2p::Monomial::one(n);
        m.e[static_cast<std::size_t>(u)] = m.e[static_cast<std::size_t>(v)] = 1;
        gens.push_back(std::move(m));
      }
  for (int v = 0; v < n; ++v)
    if (square_coin(rng)) {
      n2p::Monomial m = n2p::Monomial::one(n);
      m.e[static_cast<std::size_t>(v)] = 2;
      gens.push_back(std::move(m));
    }
  return n2p::minimalize(std::move(gens), var_set(n, "x"));
}

// Random monomial ideal with generator degree <= 3 (for the two-oracle
// agreement suite).
inline n2p::MonomialIdeal random_monomial_ideal(std::mt19937& rng,
                                                int max_vars = 5,
                                                int max_deg = 3) {
  std::uniform_int_distribution<int> nvars(2, max_vars);
  const int n = nvars(rng);
  std::uniform_int_distribution<int> ngens(1, 5);
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<int> var(0, n - 1);
  std::vector<n2p::Monomial> gens;
  const int g = ngens(rng);
  for (int k = 0; k < g; ++k) {
    n2p::Monomial m = n2p::Monomial::one(n);
    const int d = deg(rng);
    for (int i = 0; i < d; ++i) ++m.e[static_cast<std::size_t>(var(rng))];
    gens.push_back(std::move(m));
  }
  return n2p::minimalize(std::move(gens), var_set(n, "x"));
}

// Random k-tree: start from a (k+1)-clique and attach each new vertex to a
// random existing k-clique. k-trees are exactly the maximal chordal graphs
// of treewidth k.
inline n2p::Graph random_ktree(std::mt19937& rng, int n, int k) {
  std::vector<std::vector<int>> kcliques;
  std::vector<std::pair<int, int>> edges;
  std::vector<int> base;
  for (int v = 0; v <= k && v < n; ++v) {
    for (int u : base) edges.emplace_back(u, v);
    base.push_back(v);
  }
  if (n <= k + 1) return n2p::Graph(var_set(n), std::move(edges));
  for (std::size_t i = 0; i < base.size(); ++i) {
    std::vector<int> c;
    for (std::size_t j = 0; j < base.size(); ++j)
      if (j != i) c.push_back(base[j]);
    kcliques.push_back(std::move(c));
  }
  if (kcliques.empty()) kcliques.push_back({});  // k = 0: attach anywhere
  for (int v = k + 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, kcliques.size() - 1);
    const std::vector<int> c = kcliques[pick(rng)];
    for (int u : c) edges.emplace_back(u, v);
    for (std::size_t i = 0; i < c.size(); ++i) {
      std::vector<int> nc;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (j != i) nc.push_back(c[j]);
      nc.push_back(v);
      kcliques.push_back(std::move(nc));
    }
    std::vector<int> cv = c;
    if (static_cast<int>(cv.size()) < k) { cv.push_back(v); kcliques.push_back(cv); }
  }
  return n2p::Graph(var_set(n), std::move(edges));
}

}  // namespace n2p_tests

#endif  // N2P_TESTS_GENERATORS_HPP
