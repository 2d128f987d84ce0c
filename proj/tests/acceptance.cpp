// Acceptance gate: one pass/fail line per criterion. argv[1] is the path to
// the CLI binary (used by the last criterion only).

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "n2p/n2p.hpp"
#include "support/generators.hpp"

using namespace n2p;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": "
            << what << "\n";
  if (!ok) ++g_failures;
}

const std::vector<FieldSpec> kFields = {
    FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)};

// Shared by criteria 2 and 5: per-field oracle verdicts must equal the
// combinatorial one and each other.
bool verdicts_agree(const MonomialIdeal& I, N2pIndex expected) {
  for (const auto& f : kFields)
    if (n2p_from_table(betti_table_general(I, f)) != expected) return false;
  return true;
}

bool criterion1() {
  for (int d = 3; d <= 8; ++d) {
    auto I = cycle_ideal(d + 1);
    if (n2p_quadratic(I) != N2pIndex::finite(d - 2)) return false;
    auto t = hochster_table(I, FieldSpec::rationals());
    if (n2p_from_table(t) != N2pIndex::finite(d - 2)) return false;
    if (t.at(d - 2, d + 1) != 1) return false;
    for (const auto& [ij, mult] : t.entries) {
      if (mult == 0 || ij.second <= ij.first + 2) continue;
      if (ij != std::pair<int, int>(d - 2, d + 1)) return false;
    }
  }
  return true;
}

bool criterion2_and_5(bool* char_independent) {
  auto check = [&](const Graph& g) {
    auto I = sr_ideal(clique_complex(g));
    N2pIndex combinatorial = n2p_quadratic(I);
    if (!verdicts_agree(I, combinatorial)) return false;
    return true;
  };
  for (std::uint64_t mask = 0; mask < 1024; ++mask)
    if (!check(n2p_tests::graph_from_mask(5, mask))) return false;
  std::mt19937 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);  // up to 8
    if (!check(n2p_tests::random_graph(rng, n, 0.15 + 0.07 * static_cast<double>(rng() % 10))))
      return false;
  }
  *char_independent = true;  // verdicts_agree already compared all fields
  return true;
}

bool criterion3_and_5(bool* char_independent) {
  std::mt19937 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    auto I = n2p_tests::random_quadratic_ideal(rng, 6);
    N2pIndex combinatorial = n2p_quadratic(I);
    for (const auto& f : kFields) {
      if (n2p_from_table(betti_table_general(I, f)) != combinatorial) return false;
      if (n2p_from_table(koszul_table(I, f)) != combinatorial) return false;
    }
  }
  *char_independent = true;
  return true;
}

bool criterion4() {
  std::mt19937 rng(107);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);  // up to 12
    const int k = 1 + static_cast<int>(rng() % 3);
    auto g = n2p_tests::random_ktree(rng, n, k);
    auto I = sr_ideal(clique_complex(g));
    if (!is_two_regular(I)) return false;
    if (I.is_zero()) continue;
    if (regularity(betti_table_general(I, FieldSpec::rationals())) != 2)
      return false;
  }
  return true;
}

bool criterion6() {
  std::mt19937 rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    auto I = n2p_tests::random_quadratic_ideal(rng, 6);
    if (is_saturated_quadratic(I) != (saturate_oracle(I) == I)) return false;
  }
  return true;
}

bool criterion7() {
  auto same = [](const Graph& g) {
    auto fast = shortest_hole(g);
    auto brute = brute_force_shortest_hole(g);
    if (fast.has_value() != brute.has_value()) return false;
    return !fast || *fast == *brute;
  };
  for (int n = 1; n <= 5; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
      if (!same(n2p_tests::graph_from_mask(n, mask))) return false;
  }
  std::mt19937 rng(113);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 6);  // up to 9
    if (!same(n2p_tests::random_graph(rng, n, 0.15 + 0.07 * static_cast<double>(rng() % 10))))
      return false;
  }
  auto hp = shortest_hole(petersen_graph());
  return hp && hp->length() == 5;
}

bool criterion8() {
  // boundary-of-simplex homology for k = 1..5: the hollow k-simplex on k+1
  // vertices is S^{k-1}
  for (int k = 1; k <= 5; ++k) {
    const int n = k + 1;
    std::vector<VertexMask> facets;
    VertexMask all = (VertexMask{1} << n) - 1;
    for (int v = 0; v < n; ++v) facets.push_back(all & ~(VertexMask{1} << v));
    SimplicialComplex sphere(n2p_tests::var_set(n), facets);
    for (const auto& f : kFields) {
      auto h = reduced_homology_dims(sphere, f);
      for (int d = -1; d <= h.top(); ++d)
        if (h.dim(d) != (d == k - 1 ? 1 : 0)) return false;
    }
  }

  auto hi = reduced_homology_dims(SimplicialComplex::irrelevant(),
                                  FieldSpec::rationals());
  if (hi.dim(-1) != 1) return false;

  std::mt19937 rng(127);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = n2p_tests::random_graph(rng, 3 + static_cast<int>(rng() % 5), 0.5);
    auto delta = clique_complex(g);
    auto b = boundary_matrices(delta);
    for (int k = 1; k <= b.top_dim(); ++k) {
      const IntMat& lo = b.boundary[static_cast<std::size_t>(k - 1)];
      const IntMat& hi2 = b.boundary[static_cast<std::size_t>(k)];
      for (int i = 0; i < lo.rows; ++i)
        for (int j = 0; j < hi2.cols; ++j) {
          long long sum = 0;
          for (int t = 0; t < hi2.rows; ++t) sum += lo.at(i, t) * hi2.at(t, j);
          if (sum != 0) return false;
        }
    }
    long long chi = 0;
    int sign = -1;
    for (int k = -1; k <= delta.dim(); ++k) {
      chi += sign * static_cast<long long>(delta.faces_of_dim(k).size());
      sign = -sign;
    }
    if (reduced_homology_dims(delta, FieldSpec::rationals()).reduced_euler() != chi)
      return false;
  }
  return true;
}

bool criterion9() {
  auto I = parse_ideal("vars: x y z w\ngens: x^2, x*y, y^2, x*z");
  auto P = polarize(I);
  auto expected = parse_ideal(
      "vars: z w x_1 x_2 y_1 y_2\ngens: x_1*x_2, x_1*y_1, y_1*y_2, x_1*z");
  if (P.ideal != expected) return false;
  for (const auto& f : kFields)
    if (hochster_table(P.ideal, f) != koszul_table(I, f)) return false;
  return true;
}

// ---- criterion 10: exercise the CLI binary ----

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0)
    r.out.append(buf.data(), got);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

bool criterion10(const std::string& cli) {
  auto demo1 = run(cli + " demo cycle 7 --json");
  auto demo2 = run(cli + " --threads 4 demo cycle 7 --json");
  if (demo1.exit_code != 0 || demo2.exit_code != 0) return false;
  if (demo1.out != demo2.out) return false;  // deterministic output
  if (demo1.out.find("\"kind\": \"finite\"") == std::string::npos) return false;
  if (demo1.out.find("\"p\": 4") == std::string::npos) return false;
  if (demo1.out.find("\"agree\": true") == std::string::npos) return false;

  auto check_fixture = [&](const std::string& text, const std::string& p_frag) {
    std::ofstream("acceptance_fixture.txt") << text;
    auto r = run(cli + " verify acceptance_fixture.txt --json");
    if (r.exit_code != 0) return false;
    if (r.out.find("\"agree\": true") == std::string::npos) return false;
    return r.out.find(p_frag) != std::string::npos;
  };
  if (!check_fixture("vars: x y z\ngens: x^2, y*z\n", "\"p\": 1")) return false;
  if (!check_fixture("vars: x y z\ngens: x^2, y^2\n", "\"p\": 1")) return false;

  // error-path exit codes
  if (run(cli + " n2p /nonexistent-file").exit_code != 3) return false;
  std::ofstream("acceptance_bad.txt") << "gens: x*y\n";
  if (run(cli + " n2p acceptance_bad.txt").exit_code != 2) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-cli>\n";
    return 2;
  }

  bool ci2 = false, ci3 = false;

  report(1, "cycle family indices and Betti tables", criterion1());
  report(2, "combinatorial index matches the oracle on all small graphs",
         criterion2_and_5(&ci2));
  report(3, "square-vertex criterion matches both oracles on random ideals",
         criterion3_and_5(&ci3));
  report(4, "chordal clique ideals are 2-regular", criterion4());
  report(5, "verdicts are identical over QQ, F2 and F3", ci2 && ci3);
  report(6, "saturation test matches the saturation oracle", criterion6());
  report(7, "hole detection matches brute force; Petersen girth 5", criterion7());
  report(8, "homology unit suite", criterion8());
  report(9, "polarization golden test and oracle agreement", criterion9());
  report(10, "CLI determinism, verdicts and exit codes", criterion10(argv[1]));

  return g_failures == 0 ? 0 : 1;
}
