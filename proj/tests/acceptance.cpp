// Acceptance suite: runs every identity at full stated scale and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "statsum/statsum.hpp"

using namespace statsum;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int number, const std::string& name, const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = fn();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] criterion %d: %s (%s; %.1fs)\n", out.pass ? "PASS" : "FAIL", number,
              name.c_str(), out.detail.c_str(), secs);
  std::fflush(stdout);
  if (!out.pass) ++failures;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  Graph full = Graph::complete(n);
  int m = full.edge_count();
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Graph g(n);
    for (int e = 0; e < m; ++e)
      if (mask & (1u << e)) g.add_edge(full.edge(e).u, full.edge(e).v);
    fn(g);
  }
}

Graph random_graph(int n, double p, std::mt19937& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

Graph random_connected_graph(int n, double p, std::mt19937& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (is_connected(g)) return g;
  }
}

Graph k4_minus_edge() {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  return g;
}

Graph bowtie() {
  Graph g(5);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  g.add_edge(3, 5);
  g.add_edge(4, 5);
  return g;
}

PairSet random_pair_set(int n, int m, std::mt19937& rng) {
  std::vector<int> is(n), js(n);
  for (int i = 0; i < n; ++i) is[i] = js[i] = i + 1;
  std::shuffle(is.begin(), is.end(), rng);
  std::shuffle(js.begin(), js.end(), rng);
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < m; ++k) pairs.emplace_back(is[k], js[k]);
  return PairSet(pairs);
}

RootSet random_root_set(int n, int max_size, bool need_minus, std::mt19937& rng) {
  while (true) {
    std::vector<Root> all;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        all.push_back({i, j, false});
        all.push_back({i, j, true});
      }
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<int> sz(2, max_size);
    int size = std::min<int>(sz(rng), static_cast<int>(all.size()));
    all.resize(size);
    RootSet s(n, std::move(all));
    if (!need_minus || s.has_minus()) return s;
  }
}

Outcome criterion_matrix_tree() {
  int graphs = 0;
  for (int n = 2; n <= 5; ++n) {
    bool bad = false;
    for_each_graph(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      ++graphs;
      if (spanning_tree_sum(g) != spanning_tree_sum_oracle(g)) bad = true;
    });
    if (bad) return {false, "mismatch among exhaustive n <= 5 graphs"};
  }
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_connected_graph(6, 0.5, rng);
    ++graphs;
    if (spanning_tree_sum(g) != spanning_tree_sum_oracle(g))
      return {false, "mismatch on a random n = 6 graph"};
  }
  return {true, std::to_string(graphs) + " graphs, symbolic equality"};
}

Outcome criterion_all_minors() {
  std::mt19937 rng(1002);
  std::uniform_int_distribution<int> nd(2, 6), md(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    int n = nd(rng);
    Graph g = random_graph(n, 0.6, rng);
    PairSet j = random_pair_set(n, std::min(md(rng), n), rng);
    if (!all_minors_check(g, j).ok()) return {false, "mismatch at trial " + std::to_string(trial)};
  }
  return {true, "100 random (G, J) instances, n <= 6, |J| <= 3"};
}

Outcome criterion_two_core() {
  int shapes = 0;
  std::int64_t max_d = 1;
  std::vector<Graph> hosts{Graph::complete(3), Graph::complete(4), bowtie(), k4_minus_edge()};
  for (const Graph& g : hosts) {
    bool bad = false;
    for_each_multisubgraph(g, 2, [&](const std::vector<std::uint8_t>& mult) {
      CoreShape h = [&]() -> CoreShape {
        try {
          return CoreShape::from_multisubgraph(MultiSubgraph(g, mult));
        } catch (const BadShapeError&) {
          return CoreShape();
        }
      }();
      if (h.embedding().parent == nullptr) return;
      ++shapes;
      max_d = std::max(max_d, d_of_negative_part(h));
      if (!msub_check(g, h).ok()) bad = true;
      if (z_core_via_inversion(g, h) != z_core_oracle(g, h)) bad = true;
    });
    if (bad) return {false, "mismatch on a shape in a host with e = " +
                                std::to_string(g.edge_count())};
  }
  return {true, std::to_string(shapes) +
                    " embeddable shapes; inversion divides by d(H0), confirmed up to d = " +
                    std::to_string(max_d)};
}

Outcome criterion_chi_zero() {
  int graphs = 0;
  for (int n = 2; n <= 5; ++n) {
    bool bad = false;
    for_each_graph(n, [&](const Graph& g) {
      ++graphs;
      for (int s = 2; s <= g.n(); ++s)
        if (one_cycle_sum(g, s) != one_cycle_sum_oracle(g, s)) bad = true;
      if (chi_zero_connected_sum(g) != chi_zero_connected_sum_oracle(g)) bad = true;
      if (!genfun_check(g).ok()) bad = true;
    });
    if (bad) return {false, "mismatch among exhaustive n = " + std::to_string(n) + " graphs"};
  }
  std::mt19937 rng(1004);
  std::uniform_int_distribution<int> nd(2, 5), md(1, 2);
  for (int trial = 0; trial < 100; ++trial) {
    int n = nd(rng);
    Graph g = random_graph(n, 0.6, rng);
    PairSet j = random_pair_set(n, std::min(md(rng), n), rng);
    if (!given_cycle_check(g, j).ok())
      return {false, "fixed-cycle mismatch at trial " + std::to_string(trial)};
  }
  return {true, std::to_string(graphs) + " graphs exhaustively + 100 fixed-cycle instances"};
}

Outcome criterion_dn() {
  std::mt19937 rng(1005);
  // independence: rank vs combinatorial on every subset
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 4;
    RootSet s = random_root_set(n, 12, false, rng);
    for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
      RootSet sub = s.subset(mask);
      if (is_independent_rank(sub) != is_independent_combinatorial(sub))
        return {false, "independence criteria disagree"};
    }
  }
  // generating identity and its t = -2 specialization
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 4;
    RootSet s = random_root_set(n, 10, true, rng);
    if (!cardm_check(s).ok()) return {false, "cardm mismatch at trial " + std::to_string(trial)};
    if (!sumd_check(s).ok()) return {false, "sumd mismatch at trial " + std::to_string(trial)};
  }
  // The doubled-pair instance, spot values frozen from the oracles: the
  // minor sum at t = -2 is 4*u*v (each side of the identity), while the
  // signed sum over maximal independent subsets is -2*u*v. Both are pinned.
  RootSet d2(2, {{1, 2, false}, {1, 2, true}});
  SumdReport rep = sumd_check(d2);
  RingElem uv = RingElem::variable("u_1_2") * RingElem::variable("v_1_2");
  if (!rep.ok()) return {false, "doubled-pair identity mismatch"};
  if (rep.lhs != RingElem(4) * uv)
    return {false, "doubled-pair minor sum at t = -2 is " + rep.lhs.to_string()};
  if (rep.rhs_all_maximal != RingElem(-2) * uv)
    return {false, "doubled-pair maximal-subset sum is " + rep.rhs_all_maximal.to_string()};
  return {true,
          "independence 30/30, cardm 30/30, sumd 30/30; doubled-pair t=-2: minor sum 4*u*v, "
          "signed maximal-subset sum -2*u*v"};
}

Outcome criterion_orientations() {
  if (d_oracle(Graph::path(2)) != 0) return {false, "d(edge) != 0"};
  if (d_oracle(Graph::complete(3)) != 2) return {false, "d(triangle) != 2"};
  for (int n = 3; n <= 6; ++n)
    if (d_oracle(Graph::cycle(n)) != 2) return {false, "d(C_n) != 2"};
  int graphs = 0;
  for (int n = 2; n <= 5; ++n) {
    bool bad = false;
    for_each_graph(n, [&](const Graph& g) {
      if (!is_connected(g) || g.n() < 2) return;
      ++graphs;
      std::int64_t d = d_oracle(g);
      if (d_bipartite_formula(g) != d || d_chromatic_formula(g) != d ||
          d_subgraph_formula(g) != d)
        bad = true;
    });
    if (bad) return {false, "method disagreement among exhaustive n <= 5 graphs"};
  }
  std::mt19937 rng(1006);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_connected_graph(6, 0.5, rng);
    ++graphs;
    std::int64_t d = d_oracle(g);
    if (d_bipartite_formula(g) != d || d_chromatic_formula(g) != d || d_subgraph_formula(g) != d)
      return {false, "method disagreement on a random n = 6 graph"};
  }
  return {true, std::to_string(graphs) + " graphs, four methods agree"};
}

Outcome criterion_ext_activity() {
  for (int n = 2; n <= 8; ++n)
    if (!moebius_lemma_check(n).is_zero())
      return {false, "factorial partition sum nonzero at n = " + std::to_string(n)};
  Graph tri = Graph::complete(3);
  tri.set_all_weights(RingElem(1));
  if (ext_activity_subgraph_sum(tri) != RingElem(4)) return {false, "triangle value != 4"};
  Graph c4 = Graph::cycle(4);
  c4.set_all_weights(RingElem(1));
  if (ext_activity_subgraph_sum(c4) != RingElem(5)) return {false, "4-cycle value != 5"};

  int graphs = 0;
  for (int n = 2; n <= 5; ++n) {
    bool bad = false;
    for_each_graph(n, [&](const Graph& g) {
      if (!is_connected(g) || g.n() < 2) return;
      ++graphs;
      RingElem by_subgraphs = ext_activity_subgraph_sum(g);
      if (ext_activity_tree_def(g) != by_subgraphs) bad = true;
      if (ext_activity_partition_formula(g) != by_subgraphs) bad = true;
      if (free_term_check(g).lhs != by_subgraphs) bad = true;
      if (n <= 4) {
        EdgeOrder order = default_edge_order(g);
        std::sort(order.begin(), order.end());
        do {
          if (ext_activity_tree_def(g, order) != by_subgraphs) bad = true;
        } while (std::next_permutation(order.begin(), order.end()));
      }
    });
    if (bad) return {false, "route disagreement among n = " + std::to_string(n) + " graphs"};
  }
  return {true, std::to_string(graphs) +
                    " graphs, three routes + free term + exhaustive order invariance"};
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(STATSUM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_cli() {
  std::string dir = STATSUM_FIXTURE_DIR;
  for (const char* f : {"triangle.txt", "k4.txt", "bowtie.txt", "d2.txt"}) {
    int code = run_cli("verify-all " + dir + "/" + f);
    if (code != 0) return {false, std::string(f) + " exited " + std::to_string(code)};
  }
  if (run_cli("verify-all " + dir + "/corrupt.txt") != 2)
    return {false, "corrupt fixture did not exit 2"};
  if (run_cli("verify-all " + dir + "/perturbed.txt") != 1)
    return {false, "perturbed Laplacian fixture did not exit 1"};
  return {true, "verify-all exit codes 0/2/1 as required"};
}

}  // namespace

int main() {
  run(1, "matrix-tree vs enumeration", criterion_matrix_tree);
  run(2, "all-minors identity", criterion_all_minors);
  run(3, "fixed 2-core identities", criterion_two_core);
  run(4, "vanishing-Euler-characteristic identities", criterion_chi_zero);
  run(5, "root system independence and signed identity", criterion_dn);
  run(6, "source/sink-free orientation counts", criterion_orientations);
  run(7, "external activity polynomial", criterion_ext_activity);
  run(8, "command-line interface", criterion_cli);
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
