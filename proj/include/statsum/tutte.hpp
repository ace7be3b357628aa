#pragma once

// Multivariate Tutte polynomial T_G(q,w), the external activity polynomial
// C_G computed three ways, and the factorial partition lemma behind the
// partition formula.

#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "statsum/enumerate.hpp"
#include "statsum/graph.hpp"
#include "statsum/matrix_tree.hpp"
#include "statsum/unipoly.hpp"

namespace statsum {

// Edge numeration: rank_of[edge_index] is the edge's position in the order.
// The default order is lexicographic on (i, j), i.e. the identity on the
// graph's edge indices.
using EdgeOrder = std::vector<int>;

inline EdgeOrder default_edge_order(const Graph& g) {
  EdgeOrder order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

// T_G(q, w) = sum_m q^m Z(U_m), U_m the spanning subgraphs with exactly m
// connected components (isolated vertices count).
inline UniPoly tutte_multivariate(const Graph& g, int cap = kDefaultSimpleEnumCap) {
  UniPoly acc;
  for_each_multisubgraph(
      g, 1,
      [&](const std::vector<std::uint8_t>& mult) {
        MultiSubgraph f(g, mult);
        ComponentInfo info = components(f, ComponentMode::kSpanning);
        acc.add_term(info.count, f.weight());
      },
      cap);
  return acc;
}

namespace detail {

// Path between two vertices inside a spanning tree given as edge indices.
inline std::vector<int> tree_path_edges(const Graph& g, const std::vector<int>& tree_edges,
                                        int from, int to) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.n() + 1);  // (neighbor, edge idx)
  for (int e : tree_edges) {
    adj[g.edge(e).u].emplace_back(g.edge(e).v, e);
    adj[g.edge(e).v].emplace_back(g.edge(e).u, e);
  }
  std::vector<int> parent_edge(g.n() + 1, -1), parent(g.n() + 1, 0);
  std::vector<bool> seen(g.n() + 1, false);
  std::vector<int> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [w, e] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      parent_edge[w] = e;
      stack.push_back(w);
    }
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(parent_edge[v]);
  return path;
}

template <typename Fn>
void for_each_spanning_tree(const Graph& g, Fn&& fn, int cap = kDefaultSimpleEnumCap) {
  for_each_multisubgraph(
      g, 1,
      [&](const std::vector<std::uint8_t>& mult) {
        MultiSubgraph f(g, mult);
        if (f.edge_count() != g.n() - 1) return;
        if (components(f, ComponentMode::kSpanning).count != 1) return;
        std::vector<int> edges;
        for (std::size_t e = 0; e < mult.size(); ++e)
          if (mult[e]) edges.push_back(static_cast<int>(e));
        fn(edges);
      },
      cap);
}

}  // namespace detail

// C_G by its definition: spanning trees weighted by w(T) times (w_e + 1)
// over the externally active edges, e being active when it is the smallest
// edge of the unique cycle of T + e.
inline RingElem ext_activity_tree_def(const Graph& g, const EdgeOrder& order,
                                      int cap = kDefaultSimpleEnumCap) {
  if (!is_connected(g)) throw DisconnectedError();
  RingElem acc(0);
  detail::for_each_spanning_tree(
      g,
      [&](const std::vector<int>& tree_edges) {
        RingElem term(1);
        for (int e : tree_edges) term *= g.weight(e);
        std::vector<bool> in_tree(g.edge_count(), false);
        for (int e : tree_edges) in_tree[e] = true;
        for (int e = 0; e < g.edge_count(); ++e) {
          if (in_tree[e]) continue;
          std::vector<int> cycle =
              detail::tree_path_edges(g, tree_edges, g.edge(e).u, g.edge(e).v);
          bool active = true;
          for (int ce : cycle)
            if (order[ce] < order[e]) active = false;
          if (active) term *= g.weight(e) + RingElem(1);
        }
        acc += term;
      },
      cap);
  return acc;
}

inline RingElem ext_activity_tree_def(const Graph& g, int cap = kDefaultSimpleEnumCap) {
  return ext_activity_tree_def(g, default_edge_order(g), cap);
}

// C_G = Z(U_0), the statistical sum of connected spanning subgraphs.
inline RingElem ext_activity_subgraph_sum(const Graph& g, int cap = kDefaultSimpleEnumCap) {
  if (!is_connected(g)) throw DisconnectedError();
  RingElem acc(0);
  for_each_multisubgraph(
      g, 1,
      [&](const std::vector<std::uint8_t>& mult) {
        MultiSubgraph f(g, mult);
        if (components(f, ComponentMode::kSpanning).count != 1) return;
        acc += f.weight();
      },
      cap);
  return acc;
}

// C_G as the signed sum over set partitions of the vertices:
//   sum_k (-1)^{k-1} (k-1)! sum_{[n] = P_1 u ... u P_k} prod (w_e + 1)
// over the edges with both endpoints in one block.
inline RingElem ext_activity_partition_formula(const Graph& g, int cap = kDefaultPartitionCap) {
  if (!is_connected(g)) throw DisconnectedError();
  RingElem acc(0);
  for_each_set_partition(
      g.n(),
      [&](const std::vector<int>& block_of, int blocks) {
        RingElem prod(1);
        for (int e = 0; e < g.edge_count(); ++e) {
          const Edge& ed = g.edge(e);
          if (block_of[ed.u - 1] == block_of[ed.v - 1]) prod *= g.weight(e) + RingElem(1);
        }
        BigInt coeff = 1;  // (k-1)!
        for (int i = 2; i < blocks; ++i) coeff *= i;
        RingElem term = RingElem(coeff) * prod;
        acc += blocks % 2 == 1 ? term : -term;
      },
      cap);
  return acc;
}

// sum_k (-1)^{k-1} sum_partitions (p_1 - 1)! ... (p_k - 1)!, which vanishes
// for every n >= 2.
inline RingElem moebius_lemma_check(int n, int cap = kDefaultPartitionCap) {
  BigInt acc = 0;
  for_each_set_partition(
      n,
      [&](const std::vector<int>& block_of, int blocks) {
        std::vector<int> size(blocks, 0);
        for (int b : block_of) size[b]++;
        BigInt prod = 1;
        for (int s : size)
          for (int i = 2; i < s; ++i) prod *= i;
        acc += blocks % 2 == 1 ? prod : -prod;
      },
      cap);
  return RingElem(acc);
}

// Free-term identity: the coefficient of q^1 in T_G(q,w) equals C_G.
inline CheckPair free_term_check(const Graph& g, int cap = kDefaultSimpleEnumCap) {
  if (!is_connected(g)) throw DisconnectedError();
  return {tutte_multivariate(g, cap).coeff(1), ext_activity_subgraph_sum(g, cap)};
}

}  // namespace statsum
