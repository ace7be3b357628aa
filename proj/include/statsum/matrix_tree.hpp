#pragma once

// Classical matrix-tree theorem and the all-minors theorem, each paired with
// a brute-force enumeration oracle over subgraphs.

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "statsum/checks.hpp"
#include "statsum/enumerate.hpp"
#include "statsum/graph.hpp"
#include "statsum/matrix.hpp"

namespace statsum {

struct DisconnectedError : std::runtime_error {
  DisconnectedError() : std::runtime_error("graph is not connected") {}
};

// Z(T_G) as the principal minor of the Laplacian deleting row/column r.
inline RingElem spanning_tree_sum(const Graph& g, int delete_index = 1) {
  if (!is_connected(g)) throw DisconnectedError();
  if (g.n() < 2) return RingElem(1);
  Matrix l = laplacian(g);
  PairSet j({{delete_index, delete_index}});
  return det(minor_matrix(l, j));
}

// Z(T_G) by enumerating spanning connected acyclic edge subsets.
inline RingElem spanning_tree_sum_oracle(const Graph& g, int cap = kDefaultSimpleEnumCap) {
  RingElem acc(0);
  for_each_multisubgraph(
      g, 1,
      [&](const std::vector<std::uint8_t>& mult) {
        MultiSubgraph f(g, mult);
        if (f.edge_count() != g.n() - 1) return;
        ComponentInfo info = components(f, ComponentMode::kSpanning);
        if (info.count != 1) return;
        acc += f.weight();
      },
      cap);
  return acc;
}

// Spanning forests with exactly m = |J| components, each containing exactly
// one i_p and one j_q; the callback receives the edge multiplicities and the
// permutation gamma with i_p and j_{gamma(p)} in the same component (0-based
// positions over the pairs in i-order).
template <typename Fn>
void for_each_j_admissible_forest(const Graph& g, const PairSet& j, Fn&& fn,
                                  int cap = kDefaultSimpleEnumCap) {
  int m = j.size();
  const auto& pairs = j.pairs();
  for_each_multisubgraph(
      g, 1,
      [&](const std::vector<std::uint8_t>& mult) {
        MultiSubgraph f(g, mult);
        if (f.edge_count() != g.n() - m) return;  // forest with m components has n-m edges
        ComponentInfo info = components(f, ComponentMode::kSpanning);
        if (info.count != m) return;
        if (!info.all_chi_at_most(1)) return;  // acyclic: every chi == 1
        std::vector<int> comp_of(g.n() + 1, -1);
        for (int c = 0; c < info.count; ++c)
          for (int v : info.vertices[c]) comp_of[v] = c;
        std::vector<int> i_count(m, 0), j_count(m, 0), j_in_comp(m, -1);
        for (int p = 0; p < m; ++p) {
          i_count[comp_of[pairs[p].first]]++;
          j_count[comp_of[pairs[p].second]]++;
          j_in_comp[comp_of[pairs[p].second]] = p;
        }
        for (int c = 0; c < m; ++c)
          if (i_count[c] != 1 || j_count[c] != 1) return;
        std::vector<int> gamma(m);
        for (int p = 0; p < m; ++p) gamma[p] = j_in_comp[comp_of[pairs[p].first]];
        fn(f, static_cast<const std::vector<int>&>(gamma));
      },
      cap);
}

// All-minors identity: lhs = (-1)^{Sigma J} det(L_G(J)), rhs the signed sum
// over J-admissible forests with sign eps(tau_J o gamma_{F,J}).
inline CheckPair all_minors_check(const Graph& g, const PairSet& j,
                                  int cap = kDefaultSimpleEnumCap) {
  Matrix l = laplacian(g);
  RingElem lhs = det(minor_matrix(l, j));
  if (j.sigma() % 2 != 0) lhs = -lhs;
  RingElem rhs(0);
  std::vector<int> tau = j.tau();
  for_each_j_admissible_forest(
      g, j,
      [&](const MultiSubgraph& f, const std::vector<int>& gamma) {
        int sign = permutation_sign(compose(tau, gamma));
        RingElem w = f.weight();
        rhs += sign > 0 ? w : -w;
      },
      cap);
  return {lhs, rhs};
}

}  // namespace statsum
