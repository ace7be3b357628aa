#pragma once

// Statistical sums of subgraphs with vanishing Euler characteristic:
// unicyclic sums via f-determinants, the fixed-cycle minor identity, the
// Q_m generating function and its specializations.
//
// The subgraph families are spanning: every component of H, isolated
// vertices included, must be unicyclic (chi = 0), so every vertex is covered
// and doubled edges act as cycles of length 2. Each identity's sign
// normalization below is fixed by the enumeration oracles.

#include <algorithm>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "statsum/checks.hpp"
#include "statsum/enumerate.hpp"
#include "statsum/graph.hpp"
#include "statsum/matrix.hpp"
#include "statsum/matrix_tree.hpp"
#include "statsum/unipoly.hpp"

namespace statsum {

namespace detail {

// (-1)^{1 + k_2 + k_4 + ...}: the cycle-type sign under which the
// permutation expansion collapses onto fixed-core statistical sums.
inline int chi_zero_sign(const CycleType& t) {
  int even_cycles = 0;
  for (int s = 2; s <= t.n(); s += 2) even_cycles += t.count(s);
  return (1 + even_cycles) % 2 == 0 ? 1 : -1;
}

}  // namespace detail

// All spanning multi-subgraphs whose every component is unicyclic; the
// callback receives the subgraph and the cycle length of each component
// (2 for a doubled edge).
template <typename Fn>
void for_each_all_unicyclic_spanning(const Graph& g, Fn&& fn, int cap = kDefaultMultiEnumCap) {
  for_each_multisubgraph(
      g, 2,
      [&](const std::vector<std::uint8_t>& mult) {
        MultiSubgraph f(g, mult);
        ComponentInfo info = components(f, ComponentMode::kSpanning);
        for (int c = 0; c < info.count; ++c)
          if (info.chi[c] != 0) return;
        // each component's 2-core is its unique cycle
        MultiSubgraph core = two_core(f);
        std::vector<int> comp_of(g.n() + 1, -1);
        for (int c = 0; c < info.count; ++c)
          for (int v : info.vertices[c]) comp_of[v] = c;
        std::vector<int> cycle_len(info.count, 0);
        for (std::size_t e = 0; e < core.mult.size(); ++e)
          if (core.mult[e] > 0) cycle_len[comp_of[g.edge(static_cast<int>(e)).u]] += core.mult[e];
        fn(f, static_cast<const std::vector<int>&>(cycle_len));
      },
      cap);
}

// Statistical sum of spanning connected subgraphs whose unique cycle has
// length s, as an f-determinant: f(type) = sign * k_s, halved for s >= 3
// because each such cycle carries two cyclic orientations.
inline RingElem one_cycle_sum(const Graph& g, int s, int cap = kDefaultFDetCap) {
  Matrix l = laplacian(g);
  RingElem acc = f_det(
      l,
      [&](const CycleType& t) {
        int ks = t.count(s);
        if (ks == 0) return RingElem(0);
        return RingElem(detail::chi_zero_sign(t) * ks);
      },
      cap);
  if (s >= 3) return div_exact(acc, BigInt(2));
  return acc;
}

inline RingElem one_cycle_sum_oracle(const Graph& g, int s, int cap = kDefaultMultiEnumCap) {
  RingElem acc(0);
  for_each_all_unicyclic_spanning(
      g,
      [&](const MultiSubgraph& f, const std::vector<int>& cycle_len) {
        if (cycle_len.size() == 1 && cycle_len[0] == s) acc += f.weight();
      },
      cap);
  return acc;
}

// Statistical sum of connected spanning subgraphs with chi = 0 (exactly one
// cycle of any length): (1/2) f-det with f = sign * (2 k_2 + k_3 + ... + k_n).
inline RingElem chi_zero_connected_sum(const Graph& g, int cap = kDefaultFDetCap) {
  Matrix l = laplacian(g);
  RingElem acc = f_det(
      l,
      [&](const CycleType& t) {
        int weight = 2 * t.count(2);
        for (int s = 3; s <= t.n(); ++s) weight += t.count(s);
        if (weight == 0) return RingElem(0);
        return RingElem(detail::chi_zero_sign(t) * weight);
      },
      cap);
  return div_exact(acc, BigInt(2));
}

inline RingElem chi_zero_connected_sum_oracle(const Graph& g, int cap = kDefaultMultiEnumCap) {
  RingElem acc(0);
  for_each_all_unicyclic_spanning(
      g,
      [&](const MultiSubgraph& f, const std::vector<int>& cycle_len) {
        if (cycle_len.size() == 1) acc += f.weight();
      },
      cap);
  return acc;
}

namespace detail {

inline Graph delete_pairs(const Graph& g, const PairSet& j) {
  std::set<std::pair<int, int>> dropped;
  for (const auto& [a, b] : j.pairs()) dropped.insert(a < b ? std::pair(a, b) : std::pair(b, a));
  Graph out(g.n());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (dropped.count({ed.u, ed.v})) continue;
    out.add_edge(ed.u, ed.v);
    out.set_weight(out.edge_index(ed.u, ed.v), g.weight(e));
  }
  return out;
}

// Normalized minor term (-1)^{Sigma J + m} eps(tau_J) w_{i_1 j_1} ... det((L_{G-J})(J)).
inline RingElem given_cycle_lhs(const Graph& g, const PairSet& j) {
  RingElem wprod(1);
  for (const auto& [a, b] : j.pairs()) wprod *= g.pair_weight(a, b);
  if (wprod.is_zero()) return RingElem(0);
  Graph gj = delete_pairs(g, j);
  RingElem d = det(minor_matrix(laplacian(gj), j));
  RingElem term = wprod * d;
  int sign = ((j.sigma() + j.size()) % 2 == 0 ? 1 : -1) * j.tau_sign();
  return sign > 0 ? term : -term;
}

}  // namespace detail

// Fixed-cycle identity. lhs is the normalized minor term above; rhs is built
// constructively: H = F + J over J-admissible spanning forests F of G - J,
// weighted by (-1)^{k(H)} with multiplicities of re-added edges counted.
inline CheckPair given_cycle_check(const Graph& g, const PairSet& j,
                                   int cap = kDefaultSimpleEnumCap) {
  RingElem lhs = detail::given_cycle_lhs(g, j);
  RingElem wprod(1);
  for (const auto& [a, b] : j.pairs()) wprod *= g.pair_weight(a, b);
  RingElem rhs(0);
  if (!wprod.is_zero()) {
    Graph gj = detail::delete_pairs(g, j);
    for_each_j_admissible_forest(
        gj, j,
        [&](const MultiSubgraph& f, const std::vector<int>& gamma) {
          // k(H) = number of cycles of gamma
          int k = 0;
          std::vector<bool> seen(gamma.size(), false);
          for (std::size_t p = 0; p < gamma.size(); ++p) {
            if (seen[p]) continue;
            ++k;
            for (std::size_t q = p; !seen[q]; q = gamma[q]) seen[q] = true;
          }
          RingElem w = f.weight() * wprod;
          rhs += k % 2 == 0 ? w : -w;
        },
        cap);
  }
  return {lhs, rhs};
}

// All component-disjoint J of size m whose pairs are (ordered) edges of G.
// Both orientations of an edge occur as distinct pairs; an antiparallel pair
// {(i,j),(j,i)} is a valid J of size 2.
template <typename Fn>
void for_each_edge_pair_set(const Graph& g, int m, Fn&& fn) {
  std::vector<std::pair<int, int>> arcs;
  for (const Edge& e : g.edges()) {
    arcs.emplace_back(e.u, e.v);
    arcs.emplace_back(e.v, e.u);
  }
  std::vector<std::pair<int, int>> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == m) {
      fn(PairSet(chosen));
      return;
    }
    for (std::size_t i = from; i < arcs.size(); ++i) {
      bool clash = false;
      for (const auto& [a, b] : chosen)
        if (a == arcs[i].first || b == arcs[i].second) clash = true;
      if (clash) continue;
      chosen.push_back(arcs[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

// Q_m: the normalized sum of weighted minors over all component-disjoint
// J of cardinality m with edges in G,
//   Q_m = sum_J (-1)^{Sigma J + m} eps(tau_J) w_{i_1 j_1}...w_{i_m j_m} det((L_{G-J})(J)).
// The per-J normalization makes the generating function below hold; the
// unnormalized sum satisfies no product formula (tested against the oracle).
inline RingElem q_m(const Graph& g, int m, int cap = kDefaultSimpleEnumCap) {
  if (g.edge_count() > cap)
    throw TooLargeError("minor sum over " + std::to_string(g.edge_count()) +
                        " edges exceeds cap " + std::to_string(cap));
  RingElem acc(0);
  for_each_edge_pair_set(g, m, [&](const PairSet& j) { acc += detail::given_cycle_lhs(g, j); });
  return acc;
}

// Generating function lhs: sum_m Q_m t^m (m >= 1; J larger than n is empty).
inline UniPoly genfun_lhs(const Graph& g, int cap = kDefaultSimpleEnumCap) {
  UniPoly acc;
  for (int m = 1; m <= g.n(); ++m) {
    RingElem qm = q_m(g, m, cap);
    if (!qm.is_zero()) acc.add_term(m, qm);
  }
  return acc;
}

// Generating function rhs: sum over spanning subgraphs H with every
// component unicyclic of (-1)^{k(H)} w(H) prod_i g_{l_i}(t), where the
// per-cycle factor is g_2 = t^2 for a doubled edge (its two oriented copies
// must both be selected) and g_l = 2((1+t)^l - 1) for l >= 3 (a nonempty
// edge subset of the cycle, consistently oriented two ways).
inline UniPoly genfun_rhs(const Graph& g, int cap = kDefaultMultiEnumCap) {
  UniPoly acc;
  for_each_all_unicyclic_spanning(
      g,
      [&](const MultiSubgraph& f, const std::vector<int>& cycle_len) {
        UniPoly factor(RingElem(1));
        for (int l : cycle_len) {
          if (l == 2) {
            factor = factor * UniPoly::monomial(RingElem(1), 2);
          } else {
            UniPoly gl = UniPoly::one_plus_t_pow(l) + UniPoly(RingElem(-1));
            factor = factor * (gl * RingElem(2));
          }
        }
        RingElem w = f.weight();
        if (cycle_len.size() % 2 != 0) w = -w;
        acc = acc + factor * w;
      },
      cap);
  return acc;
}

inline UniPolyCheck genfun_check(const Graph& g, int simple_cap = kDefaultSimpleEnumCap,
                                 int multi_cap = kDefaultMultiEnumCap) {
  return {genfun_lhs(g, simple_cap), genfun_rhs(g, multi_cap)};
}

// Alternating-sum specialization: t = -1 collapses each long-cycle factor to
// -2 and each doubled-edge factor to +1.
inline CheckPair alt_sum_check(const Graph& g, int simple_cap = kDefaultSimpleEnumCap,
                               int multi_cap = kDefaultMultiEnumCap) {
  UniPolyCheck c = genfun_check(g, simple_cap, multi_cap);
  return {c.lhs.eval(RingElem(-1)), c.rhs.eval(RingElem(-1))};
}

}  // namespace statsum
