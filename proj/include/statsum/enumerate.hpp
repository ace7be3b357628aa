#pragma once

// Exhaustive enumeration substrate for the brute-force oracles: multiplicity
// vectors, orientations, vertex subsets and set partitions. Streams are
// callback-driven and deterministic; caps guard the exponential blowups.

#include <cstdint>
#include <functional>
#include <vector>

#include "statsum/graph.hpp"

namespace statsum {

inline constexpr int kDefaultSimpleEnumCap = 20;  // 2^e items
inline constexpr int kDefaultMultiEnumCap = 13;   // 3^e items
inline constexpr int kDefaultPartitionCap = 10;   // Bell(n) items

// All multiplicity assignments edges -> {0..max_mult}, (max_mult+1)^e items.
// The callback receives the multiplicity vector indexed by edge.
template <typename Fn>
void for_each_multisubgraph(const Graph& g, int max_mult, Fn&& fn,
                            int cap = -1) {
  if (cap < 0) cap = max_mult >= 2 ? kDefaultMultiEnumCap : kDefaultSimpleEnumCap;
  if (g.edge_count() > cap)
    throw TooLargeError("multisubgraph enumeration over " + std::to_string(g.edge_count()) +
                        " edges exceeds cap " + std::to_string(cap));
  std::vector<std::uint8_t> mult(g.edge_count(), 0);
  while (true) {
    fn(static_cast<const std::vector<std::uint8_t>&>(mult));
    int i = 0;
    while (i < g.edge_count() && mult[i] == max_mult) mult[i++] = 0;
    if (i == g.edge_count()) break;
    ++mult[i];
  }
}

// All 2^e orientations; dir[e] == 0 orients edge e as u->v, 1 as v->u.
template <typename Fn>
void for_each_orientation(const Graph& g, Fn&& fn, int cap = kDefaultSimpleEnumCap) {
  if (g.edge_count() > cap)
    throw TooLargeError("orientation enumeration over " + std::to_string(g.edge_count()) +
                        " edges exceeds cap " + std::to_string(cap));
  std::vector<std::uint8_t> dir(g.edge_count(), 0);
  while (true) {
    fn(static_cast<const std::vector<std::uint8_t>&>(dir));
    int i = 0;
    while (i < g.edge_count() && dir[i] == 1) dir[i++] = 0;
    if (i == g.edge_count()) break;
    dir[i] = 1;
  }
}

inline Digraph orient(const Graph& g, const std::vector<std::uint8_t>& dir) {
  Digraph d;
  d.n = g.n();
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (dir[i] == 0)
      d.add_arc(e.u, e.v);
    else
      d.add_arc(e.v, e.u);
  }
  return d;
}

// All subsets of {1..n} as bitmasks (bit v-1 for vertex v).
template <typename Fn>
void for_each_vertex_subset(int n, Fn&& fn) {
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) fn(mask);
}

// All set partitions of {1..n} in restricted-growth-string form:
// block_of[i] is the block index (0-based) of vertex i+1, and block indices
// appear in first-use order, so each partition is produced exactly once in
// canonical form.
template <typename Fn>
void for_each_set_partition(int n, Fn&& fn, int cap = kDefaultPartitionCap) {
  if (n > cap)
    throw TooLargeError("set partition enumeration for n = " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
  std::vector<int> rgs(n, 0);
  std::vector<int> max_prefix(n, 0);  // max of rgs[0..i-1]
  auto emit = [&] {
    int blocks = 0;
    for (int x : rgs) blocks = std::max(blocks, x + 1);
    fn(static_cast<const std::vector<int>&>(rgs), blocks);
  };
  if (n == 0) return;
  while (true) {
    for (int i = 1; i < n; ++i) max_prefix[i] = std::max(max_prefix[i - 1], rgs[i - 1]);
    emit();
    int i = n - 1;
    while (i > 0 && rgs[i] == max_prefix[i] + 1) --i;
    if (i == 0) break;
    ++rgs[i];
    for (int j = i + 1; j < n; ++j) rgs[j] = 0;
  }
}

inline BigInt bell_number(int n) {
  std::vector<BigInt> row{BigInt(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<BigInt> next(i + 1);
    next[0] = row.back();
    for (int j = 1; j <= i; ++j) next[j] = next[j - 1] + row[j - 1];
    row = std::move(next);
  }
  return row[0];
}

}  // namespace statsum
