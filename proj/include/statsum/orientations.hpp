#pragma once

// Orientations without sources and sinks: d(G) by brute force, by the
// bipartite-subset inclusion-exclusion formula, by the chromatic-polynomial
// form, and by the vertex-set/subgraph double sum; plus the chromatic
// polynomial itself via deletion-contraction.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "statsum/enumerate.hpp"
#include "statsum/graph.hpp"
#include "statsum/unipoly.hpp"

namespace statsum {

struct IsolatedVertexError : std::runtime_error {
  IsolatedVertexError() : std::runtime_error("graph has an isolated vertex") {}
};

namespace detail {

inline void require_no_isolated_vertex(const Graph& g) {
  std::vector<bool> covered(g.n() + 1, false);
  for (const Edge& e : g.edges()) covered[e.u] = covered[e.v] = true;
  for (int v = 1; v <= g.n(); ++v)
    if (!covered[v]) throw IsolatedVertexError();
}

}  // namespace detail

inline bool has_source_or_sink(const Digraph& d) {
  std::vector<int> in(d.n + 1, 0), out(d.n + 1, 0);
  std::vector<bool> touched(d.n + 1, false);
  for (const auto& [i, j] : d.arcs) {
    out[i]++;
    in[j]++;
    touched[i] = touched[j] = true;
  }
  for (int v = 1; v <= d.n; ++v)
    if (touched[v] && (in[v] == 0 || out[v] == 0)) return true;
  return false;
}

// Number of orientations of G with no source and no sink, by filtering all
// 2^e orientations.
inline std::int64_t d_oracle(const Graph& g, int cap = kDefaultSimpleEnumCap) {
  detail::require_no_isolated_vertex(g);
  std::int64_t count = 0;
  std::vector<int> in(g.n() + 1), out(g.n() + 1);
  for_each_orientation(
      g,
      [&](const std::vector<std::uint8_t>& dir) {
        std::fill(in.begin(), in.end(), 0);
        std::fill(out.begin(), out.end(), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
          const Edge& ed = g.edge(e);
          if (dir[e] == 0) {
            out[ed.u]++;
            in[ed.v]++;
          } else {
            out[ed.v]++;
            in[ed.u]++;
          }
        }
        for (int v = 1; v <= g.n(); ++v)
          if (in[v] == 0 || out[v] == 0) return;
        ++count;
      },
      cap);
  return count;
}

namespace detail {

struct InducedStats {
  bool bipartite = false;
  int components = 0;   // components of <P>, isolated vertices included
  int outside_edges = 0;  // mu(P): edges with both endpoints outside P
  int inside_edge_count = 0;
  std::vector<int> inside_edges;  // edge indices with both endpoints in P
};

inline InducedStats induced_stats(const Graph& g, std::uint32_t mask) {
  InducedStats st;
  UnionFind uf(g.n());
  std::vector<int> color(g.n() + 1, -1);
  st.bipartite = true;
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    bool iu = mask & (1u << (ed.u - 1));
    bool iv = mask & (1u << (ed.v - 1));
    if (iu && iv) {
      uf.unite(ed.u, ed.v);
      st.inside_edges.push_back(e);
      ++st.inside_edge_count;
    } else if (!iu && !iv) {
      ++st.outside_edges;
    }
  }
  // component count over P
  std::vector<int> seen;
  for (int v = 1; v <= g.n(); ++v) {
    if (!(mask & (1u << (v - 1)))) continue;
    int r = uf.find(v);
    bool found = false;
    for (int s : seen)
      if (s == r) {
        found = true;
        break;
      }
    if (!found) {
      seen.push_back(r);
      ++st.components;
    }
  }
  // two-color <P> over the inside edges
  std::vector<std::vector<int>> adj(g.n() + 1);
  for (int e : st.inside_edges) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
  }
  for (int s = 1; s <= g.n() && st.bipartite; ++s) {
    if (!(mask & (1u << (s - 1))) || color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty() && st.bipartite) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          st.bipartite = false;
        }
      }
    }
  }
  return st;
}

}  // namespace detail

// d(G) = sum over vertex sets P with bipartite <P> of (-1)^{|P|} 2^{mu(P)+k(P)}.
inline std::int64_t d_bipartite_formula(const Graph& g) {
  detail::require_no_isolated_vertex(g);
  std::int64_t total = 0;
  for_each_vertex_subset(g.n(), [&](std::uint32_t mask) {
    detail::InducedStats st = detail::induced_stats(g, mask);
    if (!st.bipartite) return;
    std::int64_t term = std::int64_t{1} << (st.outside_edges + st.components);
    total += __builtin_popcount(mask) % 2 == 0 ? term : -term;
  });
  return total;
}

namespace detail {

// Canonical key for a multigraph with collapsed parallel edges: vertex count
// followed by the sorted edge pairs.
inline std::vector<int> chromatic_key(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> key{n};
  for (const auto& [a, b] : edges) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

inline UniPoly chromatic_rec(int n, std::vector<std::pair<int, int>> edges,
                             std::map<std::vector<int>, UniPoly>& memo) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) return UniPoly::monomial(RingElem(1), n);
  std::vector<int> key = chromatic_key(n, edges);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  auto [a, b] = edges.back();
  std::vector<std::pair<int, int>> deleted(edges.begin(), edges.end() - 1);
  // contract b into a; move vertex n into the hole at b to keep labels 1..n-1
  std::vector<std::pair<int, int>> contracted;
  for (const auto& [x, y] : deleted) {
    int u = x == b ? a : x;
    int v = y == b ? a : y;
    if (u > v) std::swap(u, v);
    contracted.emplace_back(u, v);
  }
  for (auto& [x, y] : contracted) {
    if (x == n) x = b;
    if (y == n) y = b;
    if (x > y) std::swap(x, y);
  }
  UniPoly result = chromatic_rec(n, std::move(deleted), memo);
  UniPoly minus = chromatic_rec(n - 1, std::move(contracted), memo);
  result = result + minus * RingElem(-1);
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace detail

// Chromatic polynomial in lambda by deletion-contraction; parallel edges are
// collapsed on contraction. chr of the empty graph is 1.
inline UniPoly chromatic_polynomial(const Graph& g, int cap = 16) {
  if (g.n() > cap) throw TooLargeError("chromatic polynomial for n > cap");
  static std::map<std::vector<int>, UniPoly> memo;
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  return detail::chromatic_rec(g.n(), std::move(edges), memo);
}

inline RingElem chromatic_at(const Graph& g, const RingElem& lambda) {
  return chromatic_polynomial(g).eval(lambda);
}

namespace detail {

// Number of proper 2-colorings of <P>, via 2^{k} for bipartite and 0 otherwise
// (kept independent of the deletion-contraction path on purpose: the formula
// below exercises chromatic_polynomial itself).
inline RingElem chr2_of_induced(const Graph& g, std::uint32_t mask) {
  std::vector<int> verts;
  for (int v = 1; v <= g.n(); ++v)
    if (mask & (1u << (v - 1))) verts.push_back(v);
  Graph sub(static_cast<int>(verts.size()));
  std::vector<int> re(g.n() + 1, 0);
  for (std::size_t i = 0; i < verts.size(); ++i) re[verts[i]] = static_cast<int>(i) + 1;
  for (const Edge& e : g.edges())
    if (re[e.u] && re[e.v]) sub.add_edge(re[e.u], re[e.v]);
  return chromatic_at(sub, RingElem(2));
}

}  // namespace detail

// d(G) with chr_{<P>}(2) replacing the bipartite indicator.
inline std::int64_t d_chromatic_formula(const Graph& g) {
  detail::require_no_isolated_vertex(g);
  BigInt total = 0;
  for_each_vertex_subset(g.n(), [&](std::uint32_t mask) {
    detail::InducedStats st = detail::induced_stats(g, mask);
    RingElem chr2 = detail::chr2_of_induced(g, mask);
    BigInt term = chr2.as_integer() << st.outside_edges;
    total += __builtin_popcount(mask) % 2 == 0 ? term : -term;
  });
  return static_cast<std::int64_t>(total.get_si());
}

// d(G) as the double sum over pairs (P, F) with F an edge subset of <P>
// viewed as a spanning subgraph of <P>: sum of 2^{mu(P)+k_P(F)} (-1)^{chi},
// chi = |P| - e(F). Isolated vertices of P count as components of F.
inline std::int64_t d_subgraph_formula(const Graph& g, int cap = kDefaultSimpleEnumCap) {
  detail::require_no_isolated_vertex(g);
  std::int64_t total = 0;
  for_each_vertex_subset(g.n(), [&](std::uint32_t mask) {
    detail::InducedStats st = detail::induced_stats(g, mask);
    int p = __builtin_popcount(mask);
    int m = st.inside_edge_count;
    if (m > cap) throw TooLargeError("subgraph formula inner enumeration exceeds cap");
    for (std::uint32_t fmask = 0; fmask < (1u << m); ++fmask) {
      detail::UnionFind uf(g.n());
      int ecount = 0;
      for (int b = 0; b < m; ++b) {
        if (!(fmask & (1u << b))) continue;
        const Edge& e = g.edge(st.inside_edges[b]);
        uf.unite(e.u, e.v);
        ++ecount;
      }
      int comps = 0;
      std::vector<int> seen;
      for (int v = 1; v <= g.n(); ++v) {
        if (!(mask & (1u << (v - 1)))) continue;
        int r = uf.find(v);
        bool found = false;
        for (int s : seen)
          if (s == r) {
            found = true;
            break;
          }
        if (!found) {
          seen.push_back(r);
          ++comps;
        }
      }
      std::int64_t term = std::int64_t{1} << (st.outside_edges + comps);
      total += (p + ecount) % 2 == 0 ? term : -term;  // (-1)^{chi} = (-1)^{|P| - e(F)}
    }
  });
  return total;
}

}  // namespace statsum
