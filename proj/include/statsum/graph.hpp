#pragma once

// Graph data model and structural algorithms. Vertices are 1..n throughout;
// a subgraph is an edge (multi)set. Component counting comes in two modes:
// spanning (isolated vertices count as their own components) and support
// (only vertices incident to an edge). Every operation states which it uses.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "statsum/ring.hpp"

namespace statsum {

struct TooLargeError : std::runtime_error {
  explicit TooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct Edge {
  int u = 0, v = 0;  // u < v

  bool operator==(const Edge&) const = default;
  bool operator<(const Edge& o) const { return std::pair(u, v) < std::pair(o.u, o.v); }
};

inline Edge make_edge(int a, int b) {
  if (a == b) throw std::invalid_argument("loop edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Canonical symmetric weight name, smaller endpoint first.
inline std::string weight_name(char prefix, int i, int j) {
  if (i > j) std::swap(i, j);
  return std::string(1, prefix) + "_" + std::to_string(i) + "_" + std::to_string(j);
}

// Loop-free undirected graph without multiple edges, one weight per edge.
// Absent pairs have implicit weight 0.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n) {}

  // Edges get the symbolic weight w_i_j by default.
  Graph(int n, std::vector<Edge> edges) : n_(n) {
    std::sort(edges.begin(), edges.end());
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  static Graph complete(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
  }

  static Graph cycle(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    if (n >= 3) g.add_edge(1, n);
    return g;
  }

  static Graph path(int n) {
    Graph g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
  }

  void add_edge(int a, int b) {
    Edge e = make_edge(a, b);
    if (e.u < 1 || e.v > n_) throw std::invalid_argument("edge endpoint out of range");
    if (edge_index(e.u, e.v) >= 0) throw std::invalid_argument("duplicate edge");
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
    std::size_t idx = pos - edges_.begin();
    edges_.insert(pos, e);
    weights_.insert(weights_.begin() + idx, RingElem::variable(weight_name('w', e.u, e.v)));
  }

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int idx) const { return edges_[idx]; }

  int edge_index(int a, int b) const {
    if (a == b) return -1;
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  bool has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

  const RingElem& weight(int idx) const { return weights_[idx]; }
  void set_weight(int idx, RingElem w) { weights_[idx] = std::move(w); }
  void set_all_weights(const RingElem& w) {
    for (auto& x : weights_) x = w;
  }

  // Weight of the pair {a,b}: the edge weight, or 0 when absent.
  RingElem pair_weight(int a, int b) const {
    int idx = edge_index(a, b);
    return idx >= 0 ? weights_[idx] : RingElem(0);
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<RingElem> weights_;
};

// Sub-multigraph of a parent graph: per-edge multiplicity in {0,1,2},
// indexed by the parent's edge order. Weight takes multiplicities into
// account: w(F) = prod w_e^{m_e}.
struct MultiSubgraph {
  const Graph* parent = nullptr;
  std::vector<std::uint8_t> mult;

  MultiSubgraph() = default;
  explicit MultiSubgraph(const Graph& g) : parent(&g), mult(g.edge_count(), 0) {}
  MultiSubgraph(const Graph& g, std::vector<std::uint8_t> m) : parent(&g), mult(std::move(m)) {}

  int edge_count() const {  // counts multiplicity
    int e = 0;
    for (auto m : mult) e += m;
    return e;
  }

  bool empty() const {
    return std::all_of(mult.begin(), mult.end(), [](std::uint8_t m) { return m == 0; });
  }

  RingElem weight() const {
    RingElem w(1);
    for (std::size_t i = 0; i < mult.size(); ++i)
      for (int k = 0; k < mult[i]; ++k) w *= parent->weight(static_cast<int>(i));
    return w;
  }

  bool operator==(const MultiSubgraph& o) const { return parent == o.parent && mult == o.mult; }
};

// Directed graph on 1..n as a set of ordered pairs; loops allowed.
struct Digraph {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  void add_arc(int i, int j) { arcs.emplace_back(i, j); }
};

// Undirected graph whose edges are marked + or -; a pair may carry both
// marks, but at most one edge of each mark.
struct SignedGraph {
  int n = 0;
  std::vector<Edge> plus_edges;
  std::vector<Edge> minus_edges;
};

enum class ComponentMode { kSpanning, kSupport };

struct ComponentInfo {
  std::vector<std::vector<int>> vertices;  // sorted vertex lists per component
  std::vector<int> v;                      // vertex counts
  std::vector<int> e;                      // edge counts (multiplicity included)
  std::vector<int> chi;                    // Euler characteristic v - e
  int count = 0;

  bool all_chi_at_most(int bound) const {
    return std::all_of(chi.begin(), chi.end(), [bound](int c) { return c <= bound; });
  }
};

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n + 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace detail

// Connected components of a multi-subgraph with per-component v, e, chi.
inline ComponentInfo components(const MultiSubgraph& f, ComponentMode mode) {
  const Graph& g = *f.parent;
  detail::UnionFind uf(g.n());
  std::vector<int> deg(g.n() + 1, 0);
  for (std::size_t i = 0; i < f.mult.size(); ++i) {
    if (f.mult[i] == 0) continue;
    const Edge& e = g.edge(static_cast<int>(i));
    uf.unite(e.u, e.v);
    deg[e.u] += f.mult[i];
    deg[e.v] += f.mult[i];
  }
  std::vector<int> root_to_comp(g.n() + 1, -1);
  ComponentInfo info;
  for (int v = 1; v <= g.n(); ++v) {
    if (mode == ComponentMode::kSupport && deg[v] == 0) continue;
    int r = uf.find(v);
    if (root_to_comp[r] < 0) {
      root_to_comp[r] = info.count++;
      info.vertices.emplace_back();
      info.v.push_back(0);
      info.e.push_back(0);
    }
    info.vertices[root_to_comp[r]].push_back(v);
    info.v[root_to_comp[r]]++;
  }
  for (std::size_t i = 0; i < f.mult.size(); ++i) {
    if (f.mult[i] == 0) continue;
    int r = uf.find(g.edge(static_cast<int>(i)).u);
    info.e[root_to_comp[r]] += f.mult[i];
  }
  for (int c = 0; c < info.count; ++c) info.chi.push_back(info.v[c] - info.e[c]);
  return info;
}

inline ComponentInfo components(const Graph& g, ComponentMode mode) {
  MultiSubgraph all(g);
  std::fill(all.mult.begin(), all.mult.end(), std::uint8_t{1});
  return components(all, mode);
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  return components(g, ComponentMode::kSpanning).count == 1;
}

// Maximal sub-multigraph in which every vertex has degree >= 2 (a doubled
// edge contributes 2 to each endpoint), by iteratively deleting vertices of
// degree <= 1. The result does not depend on the deletion order.
inline MultiSubgraph two_core(const MultiSubgraph& f) {
  const Graph& g = *f.parent;
  MultiSubgraph core = f;
  std::vector<int> deg(g.n() + 1, 0);
  for (std::size_t i = 0; i < core.mult.size(); ++i) {
    const Edge& e = g.edge(static_cast<int>(i));
    deg[e.u] += core.mult[i];
    deg[e.v] += core.mult[i];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 1; v <= g.n(); ++v) {
      if (deg[v] != 1) continue;  // degree-1 vertex: strip its edge
      for (std::size_t i = 0; i < core.mult.size(); ++i) {
        if (core.mult[i] == 0) continue;
        const Edge& e = g.edge(static_cast<int>(i));
        if (e.u == v || e.v == v) {
          deg[e.u] -= core.mult[i];
          deg[e.v] -= core.mult[i];
          core.mult[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  return core;
}

inline MultiSubgraph two_core(const Graph& g) {
  MultiSubgraph all(g);
  std::fill(all.mult.begin(), all.mult.end(), std::uint8_t{1});
  return two_core(all);
}

// Proper 2-coloring if one exists (colors 0/1, indexed by vertex; vertices
// without edges get color 0).
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n() + 1);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> color(g.n() + 1, -1);
  for (int s = 1; s <= g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  color.erase(color.begin());
  return color;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

}  // namespace statsum
