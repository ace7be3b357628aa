#pragma once

// Statistical sums of subgraphs with a fixed 2-core: rho_G(H) via
// regular-digraph enumeration, the 2-core identity relating it to Z(U(H)),
// and the inversion recovering Z(U(H)) from rho values.
//
// U(H) here is the family of multi-subgraphs F (multiplicities <= 2) with
// two_core(F) = H as a labeled multigraph, in which every vertex of 1..n is
// covered by an edge and every connected component contains a cycle. That is
// the family the regular-digraph expansion actually produces: hanging trees
// must be rooted on the core, so cycle-free components and uncovered
// vertices never arise.

#include <algorithm>
#include <cstdint>
#include <map>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "statsum/checks.hpp"
#include "statsum/enumerate.hpp"
#include "statsum/graph.hpp"
#include "statsum/matrix.hpp"
#include "statsum/orientations.hpp"

namespace statsum {

struct BadShapeError : std::runtime_error {
  explicit BadShapeError(const std::string& what) : std::runtime_error(what) {}
};

// <M,Q>: product of matrix entries over the arcs of Q, loops included.
inline RingElem bracket(const Matrix& m, const Digraph& q) {
  RingElem prod(1);
  for (const auto& [i, j] : q.arcs) prod *= m.at(i, j);
  return prod;
}

// Regular digraph: no sources or sinks, and every loop or antiparallel pair
// forms its own connected component.
inline bool is_regular_digraph(const Digraph& q) {
  if (has_source_or_sink(q)) return false;
  detail::UnionFind uf(q.n);
  for (const auto& [i, j] : q.arcs)
    if (i != j) uf.unite(i, j);
  std::map<int, std::vector<std::pair<int, int>>> comp_arcs;
  for (const auto& [i, j] : q.arcs) comp_arcs[uf.find(i)].push_back({i, j});
  for (const auto& [root, arcs] : comp_arcs) {
    bool has_loop = false, has_antiparallel = false;
    for (const auto& [i, j] : arcs) {
      if (i == j) has_loop = true;
      if (i != j)
        for (const auto& [x, y] : arcs)
          if (x == j && y == i) has_antiparallel = true;
    }
    if (has_loop && arcs.size() != 1) return false;
    if (has_antiparallel && arcs.size() != 2) return false;
  }
  return true;
}

// A concrete labeled core shape H = H0 (negative part) together with
// disjoint cycle components: doubled edges (2-cycles) and simple cycles of
// length >= 3. Validated on construction.
class CoreShape {
 public:
  struct Cycle {
    int length = 0;              // 2 for a doubled edge
    std::vector<int> vertices;   // sorted
    std::vector<int> edge_idxs;  // parent edge indices on the cycle
  };

  static CoreShape from_multisubgraph(const MultiSubgraph& h) {
    CoreShape shape;
    shape.embedding_ = h;
    const Graph& g = *h.parent;
    shape.h0_ = MultiSubgraph(g);

    ComponentInfo info = components(h, ComponentMode::kSupport);
    std::vector<int> comp_of(g.n() + 1, -1);
    for (int c = 0; c < info.count; ++c)
      for (int v : info.vertices[c]) comp_of[v] = c;
    std::vector<std::vector<int>> comp_edges(info.count);
    for (std::size_t i = 0; i < h.mult.size(); ++i)
      if (h.mult[i] > 0) comp_edges[comp_of[g.edge(static_cast<int>(i)).u]].push_back(static_cast<int>(i));

    for (int c = 0; c < info.count; ++c) {
      bool has_double = false;
      for (int e : comp_edges[c])
        if (h.mult[e] == 2) has_double = true;
      if (info.chi[c] == 0) {
        // must be a bare cycle: all degrees exactly 2
        if (has_double) {
          if (info.v[c] != 2 || comp_edges[c].size() != 1)
            throw BadShapeError("doubled edge must form its own two-vertex component");
          shape.cycles_.push_back(Cycle{2, info.vertices[c], comp_edges[c]});
        } else {
          std::vector<int> deg(g.n() + 1, 0);
          for (int e : comp_edges[c]) {
            deg[g.edge(e).u]++;
            deg[g.edge(e).v]++;
          }
          for (int v : info.vertices[c])
            if (deg[v] != 2) throw BadShapeError("chi = 0 component is not a single cycle");
          shape.cycles_.push_back(
              Cycle{static_cast<int>(comp_edges[c].size()), info.vertices[c], comp_edges[c]});
        }
      } else if (info.chi[c] < 0) {
        if (has_double) throw BadShapeError("negative part must be a simple graph");
        for (int e : comp_edges[c]) shape.h0_.mult[e] = 1;
      } else {
        throw BadShapeError("component with positive Euler characteristic");
      }
    }
    // the negative part must equal its own 2-core (no hanging vertices)
    if (!(two_core(shape.h0_) == shape.h0_))
      throw BadShapeError("negative part is not equal to its own 2-core");
    std::sort(shape.cycles_.begin(), shape.cycles_.end(),
              [](const Cycle& a, const Cycle& b) { return a.vertices < b.vertices; });
    return shape;
  }

  const MultiSubgraph& embedding() const { return embedding_; }
  const MultiSubgraph& h0() const { return h0_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  const Graph& parent() const { return *embedding_.parent; }

  bool h0_empty() const { return h0_.empty(); }

  int edge_count() const { return embedding_.edge_count(); }  // with multiplicity

  int long_cycle_count() const {  // cycles of length >= 3
    int c = 0;
    for (const Cycle& cy : cycles_)
      if (cy.length >= 3) ++c;
    return c;
  }

  int cycle_count(int s) const {  // k_s
    int c = 0;
    for (const Cycle& cy : cycles_)
      if (cy.length == s) ++c;
    return c;
  }

  std::uint32_t support_mask() const {
    std::uint32_t mask = 0;
    const Graph& g = parent();
    for (std::size_t i = 0; i < embedding_.mult.size(); ++i)
      if (embedding_.mult[i] > 0)
        mask |= (1u << (g.edge(static_cast<int>(i)).u - 1)) | (1u << (g.edge(static_cast<int>(i)).v - 1));
    return mask;
  }

 private:
  MultiSubgraph embedding_;
  MultiSubgraph h0_;
  std::vector<Cycle> cycles_;
};

namespace detail {

// The negative part as a standalone graph on relabeled vertices 1..v.
inline Graph extract_support_graph(const MultiSubgraph& part) {
  const Graph& g = *part.parent;
  std::vector<int> relabel(g.n() + 1, 0);
  int v = 0;
  for (int i = 1; i <= g.n(); ++i) {
    bool used = false;
    for (std::size_t e = 0; e < part.mult.size(); ++e)
      if (part.mult[e] > 0 && (g.edge(static_cast<int>(e)).u == i || g.edge(static_cast<int>(e)).v == i))
        used = true;
    if (used) relabel[i] = ++v;
  }
  Graph out(v);
  for (std::size_t e = 0; e < part.mult.size(); ++e)
    if (part.mult[e] > 0) out.add_edge(relabel[g.edge(static_cast<int>(e)).u], relabel[g.edge(static_cast<int>(e)).v]);
  return out;
}

// All source/sink-free orientations of the negative part, as arc lists in
// the parent labeling. The empty part yields one empty orientation.
inline std::vector<std::vector<std::pair<int, int>>> h0_regular_orientations(
    const MultiSubgraph& h0) {
  std::vector<std::vector<std::pair<int, int>>> out;
  const Graph& g = *h0.parent;
  std::vector<int> edge_idxs;
  for (std::size_t e = 0; e < h0.mult.size(); ++e)
    if (h0.mult[e] > 0) edge_idxs.push_back(static_cast<int>(e));
  int m = static_cast<int>(edge_idxs.size());
  std::vector<int> in(g.n() + 1), outd(g.n() + 1);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::fill(in.begin(), in.end(), 0);
    std::fill(outd.begin(), outd.end(), 0);
    std::vector<std::pair<int, int>> arcs;
    for (int b = 0; b < m; ++b) {
      const Edge& e = g.edge(edge_idxs[b]);
      if (mask & (1u << b)) {
        arcs.emplace_back(e.v, e.u);
        outd[e.v]++;
        in[e.u]++;
      } else {
        arcs.emplace_back(e.u, e.v);
        outd[e.u]++;
        in[e.v]++;
      }
    }
    bool ok = true;
    for (int v = 1; v <= g.n() && ok; ++v) {
      bool touched = in[v] + outd[v] > 0;
      if (touched && (in[v] == 0 || outd[v] == 0)) ok = false;
    }
    if (ok) out.push_back(std::move(arcs));
  }
  return out;
}

}  // namespace detail

// Number of source/sink-free orientations of the negative part of H.
inline std::int64_t d_of_negative_part(const CoreShape& h) {
  if (h.h0_empty()) return 1;
  return d_oracle(detail::extract_support_graph(h.h0()));
}

// rho_G(H): sum of <L_G, Lambda> over all regular digraphs Lambda whose
// underlying multigraph is H together with one loop at every vertex outside
// H. Orientation choices: source/sink-free orientations of the negative
// part, two cyclic orientations per long cycle, the antiparallel pair per
// doubled edge, loops elsewhere; diagonal entries stay symbolic.
inline RingElem rho(const Graph& g, const CoreShape& h) {
  Matrix l = laplacian(g);
  std::uint32_t support = h.support_mask();
  auto h0_orients = detail::h0_regular_orientations(h.h0());

  const auto& cycles = h.cycles();
  std::vector<int> choice(cycles.size(), 0);
  RingElem total(0);
  while (true) {
    // assemble the cycle arcs for this choice vector
    for (const auto& arcs0 : h0_orients) {
      Digraph lam;
      lam.n = g.n();
      lam.arcs = arcs0;
      for (std::size_t c = 0; c < cycles.size(); ++c) {
        const CoreShape::Cycle& cy = cycles[c];
        if (cy.length == 2) {
          const Edge& e = g.edge(cy.edge_idxs[0]);
          lam.add_arc(e.u, e.v);
          lam.add_arc(e.v, e.u);
        } else {
          // order the cycle vertices by walking its edges
          std::vector<std::pair<int, int>> walk;
          int start = cy.vertices[0];
          int prev = -1, cur = start;
          do {
            for (int eidx : cy.edge_idxs) {
              const Edge& e = g.edge(eidx);
              int other = e.u == cur ? e.v : (e.v == cur ? e.u : -1);
              if (other < 0 || other == prev) continue;
              walk.emplace_back(cur, other);
              prev = cur;
              cur = other;
              break;
            }
          } while (cur != start);
          for (const auto& [a, b] : walk) {
            if (choice[c] == 0)
              lam.add_arc(a, b);
            else
              lam.add_arc(b, a);
          }
        }
      }
      for (int v = 1; v <= g.n(); ++v)
        if (!(support & (1u << (v - 1)))) lam.add_arc(v, v);
      total += bracket(l, lam);
    }
    // advance the per-long-cycle orientation odometer
    std::size_t i = 0;
    while (i < cycles.size() && (cycles[i].length == 2 || choice[i] == 1)) choice[i++] = 0;
    if (i == cycles.size()) break;
    choice[i] = 1;
  }
  return total;
}

// Z(U(H)): statistical sum over multi-subgraphs whose 2-core is exactly the
// labeled shape H, every vertex covered, every component containing a cycle.
inline RingElem z_core_oracle(const Graph& g, const CoreShape& h, int cap = kDefaultMultiEnumCap) {
  RingElem acc(0);
  const MultiSubgraph& target = h.embedding();
  for_each_multisubgraph(
      g, 2,
      [&](const std::vector<std::uint8_t>& mult) {
        MultiSubgraph f(g, mult);
        ComponentInfo info = components(f, ComponentMode::kSpanning);
        if (!info.all_chi_at_most(0)) return;  // covers [n], all components cyclic
        if (!(two_core(f) == target)) return;
        acc += f.weight();
      },
      cap);
  return acc;
}

// Candidate cycle components of G: doubled edges and simple cycles of
// length >= 3, each as a multiplicity vector plus a support mask.
struct CycleCandidate {
  MultiSubgraph sub;
  std::uint32_t support = 0;
  int length = 0;
};

inline std::vector<CycleCandidate> cycle_candidates(const Graph& g) {
  std::vector<CycleCandidate> out;
  for (int e = 0; e < g.edge_count(); ++e) {
    MultiSubgraph m(g);
    m.mult[e] = 2;
    const Edge& ed = g.edge(e);
    out.push_back({std::move(m), (1u << (ed.u - 1)) | (1u << (ed.v - 1)), 2});
  }
  // simple cycles by DFS from their smallest vertex; the neighbor choice on
  // the first step is forced upward to emit each cycle once
  std::vector<std::vector<int>> adj(g.n() + 1);
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> path;
  std::vector<bool> on_path(g.n() + 1, false);
  std::function<void(int, int)> dfs = [&](int start, int v) {
    for (int w : adj[v]) {
      if (w == start && path.size() >= 3) {
        if (path[1] < path.back()) {  // canonical direction
          MultiSubgraph m(g);
          std::uint32_t mask = 0;
          for (std::size_t i = 0; i < path.size(); ++i) {
            int a = path[i], b = path[(i + 1) % path.size()];
            m.mult[g.edge_index(a, b)] = 1;
            mask |= 1u << (a - 1);
          }
          out.push_back({std::move(m), mask, static_cast<int>(path.size())});
        }
        continue;
      }
      if (w <= start || on_path[w]) continue;
      path.push_back(w);
      on_path[w] = true;
      dfs(start, w);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (int s = 1; s <= g.n(); ++s) {
    path.assign(1, s);
    on_path.assign(g.n() + 1, false);
    on_path[s] = true;
    dfs(s, s);
  }
  return out;
}

// All sets X of pairwise vertex-disjoint extra cycles avoiding `forbidden`.
// The callback receives the combined multiplicity vector of X, the number of
// its cycles, the number of length >= 3 cycles, and its total edge count.
template <typename Fn>
void for_each_disjoint_cycle_set(const Graph& g, std::uint32_t forbidden, Fn&& fn) {
  std::vector<CycleCandidate> cands = cycle_candidates(g);
  std::vector<std::uint8_t> combined(g.edge_count(), 0);
  std::function<void(std::size_t, std::uint32_t, int, int, int)> rec =
      [&](std::size_t from, std::uint32_t used, int count, int long_count, int edges) {
        fn(static_cast<const std::vector<std::uint8_t>&>(combined), count, long_count, edges);
        for (std::size_t i = from; i < cands.size(); ++i) {
          if (cands[i].support & (used | forbidden)) continue;
          for (std::size_t e = 0; e < combined.size(); ++e) combined[e] += cands[i].sub.mult[e];
          rec(i + 1, used | cands[i].support, count + 1, long_count + (cands[i].length >= 3 ? 1 : 0),
              edges + (cands[i].length == 2 ? 2 : cands[i].length));
          for (std::size_t e = 0; e < combined.size(); ++e) combined[e] -= cands[i].sub.mult[e];
        }
      };
  rec(0, 0, 0, 0, 0);
}

// The 2-core identity for a concrete labeled shape H:
//   rho_G(H) = (-1)^{e(H)} d(H0) 2^{c3(H)} sum_X 2^{c3(X)} Z(U(H u X)),
// X running over sets of extra disjoint cycles vertex-disjoint from H and
// c3 counting cycles of length >= 3. Both sides are returned for comparison.
inline CheckPair msub_check(const Graph& g, const CoreShape& h, int cap = kDefaultMultiEnumCap) {
  RingElem lhs = rho(g, h);
  RingElem sum(0);
  for_each_disjoint_cycle_set(g, h.support_mask(),
                              [&](const std::vector<std::uint8_t>& xmult, int, int long_count, int) {
                                MultiSubgraph combined = h.embedding();
                                for (std::size_t e = 0; e < xmult.size(); ++e) combined.mult[e] += xmult[e];
                                CoreShape hx = CoreShape::from_multisubgraph(combined);
                                RingElem z = z_core_oracle(g, hx, cap);
                                if (z.is_zero()) return;
                                BigInt factor = BigInt(1) << long_count;
                                sum += RingElem(factor) * z;
                              });
  BigInt scale = BigInt(d_of_negative_part(h)) << h.long_cycle_count();
  RingElem rhs = RingElem(scale) * sum;
  if (h.edge_count() % 2 != 0) rhs = -rhs;
  return {lhs, rhs};
}

// Inversion of the 2-core identity, recovering Z(U(H)) from rho values:
//   Z(U(H)) = (-1)^{e(H)} / (d(H0) * 2^{c3(H)}) * sum_X (-1)^{|X| + e(X)} rho_G(H u X).
// Intermediate arithmetic stays integral; the final division must be exact,
// otherwise NonIntegerResultError flags a violated identity. Shapes with
// d(H0) = 0 are rejected.
inline RingElem z_core_via_inversion(const Graph& g, const CoreShape& h) {
  std::int64_t d0 = d_of_negative_part(h);
  if (d0 == 0)
    throw BadShapeError("negative part admits no source/sink-free orientation (d = 0)");
  RingElem sum(0);
  for_each_disjoint_cycle_set(
      g, h.support_mask(),
      [&](const std::vector<std::uint8_t>& xmult, int count, int, int edges) {
        MultiSubgraph combined = h.embedding();
        for (std::size_t e = 0; e < xmult.size(); ++e) combined.mult[e] += xmult[e];
        CoreShape hx = CoreShape::from_multisubgraph(combined);
        RingElem r = rho(g, hx);
        sum += (count + edges) % 2 == 0 ? r : -r;
      });
  if (h.edge_count() % 2 != 0) sum = -sum;
  BigInt divisor = BigInt(d0) << h.long_cycle_count();
  return div_exact(sum, divisor);
}

}  // namespace statsum
