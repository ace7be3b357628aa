#pragma once

// Root subsets of A_n and D_n as (signed) graphs: linear independence and
// maximality with an exact-rank oracle, the spanning-tree sum for A_n, and
// the D_n analog of the generating-function identity.
//
// Roots e+_ij = b_i - b_j carry weight u_ij, roots e-_ij = b_i + b_j carry
// weight v_ij. A cycle of the signed graph is odd when it carries an odd
// number of minus edges.

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "statsum/checks.hpp"
#include "statsum/enumerate.hpp"
#include "statsum/graph.hpp"
#include "statsum/matrix.hpp"
#include "statsum/matrix_tree.hpp"
#include "statsum/unipoly.hpp"

namespace statsum {

struct NotIrreducibleError : std::runtime_error {
  NotIrreducibleError() : std::runtime_error("root set is not irreducible (graph disconnected)") {}
};

struct IdentityViolationError : std::runtime_error {
  explicit IdentityViolationError(const std::string& what) : std::runtime_error(what) {}
};

struct Root {
  int i = 0, j = 0;  // i < j
  bool minus = false;

  bool operator==(const Root&) const = default;
  bool operator<(const Root& o) const {
    return std::tuple(i, j, minus) < std::tuple(o.i, o.j, o.minus);
  }
};

class RootSet {
 public:
  RootSet() = default;
  RootSet(int n, std::vector<Root> roots) : n_(n), roots_(std::move(roots)) {
    std::sort(roots_.begin(), roots_.end());
    if (std::adjacent_find(roots_.begin(), roots_.end()) != roots_.end())
      throw std::invalid_argument("duplicate root");
    for (const Root& r : roots_) {
      if (r.i >= r.j || r.i < 1 || r.j > n_) throw std::invalid_argument("root index out of range");
    }
  }

  int n() const { return n_; }
  int size() const { return static_cast<int>(roots_.size()); }
  const std::vector<Root>& roots() const { return roots_; }

  bool has_minus() const {
    return std::any_of(roots_.begin(), roots_.end(), [](const Root& r) { return r.minus; });
  }

  RootSet subset(std::uint32_t mask) const {
    std::vector<Root> out;
    for (std::size_t k = 0; k < roots_.size(); ++k)
      if (mask & (1u << k)) out.push_back(roots_[k]);
    return RootSet(n_, std::move(out));
  }

  RingElem root_weight(const Root& r) const {
    return RingElem::variable(weight_name(r.minus ? 'v' : 'u', r.i, r.j));
  }

  RingElem weight() const {
    RingElem w(1);
    for (const Root& r : roots_) w *= root_weight(r);
    return w;
  }

  SignedGraph gamma() const {
    SignedGraph sg;
    sg.n = n_;
    for (const Root& r : roots_)
      (r.minus ? sg.minus_edges : sg.plus_edges).push_back(Edge{r.i, r.j});
    return sg;
  }

 private:
  int n_ = 0;
  std::vector<Root> roots_;
};

// Coordinate vectors: e+_ij has +1 at i and -1 at j, e-_ij has +1 at both.
inline std::vector<std::vector<int>> root_vectors(const RootSet& s) {
  std::vector<std::vector<int>> out;
  for (const Root& r : s.roots()) {
    std::vector<int> v(s.n(), 0);
    v[r.i - 1] = 1;
    v[r.j - 1] = r.minus ? 1 : -1;
    out.push_back(std::move(v));
  }
  return out;
}

// Rank over the rationals by exact Gaussian elimination.
inline int rank_of_vectors(const std::vector<std::vector<int>>& vecs, int n) {
  std::vector<std::vector<BigRat>> a;
  for (const auto& v : vecs) {
    std::vector<BigRat> row;
    for (int x : v) row.emplace_back(x);
    a.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(a.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(a.size()); ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < static_cast<int>(a.size()); ++r) {
      if (a[r][col] == 0) continue;
      BigRat factor = a[r][col] / a[rank][col];
      for (int c = col; c < n; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline bool is_independent_rank(const RootSet& s) {
  return rank_of_vectors(root_vectors(s), s.n()) == s.size();
}

namespace detail {

// Signed multigraph structure of a root set over a parent pair graph: the
// parent has one edge per vertex pair carrying at least one root; roots map
// to multiplicities.
struct GammaView {
  Graph pairs;                      // one parent edge per used pair
  std::vector<int> root_edge;       // root index -> parent edge index
  std::vector<bool> pair_has_minus; // parent edge index -> carries e-
};

inline GammaView gamma_view(const RootSet& s) {
  GammaView gv;
  gv.pairs = Graph(s.n());
  for (const Root& r : s.roots())
    if (!gv.pairs.has_edge(r.i, r.j)) gv.pairs.add_edge(r.i, r.j);
  gv.pair_has_minus.assign(gv.pairs.edge_count(), false);
  for (const Root& r : s.roots()) {
    int e = gv.pairs.edge_index(r.i, r.j);
    gv.root_edge.push_back(e);
    if (r.minus) gv.pair_has_minus[e] = true;
  }
  return gv;
}

inline MultiSubgraph gamma_multigraph(const GammaView& gv, const RootSet& s) {
  MultiSubgraph m(gv.pairs);
  for (std::size_t k = 0; k < s.roots().size(); ++k) m.mult[gv.root_edge[k]]++;
  return m;
}

}  // namespace detail

// Combinatorial criterion: every component of Gamma(S) is a tree, or
// unicyclic with an odd cycle (odd number of minus edges on the cycle).
inline bool is_independent_combinatorial(const RootSet& s) {
  detail::GammaView gv = detail::gamma_view(s);
  MultiSubgraph m = detail::gamma_multigraph(gv, s);
  ComponentInfo info = components(m, ComponentMode::kSupport);
  if (!std::all_of(info.chi.begin(), info.chi.end(), [](int c) { return c >= 0; })) return false;
  // chi == 0 components must have an odd cycle; the cycle is the 2-core
  MultiSubgraph core = two_core(m);
  std::vector<int> comp_of(s.n() + 1, -1);
  for (int c = 0; c < info.count; ++c)
    for (int v : info.vertices[c]) comp_of[v] = c;
  std::vector<int> minus_on_cycle(info.count, 0);
  for (std::size_t e = 0; e < core.mult.size(); ++e) {
    if (core.mult[e] == 0) continue;
    int c = comp_of[gv.pairs.edge(static_cast<int>(e)).u];
    if (gv.pair_has_minus[e]) minus_on_cycle[c]++;
  }
  for (int c = 0; c < info.count; ++c)
    if (info.chi[c] == 0 && minus_on_cycle[c] % 2 == 0) return false;
  return true;
}

// Computed both ways and asserted equal; a mismatch would falsify the
// independence criterion and is reported, not patched.
inline bool is_independent(const RootSet& s) {
  bool by_rank = is_independent_rank(s);
  bool by_graph = is_independent_combinatorial(s);
  if (by_rank != by_graph)
    throw IdentityViolationError("rank and combinatorial independence criteria disagree");
  return by_rank;
}

// All maximal independent subsets of S (no independent proper superset
// within S), by direct superset probing.
template <typename Fn>
void for_each_maximal_independent_subset(const RootSet& s, Fn&& fn, int cap = 20) {
  if (s.size() > cap) throw TooLargeError("root subset enumeration exceeds cap");
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    RootSet sub = s.subset(mask);
    if (!is_independent_rank(sub)) continue;
    bool maximal = true;
    for (int k = 0; k < s.size() && maximal; ++k) {
      if (mask & (1u << k)) continue;
      if (is_independent_rank(s.subset(mask | (1u << k)))) maximal = false;
    }
    if (maximal) fn(mask, sub);
  }
}

// Laplacian of Gamma(S) with summed pair weights u_ij [e+ in S] + v_ij [e- in S].
inline Matrix dn_laplacian(const RootSet& s) {
  Matrix m(s.n());
  for (const Root& r : s.roots()) {
    RingElem w = s.root_weight(r);
    m.at(r.i, r.j) = m.at(r.i, r.j) - w;
    m.at(r.j, r.i) = m.at(r.j, r.i) - w;
    m.at(r.i, r.i) += w;
    m.at(r.j, r.j) += w;
  }
  return m;
}

// A_n spanning-tree sum: principal minor of L_S against the statistical sum
// over maximal independent subsets. Requires an irreducible plus-only set.
inline CheckPair ntrees_check(const RootSet& s, int cap = 20) {
  if (s.has_minus()) throw std::invalid_argument("ntrees_check expects A_n roots (no minus)");
  detail::GammaView gv = detail::gamma_view(s);
  if (!is_connected(gv.pairs)) throw NotIrreducibleError();
  RingElem lhs = det(minor_matrix(dn_laplacian(s), PairSet({{1, 1}})));
  RingElem rhs(0);
  for_each_maximal_independent_subset(
      s, [&](std::uint32_t, const RootSet& sub) { rhs += sub.weight(); }, cap);
  return {lhs, rhs};
}

namespace detail {

inline RootSet remove_minus_roots(const RootSet& s, const PairSet& j) {
  std::vector<Root> keep;
  for (const Root& r : s.roots()) {
    bool drop = false;
    if (r.minus)
      for (const auto& [a, b] : j.pairs())
        if ((r.i == a && r.j == b) || (r.i == b && r.j == a)) drop = true;
    if (!drop) keep.push_back(r);
  }
  return RootSet(s.n(), std::move(keep));
}

// Product of v weights over J's pairs; zero unless every pair's edge
// carries a minus root of S.
inline RingElem minus_weight_product(const RootSet& s, const PairSet& j) {
  RingElem prod(1);
  for (const auto& [a, b] : j.pairs()) {
    bool found = false;
    for (const Root& r : s.roots())
      if (r.minus && ((r.i == a && r.j == b) || (r.i == b && r.j == a))) found = true;
    if (!found) return RingElem(0);
    prod *= RingElem::variable(weight_name('v', a, b));
  }
  return prod;
}

// Component-disjoint J's of size m over ordered versions of the minus
// pairs of S, no pair used twice (an antiparallel pair would re-add the
// same root twice, which Gamma cannot realize).
template <typename Fn>
void for_each_minus_pair_set(const RootSet& s, int m, Fn&& fn) {
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> arc_pair;
  int pair_id = 0;
  for (const Root& r : s.roots()) {
    if (!r.minus) continue;
    arcs.emplace_back(r.i, r.j);
    arc_pair.push_back(pair_id);
    arcs.emplace_back(r.j, r.i);
    arc_pair.push_back(pair_id);
    ++pair_id;
  }
  std::vector<std::pair<int, int>> chosen;
  std::vector<int> chosen_pair;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(chosen.size()) == m) {
      fn(PairSet(chosen));
      return;
    }
    for (std::size_t i = from; i < arcs.size(); ++i) {
      bool clash = false;
      for (const auto& [a, b] : chosen)
        if (a == arcs[i].first || b == arcs[i].second) clash = true;
      for (int p : chosen_pair)
        if (p == arc_pair[i]) clash = true;
      if (clash) continue;
      chosen.push_back(arcs[i]);
      chosen_pair.push_back(arc_pair[i]);
      rec(i + 1);
      chosen.pop_back();
      chosen_pair.pop_back();
    }
  };
  rec(0);
}

}  // namespace detail

// D_n generating identity over the number of selected minus roots:
//   sum_m t^m sum_J (-1)^{Sigma J + m} eps(tau_J) v_{i_1 j_1}...v_{i_m j_m}
//       det((L_{S - J^-})(J))
//     = sum_H (-2)^{k(H)} w(H) prod_i ((1+t)^{l_i^-(H)} - 1),
// H over subsets of S whose signed graph spans 1..n with every component
// unicyclic, l_i^- the number of minus edges on the i-th cycle. Cycles
// without minus edges kill their factor, so such H drop out.
inline UniPolyCheck cardm_check(const RootSet& s, int cap = 20) {
  if (s.size() > cap) throw TooLargeError("root subset enumeration exceeds cap");
  UniPoly lhs;
  for (int m = 1; m <= s.n(); ++m) {
    RingElem qm(0);
    detail::for_each_minus_pair_set(s, m, [&](const PairSet& j) {
      RingElem vprod = detail::minus_weight_product(s, j);
      if (vprod.is_zero()) return;
      RootSet sj = detail::remove_minus_roots(s, j);
      RingElem d = det(minor_matrix(dn_laplacian(sj), j));
      RingElem term = vprod * d;
      int sign = ((j.sigma() + j.size()) % 2 == 0 ? 1 : -1) * j.tau_sign();
      qm += sign > 0 ? term : -term;
    });
    if (!qm.is_zero()) lhs.add_term(m, qm);
  }

  UniPoly rhs;
  for (std::uint32_t mask = 0; mask < (1u << s.size()); ++mask) {
    RootSet h = s.subset(mask);
    detail::GammaView hv = detail::gamma_view(h);
    MultiSubgraph m = detail::gamma_multigraph(hv, h);
    // re-parent onto n vertices for spanning-mode components
    ComponentInfo info = components(m, ComponentMode::kSpanning);
    bool all_unicyclic = true;
    for (int c = 0; c < info.count; ++c)
      if (info.chi[c] != 0) all_unicyclic = false;
    if (!all_unicyclic) continue;
    MultiSubgraph core = two_core(m);
    std::vector<int> comp_of(s.n() + 1, -1);
    for (int c = 0; c < info.count; ++c)
      for (int v : info.vertices[c]) comp_of[v] = c;
    std::vector<int> minus_on_cycle(info.count, 0);
    for (std::size_t e = 0; e < core.mult.size(); ++e) {
      if (core.mult[e] == 0) continue;
      if (hv.pair_has_minus[e]) minus_on_cycle[comp_of[hv.pairs.edge(static_cast<int>(e)).u]]++;
    }
    UniPoly factor(RingElem(1));
    for (int c = 0; c < info.count; ++c) {
      UniPoly f = UniPoly::one_plus_t_pow(minus_on_cycle[c]) + UniPoly(RingElem(-1));
      factor = factor * f;
    }
    if (factor.is_zero()) continue;
    RingElem coeff = h.weight();
    BigInt pow2 = BigInt(1) << info.count;
    coeff *= RingElem(info.count % 2 == 0 ? pow2 : -pow2);  // (-2)^{k(H)}
    rhs = rhs + factor * coeff;
  }
  return {lhs, rhs};
}

struct SumdReport {
  RingElem lhs;                 // cardm lhs at t = -2
  RingElem rhs;                 // 4^{k} w over odd-unicyclic spanning subsets
  RingElem rhs_all_maximal;     // (-2)^{k} w over all maximal independent subsets
  bool families_coincide = false;  // maximal independent == odd-unicyclic spanning

  bool ok() const { return lhs == rhs; }
};

// Specialization t = -2: only subsets whose every cycle is odd survive, and
// those are exactly the maximal independent subsets when Gamma(S) has odd
// cycles meeting every component. The report carries the literal sum over
// all maximal independent subsets separately; equality with it is only
// asserted when the two families coincide.
inline SumdReport sumd_check(const RootSet& s, int cap = 20) {
  SumdReport rep;
  UniPolyCheck cardm = cardm_check(s, cap);
  rep.lhs = cardm.lhs.eval(RingElem(-2));

  rep.rhs = RingElem(0);
  rep.rhs_all_maximal = RingElem(0);
  bool maximal_all_odd = true;
  for_each_maximal_independent_subset(
      s,
      [&](std::uint32_t, const RootSet& sub) {
        detail::GammaView hv = detail::gamma_view(sub);
        MultiSubgraph m = detail::gamma_multigraph(hv, sub);
        ComponentInfo info = components(m, ComponentMode::kSpanning);
        bool odd_unicyclic = true;  // cycles are odd automatically: sub is independent
        for (int c = 0; c < info.count; ++c)
          if (info.chi[c] != 0) odd_unicyclic = false;
        BigInt pow2 = BigInt(1) << info.count;
        rep.rhs_all_maximal += RingElem(info.count % 2 == 0 ? pow2 : -pow2) * sub.weight();
        if (!odd_unicyclic) {
          maximal_all_odd = false;
          return;
        }
        // at t = -2 each odd-cycle factor is -2, so (-2)^k * (-2)^k = 4^k
        BigInt pow4 = BigInt(1) << (2 * info.count);
        rep.rhs += RingElem(pow4) * sub.weight();
      },
      cap);
  rep.families_coincide = maximal_all_odd;
  return rep;
}

}  // namespace statsum
