#pragma once

// Matrices over RingElem: Laplacian construction, exact determinants keyed by
// ring (fraction-free elimination for integers/rationals, division-free
// expansion for polynomials), row/column-deleted minors M(J), permutation
// signs, and the f-determinant over cycle types.

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "statsum/graph.hpp"
#include "statsum/ring.hpp"

namespace statsum {

struct BadPairSetError : std::runtime_error {
  explicit BadPairSetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kDefaultDetSymbolicCap = 12;
inline constexpr int kDefaultDetNumericCap = 64;
inline constexpr int kDefaultFDetCap = 9;

class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, RingElem(0)) {}

  int n() const { return n_; }
  RingElem& at(int i, int j) { return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }
  const RingElem& at(int i, int j) const { return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }

  bool is_symmetric() const {
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

 private:
  int n_ = 0;
  std::vector<RingElem> a_;  // row-major, 1-based accessors
};

// Laplacian of a weighted graph: off-diagonal (i,j) entry -w_ij, diagonal
// entry the row-sum-cancelling sum of incident weights.
inline Matrix laplacian(const Graph& g) {
  Matrix m(g.n());
  for (int idx = 0; idx < g.edge_count(); ++idx) {
    const Edge& e = g.edge(idx);
    const RingElem& w = g.weight(idx);
    m.at(e.u, e.v) = m.at(e.u, e.v) - w;
    m.at(e.v, e.u) = m.at(e.v, e.u) - w;
    m.at(e.u, e.u) += w;
    m.at(e.v, e.v) += w;
  }
  return m;
}

// Sign of a permutation given as images perm[0..m), computed by explicit
// inversion count.
inline int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = a + 1; b < perm.size(); ++b)
      if (perm[a] > perm[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

inline std::vector<int> compose(const std::vector<int>& f, const std::vector<int>& g) {
  // (f o g)(x) = f(g(x)); permutations of {0..m-1}
  std::vector<int> h(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) h[x] = f[g[x]];
  return h;
}

// Component-disjoint set J = {(i_1,j_1),...,(i_m,j_m)}: all i's distinct and
// all j's distinct. Stored sorted by i. Houses Sigma(J) and tau_J.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    for (std::size_t a = 0; a < pairs_.size(); ++a)
      for (std::size_t b = a + 1; b < pairs_.size(); ++b) {
        if (pairs_[a].first == pairs_[b].first || pairs_[a].second == pairs_[b].second)
          throw BadPairSetError("pair set is not component-disjoint");
      }
  }

  int size() const { return static_cast<int>(pairs_.size()); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  int sigma() const {  // Sigma(J) = sum of all i_p + j_p
    int s = 0;
    for (const auto& [i, j] : pairs_) s += i + j;
    return s;
  }

  // tau_J permutes {0..m-1} so that j_{tau(1)} < j_{tau(2)} < ... when the
  // pairs are ordered by i: tau(r) is the i-order position holding the r-th
  // smallest j.
  std::vector<int> tau() const {
    std::vector<int> by_j(pairs_.size());
    for (std::size_t p = 0; p < pairs_.size(); ++p) by_j[p] = static_cast<int>(p);
    std::sort(by_j.begin(), by_j.end(),
              [&](int a, int b) { return pairs_[a].second < pairs_[b].second; });
    return by_j;
  }

  int tau_sign() const { return permutation_sign(tau()); }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Submatrix M(J): delete rows i_1..i_m and columns j_1..j_m, remaining
// rows/columns in increasing original order.
inline Matrix minor_matrix(const Matrix& m, const PairSet& j) {
  std::vector<bool> drop_row(m.n() + 1, false), drop_col(m.n() + 1, false);
  for (const auto& [ri, cj] : j.pairs()) {
    if (ri < 1 || ri > m.n() || cj < 1 || cj > m.n())
      throw BadPairSetError("pair index out of matrix range");
    drop_row[ri] = true;
    drop_col[cj] = true;
  }
  std::vector<int> rows, cols;
  for (int i = 1; i <= m.n(); ++i) {
    if (!drop_row[i]) rows.push_back(i);
    if (!drop_col[i]) cols.push_back(i);
  }
  Matrix out(static_cast<int>(rows.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      out.at(static_cast<int>(a + 1), static_cast<int>(b + 1)) = m.at(rows[a], cols[b]);
  return out;
}

namespace detail {

inline BigInt det_integer_bareiss(std::vector<BigInt> a, int n) {
  if (n == 0) return BigInt(1);
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };
  int sign = 1;
  BigInt prev_pivot = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return BigInt(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        BigInt num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev_pivot = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : BigInt(-at(n - 1, n - 1));
}

inline BigRat det_rational_elimination(std::vector<BigRat> a, int n) {
  if (n == 0) return BigRat(1);
  auto at = [&](int i, int j) -> BigRat& { return a[static_cast<std::size_t>(i) * n + j]; };
  BigRat det(1);
  for (int k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (at(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return BigRat(0);
      for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
      det = -det;
    }
    det *= at(k, k);
    for (int i = k + 1; i < n; ++i) {
      BigRat factor = at(i, k) / at(k, k);
      for (int j = k; j < n; ++j) at(i, j) -= factor * at(k, j);
    }
  }
  return det;
}

// Division-free expansion with memoization over column subsets: D[S] is the
// determinant of the first |S| rows against column set S, built by Laplace
// expansion along the last of those rows.
inline RingElem det_division_free(const Matrix& m) {
  int n = m.n();
  if (n == 0) return RingElem(1);
  std::vector<RingElem> d(std::size_t{1} << n, RingElem(0));
  d[0] = RingElem(1);
  std::vector<std::uint32_t> by_popcount;
  by_popcount.reserve(std::size_t{1} << n);
  for (std::uint32_t s = 1; s < (1u << n); ++s) by_popcount.push_back(s);
  std::sort(by_popcount.begin(), by_popcount.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint32_t s : by_popcount) {
    int row = __builtin_popcount(s);  // expanding row index (1-based)
    RingElem acc(0);
    int pos = 0;
    for (int col = 1; col <= n; ++col) {
      if (!(s & (1u << (col - 1)))) continue;
      ++pos;
      const RingElem& entry = m.at(row, col);
      if (!entry.is_zero()) {
        RingElem term = entry * d[s & ~(1u << (col - 1))];
        acc = (pos + row) % 2 == 0 ? acc + term : acc - term;
      }
    }
    d[s] = std::move(acc);
  }
  return d[(1u << n) - 1];
}

}  // namespace detail

// Exact determinant. Algorithm is keyed by the ring of the entries:
// fraction-free elimination for integers, exact elimination for rationals,
// division-free expansion for polynomials.
inline RingElem det(const Matrix& m, int symbolic_cap = kDefaultDetSymbolicCap,
                    int numeric_cap = kDefaultDetNumericCap) {
  bool any_poly = false, any_rat = false;
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) {
      if (m.at(i, j).is_polynomial()) any_poly = true;
      if (m.at(i, j).is_rational()) any_rat = true;
    }
  if (any_poly && any_rat) throw MixedRingError();
  if (any_poly) {
    if (m.n() > symbolic_cap)
      throw TooLargeError("symbolic determinant of size " + std::to_string(m.n()) +
                          " exceeds cap " + std::to_string(symbolic_cap));
    return detail::det_division_free(m);
  }
  if (m.n() > numeric_cap)
    throw TooLargeError("determinant of size " + std::to_string(m.n()) + " exceeds cap " +
                        std::to_string(numeric_cap));
  if (any_rat) {
    std::vector<BigRat> a;
    a.reserve(static_cast<std::size_t>(m.n()) * m.n());
    for (int i = 1; i <= m.n(); ++i)
      for (int j = 1; j <= m.n(); ++j)
        a.push_back(m.at(i, j).is_rational() ? m.at(i, j).as_rational()
                                             : BigRat(m.at(i, j).as_integer()));
    return RingElem::from_rat(detail::det_rational_elimination(std::move(a), m.n()));
  }
  std::vector<BigInt> a;
  a.reserve(static_cast<std::size_t>(m.n()) * m.n());
  for (int i = 1; i <= m.n(); ++i)
    for (int j = 1; j <= m.n(); ++j) a.push_back(m.at(i, j).as_integer());
  return RingElem(detail::det_integer_bareiss(std::move(a), m.n()));
}

// Cycle type of a permutation: counts[s] = number of cycles of length s,
// with sum s*counts[s] = n. counts[0] is unused.
struct CycleType {
  std::vector<int> counts;

  explicit CycleType(int n) : counts(n + 1, 0) {}

  int n() const {
    int total = 0;
    for (std::size_t s = 1; s < counts.size(); ++s) total += static_cast<int>(s) * counts[s];
    return total;
  }

  int count(int s) const { return s < static_cast<int>(counts.size()) ? counts[s] : 0; }
  bool operator<(const CycleType& o) const { return counts < o.counts; }
  bool operator==(const CycleType& o) const { return counts == o.counts; }
};

inline CycleType cycle_type_of(const std::vector<int>& perm) {
  int n = static_cast<int>(perm.size());
  CycleType t(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = perm[j];
      ++len;
    }
    t.counts[len]++;
  }
  return t;
}

// Sum over all permutations of the entry products a_{1,sigma(1)}...a_{n,sigma(n)},
// bucketed by cycle type. Enumeration is a DFS that prunes zero entries, so
// sparse matrices cost far less than n!.
inline std::map<CycleType, RingElem> f_det_buckets(const Matrix& m, int cap = kDefaultFDetCap) {
  int n = m.n();
  if (n > cap)
    throw TooLargeError("f-determinant of size " + std::to_string(n) + " exceeds cap " +
                        std::to_string(cap));
  std::map<CycleType, RingElem> buckets;
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  std::vector<RingElem> prod(n + 1, RingElem(1));
  std::function<void(int)> dfs = [&](int row) {
    if (row == n) {
      CycleType t = cycle_type_of(perm);
      auto [it, inserted] = buckets.emplace(std::move(t), prod[n]);
      if (!inserted) it->second += prod[n];
      return;
    }
    for (int col = 0; col < n; ++col) {
      if (used[col]) continue;
      const RingElem& entry = m.at(row + 1, col + 1);
      if (entry.is_zero()) continue;
      perm[row] = col;
      used[col] = true;
      prod[row + 1] = prod[row] * entry;
      dfs(row + 1);
      used[col] = false;
    }
    perm[row] = -1;
  };
  if (n == 0) {
    buckets.emplace(CycleType(0), RingElem(1));
    return buckets;
  }
  dfs(0);
  return buckets;
}

// f-determinant: permutation expansion with the sign replaced by an arbitrary
// function f of the permutation's cycle type.
inline RingElem f_det(const Matrix& m, const std::function<RingElem(const CycleType&)>& f,
                      int cap = kDefaultFDetCap) {
  RingElem acc(0);
  for (const auto& [type, sum] : f_det_buckets(m, cap)) {
    RingElem fv = f(type);
    if (!fv.is_zero()) acc += fv * sum;
  }
  return acc;
}

// The ordinary sign as a cycle-type function: (-1)^{n - #cycles}.
inline RingElem leibniz_sign(const CycleType& t) {
  int cycles = 0;
  for (std::size_t s = 1; s < t.counts.size(); ++s) cycles += t.counts[s];
  return RingElem((t.n() - cycles) % 2 == 0 ? 1 : -1);
}

}  // namespace statsum
