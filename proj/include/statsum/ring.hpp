#pragma once

// Exact commutative-ring arithmetic: arbitrary-precision integers, rationals,
// and sparse multivariate polynomials over the integers with named variables.
//
// Values are immutable after construction; all operations are pure functions.
// Integers and rationals interoperate freely; polynomials interoperate with
// integers only. Combining a rational with a polynomial throws MixedRingError.

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace statsum {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct MixedRingError : std::runtime_error {
  MixedRingError() : std::runtime_error("cannot combine a rational with a polynomial") {}
};

struct UnboundVariableError : std::runtime_error {
  explicit UnboundVariableError(const std::string& var)
      : std::runtime_error("unbound variable in evaluation: " + var) {}
};

struct NonIntegerResultError : std::runtime_error {
  explicit NonIntegerResultError(const std::string& what) : std::runtime_error(what) {}
};

using VarId = std::uint32_t;

// Global interning table for variable names. Monomial order is lexicographic
// on the *name*, so the table provides both directions of the mapping.
class VarTable {
 public:
  static VarTable& instance() {
    static VarTable table;
    return table;
  }

  VarId intern(std::string_view name) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = ids_.find(std::string(name));
    if (it != ids_.end()) return it->second;
    VarId id = static_cast<VarId>(names_.size());
    names_.emplace_back(name);
    ids_.emplace(names_.back(), id);
    return id;
  }

  const std::string& name(VarId id) const {
    std::lock_guard<std::mutex> lock(mutex_);
    return names_.at(id);
  }

 private:
  VarTable() = default;
  mutable std::mutex mutex_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, VarId> ids_;
};

// A monomial is a product of variables with positive exponents, stored sorted
// by variable name. The empty monomial is 1.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarId id) {
    Monomial m;
    m.factors_.emplace_back(id, 1);
    return m;
  }

  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int total_degree() const {
    int d = 0;
    for (const auto& [id, e] : factors_) d += static_cast<int>(e);
    return d;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial out;
    const auto& a = factors_;
    const auto& b = other.factors_;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = name_cmp(a[i].first, b[j].first);
      if (c < 0) {
        out.factors_.push_back(a[i++]);
      } else if (c > 0) {
        out.factors_.push_back(b[j++]);
      } else {
        out.factors_.emplace_back(a[i].first, a[i].second + b[j].second);
        ++i;
        ++j;
      }
    }
    for (; i < a.size(); ++i) out.factors_.push_back(a[i]);
    for (; j < b.size(); ++j) out.factors_.push_back(b[j]);
    return out;
  }

  bool operator==(const Monomial& other) const {
    if (factors_.size() != other.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (factors_[i].second != other.factors_[i].second) return false;
      if (name_cmp(factors_[i].first, other.factors_[i].first) != 0) return false;
    }
    return true;
  }

  // Fixed total order: lexicographic on variable name, then higher exponent
  // first; a monomial that is a proper prefix sorts after its extensions, so
  // the constant term renders last.
  static int compare(const Monomial& a, const Monomial& b) {
    const auto& x = a.factors_;
    const auto& y = b.factors_;
    std::size_t i = 0;
    for (; i < x.size() && i < y.size(); ++i) {
      int c = name_cmp(x[i].first, y[i].first);
      if (c != 0) return c;
      if (x[i].second != y[i].second) return x[i].second > y[i].second ? -1 : 1;
    }
    if (i < x.size()) return -1;
    if (i < y.size()) return 1;
    return 0;
  }

  std::string to_string() const {
    if (factors_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i > 0) out += "*";
      out += VarTable::instance().name(factors_[i].first);
      if (factors_[i].second > 1) out += "^" + std::to_string(factors_[i].second);
    }
    return out;
  }

 private:
  static int name_cmp(VarId a, VarId b) {
    if (a == b) return 0;
    return VarTable::instance().name(a).compare(VarTable::instance().name(b)) < 0 ? -1 : 1;
  }

  std::vector<std::pair<VarId, std::uint32_t>> factors_;
};

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return Monomial::compare(a, b) < 0; }
};

class RingElem;
RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator*(const RingElem& a, const RingElem& b);

// Tagged exact value: Integer | Rational | Polynomial. Canonical form is
// maintained on every operation: rationals are reduced with positive
// denominator (mpq invariant), polynomial maps carry no zero coefficients,
// and a polynomial without variables collapses back to an integer so that
// values computed along different routes compare equal.
class RingElem {
 public:
  using PolyMap = std::map<Monomial, BigInt, MonomialLess>;

  RingElem() : value_(BigInt(0)) {}
  RingElem(int v) : value_(BigInt(v)) {}            // NOLINT: implicit by design
  RingElem(long v) : value_(BigInt(v)) {}           // NOLINT
  RingElem(long long v) : value_(BigInt(static_cast<long>(v))) {}  // NOLINT
  RingElem(BigInt v) : value_(std::move(v)) {}      // NOLINT

  static RingElem rational(const BigInt& num, const BigInt& den) {
    BigRat q(num, den);
    q.canonicalize();
    return from_rat(q);
  }

  static RingElem from_rat(BigRat q) {
    if (q.get_den() == 1) return RingElem(BigInt(q.get_num()));
    RingElem r;
    r.value_ = std::move(q);
    return r;
  }

  static RingElem variable(std::string_view name) {
    PolyMap m;
    m.emplace(Monomial::variable(VarTable::instance().intern(name)), BigInt(1));
    return from_poly(std::move(m));
  }

  static RingElem from_poly(PolyMap m) {
    for (auto it = m.begin(); it != m.end();) {
      if (it->second == 0)
        it = m.erase(it);
      else
        ++it;
    }
    if (m.empty()) return RingElem(0);
    if (m.size() == 1 && m.begin()->first.is_one()) return RingElem(m.begin()->second);
    RingElem r;
    r.value_ = std::move(m);
    return r;
  }

  bool is_integer() const { return std::holds_alternative<BigInt>(value_); }
  bool is_rational() const { return std::holds_alternative<BigRat>(value_); }
  bool is_polynomial() const { return std::holds_alternative<PolyMap>(value_); }

  bool is_zero() const { return is_integer() && std::get<BigInt>(value_) == 0; }
  bool is_one() const { return is_integer() && std::get<BigInt>(value_) == 1; }

  const BigInt& as_integer() const { return std::get<BigInt>(value_); }
  const BigRat& as_rational() const { return std::get<BigRat>(value_); }
  const PolyMap& as_polynomial() const { return std::get<PolyMap>(value_); }

  bool operator==(const RingElem& other) const {
    if (is_polynomial() != other.is_polynomial()) return false;
    if (is_polynomial()) {
      const auto& a = as_polynomial();
      const auto& b = other.as_polynomial();
      if (a.size() != b.size()) return false;
      auto ia = a.begin();
      auto ib = b.begin();
      for (; ia != a.end(); ++ia, ++ib) {
        if (ia->second != ib->second || !(ia->first == ib->first)) return false;
      }
      return true;
    }
    if (is_integer() && other.is_integer()) return as_integer() == other.as_integer();
    BigRat qa = is_integer() ? BigRat(as_integer()) : as_rational();
    BigRat qb = other.is_integer() ? BigRat(other.as_integer()) : other.as_rational();
    return qa == qb;
  }
  bool operator!=(const RingElem& other) const { return !(*this == other); }

  RingElem operator-() const {
    if (is_integer()) return RingElem(BigInt(-as_integer()));
    if (is_rational()) return from_rat(BigRat(-as_rational()));
    PolyMap m = as_polynomial();
    for (auto& [mono, c] : m) c = -c;
    return from_poly(std::move(m));
  }

  RingElem pow(unsigned e) const {
    RingElem acc(1);
    for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
    return acc;
  }

  // Substitutes every variable; throws UnboundVariableError if one is missing.
  RingElem eval(const std::map<std::string, RingElem>& assignment) const {
    if (!is_polynomial()) return *this;
    RingElem acc(0);
    for (const auto& [mono, coeff] : as_polynomial()) {
      RingElem term{BigInt(coeff)};
      for (const auto& [id, e] : mono.factors()) {
        const std::string& name = VarTable::instance().name(id);
        auto it = assignment.find(name);
        if (it == assignment.end()) throw UnboundVariableError(name);
        term = term * it->second.pow(e);
      }
      acc = acc + term;
    }
    return acc;
  }

  std::string to_string() const {
    if (is_integer()) return as_integer().get_str();
    if (is_rational()) return as_rational().get_str();
    std::string out;
    bool first = true;
    for (const auto& [mono, coeff] : as_polynomial()) {
      BigInt c = coeff;
      if (first) {
        if (c < 0) {
          out += "-";
          c = -c;
        }
      } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
      }
      first = false;
      if (mono.is_one()) {
        out += c.get_str();
      } else {
        if (c != 1) out += c.get_str() + "*";
        out += mono.to_string();
      }
    }
    return out;
  }

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);

 private:
  static PolyMap to_poly_map(const RingElem& v) {
    if (v.is_polynomial()) return v.as_polynomial();
    if (v.is_rational()) throw MixedRingError();
    PolyMap m;
    if (v.as_integer() != 0) m.emplace(Monomial(), v.as_integer());
    return m;
  }

  std::variant<BigInt, BigRat, PolyMap> value_;
};

inline RingElem operator+(const RingElem& a, const RingElem& b) {
  if (a.is_polynomial() || b.is_polynomial()) {
    RingElem::PolyMap m = RingElem::to_poly_map(a);
    for (const auto& [mono, c] : RingElem::to_poly_map(b)) {
      auto [it, inserted] = m.emplace(mono, c);
      if (!inserted) it->second += c;
    }
    return RingElem::from_poly(std::move(m));
  }
  if (a.is_integer() && b.is_integer()) return RingElem(BigInt(a.as_integer() + b.as_integer()));
  BigRat qa = a.is_integer() ? BigRat(a.as_integer()) : a.as_rational();
  BigRat qb = b.is_integer() ? BigRat(b.as_integer()) : b.as_rational();
  return RingElem::from_rat(qa + qb);
}

inline RingElem operator-(const RingElem& a, const RingElem& b) { return a + (-b); }

inline RingElem operator*(const RingElem& a, const RingElem& b) {
  if (a.is_polynomial() || b.is_polynomial()) {
    RingElem::PolyMap pa = RingElem::to_poly_map(a);
    RingElem::PolyMap pb = RingElem::to_poly_map(b);
    RingElem::PolyMap out;
    for (const auto& [ma, ca] : pa) {
      for (const auto& [mb, cb] : pb) {
        Monomial m = ma * mb;
        BigInt c = ca * cb;
        auto [it, inserted] = out.emplace(std::move(m), c);
        if (!inserted) it->second += c;
      }
    }
    return RingElem::from_poly(std::move(out));
  }
  if (a.is_integer() && b.is_integer()) return RingElem(BigInt(a.as_integer() * b.as_integer()));
  BigRat qa = a.is_integer() ? BigRat(a.as_integer()) : a.as_rational();
  BigRat qb = b.is_integer() ? BigRat(b.as_integer()) : b.as_rational();
  return RingElem::from_rat(qa * qb);
}

inline RingElem& operator+=(RingElem& a, const RingElem& b) { return a = a + b; }
inline RingElem& operator-=(RingElem& a, const RingElem& b) { return a = a - b; }
inline RingElem& operator*=(RingElem& a, const RingElem& b) { return a = a * b; }

// Exact division by a nonzero integer. Integer and polynomial operands must
// divide evenly (every coefficient), otherwise NonIntegerResultError; this is
// how identity checks detect a violated divisibility claim.
inline RingElem div_exact(const RingElem& a, const BigInt& d) {
  if (d == 0) throw std::invalid_argument("division by zero");
  if (a.is_rational()) return RingElem::from_rat(BigRat(a.as_rational() / BigRat(d)));
  if (a.is_integer()) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.as_integer().get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw NonIntegerResultError("integer not divisible by " + d.get_str());
    return RingElem(std::move(q));
  }
  RingElem::PolyMap m = a.as_polynomial();
  for (auto& [mono, c] : m) {
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw NonIntegerResultError("polynomial coefficient not divisible by " + d.get_str());
    c = q;
  }
  return RingElem::from_poly(std::move(m));
}

}  // namespace statsum
