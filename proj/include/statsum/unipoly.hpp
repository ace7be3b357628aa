#pragma once

// Dense polynomial in one formal parameter (t, q, lambda) with RingElem
// coefficients. Used for generating functions graded by an integer statistic;
// the ring of the coefficients is whatever the edge weights live in.

#include <string>
#include <vector>

#include "statsum/ring.hpp"

namespace statsum {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(RingElem constant) { coeffs_.push_back(std::move(constant)); trim(); }

  static UniPoly monomial(const RingElem& c, int power) {
    UniPoly p;
    p.coeffs_.assign(power + 1, RingElem(0));
    p.coeffs_[power] = c;
    p.trim();
    return p;
  }

  // (1 + t)^l by the binomial theorem.
  static UniPoly one_plus_t_pow(int l) {
    UniPoly p;
    p.coeffs_.assign(l + 1, RingElem(0));
    BigInt binom = 1;
    for (int k = 0; k <= l; ++k) {
      p.coeffs_[k] = RingElem(binom);
      binom = binom * (l - k) / (k + 1);
    }
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  RingElem coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return RingElem(0);
    return coeffs_[k];
  }

  void add_term(int power, const RingElem& c) {
    if (static_cast<int>(coeffs_.size()) <= power) coeffs_.resize(power + 1, RingElem(0));
    coeffs_[power] += c;
    trim();
  }

  bool is_zero() const { return coeffs_.empty(); }

  UniPoly operator+(const UniPoly& o) const {
    UniPoly out = *this;
    if (out.coeffs_.size() < o.coeffs_.size()) out.coeffs_.resize(o.coeffs_.size(), RingElem(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
    out.trim();
    return out;
  }

  UniPoly operator*(const UniPoly& o) const {
    if (coeffs_.empty() || o.coeffs_.empty()) return UniPoly();
    UniPoly out;
    out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, RingElem(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        out.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    out.trim();
    return out;
  }

  UniPoly operator*(const RingElem& c) const {
    UniPoly out = *this;
    for (auto& x : out.coeffs_) x *= c;
    out.trim();
    return out;
  }

  bool operator==(const UniPoly& o) const {
    int d = std::max(degree(), o.degree());
    for (int k = 0; k <= d; ++k)
      if (coeff(k) != o.coeff(k)) return false;
    return true;
  }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  RingElem eval(const RingElem& x) const {
    RingElem acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::string to_string(const std::string& var = "t") const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (coeffs_[k].is_zero()) continue;
      if (!first) out += " + ";
      first = false;
      if (k == 0) {
        out += "(" + coeffs_[k].to_string() + ")";
        continue;
      }
      if (!coeffs_[k].is_one()) out += "(" + coeffs_[k].to_string() + ")*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return first ? "0" : out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<RingElem> coeffs_;  // coeffs_[k] multiplies t^k
};

}  // namespace statsum
