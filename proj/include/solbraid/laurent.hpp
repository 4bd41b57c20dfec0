#pragma once

// Exact one-variable Laurent polynomials over the integers.
//
// Exponents are stored doubled so half-integer powers (which appear in the
// Jones polynomial of even-component links) stay exact integers internally.
// Coefficient arithmetic is 64-bit and overflow-checked; leaving the range
// raises resource_limit_error instead of wrapping.
//
// Rendering is ascending by exponent, e.g. "t^-1 - 1 + t"; a half-integer
// power k/2 prints as "t^k/2" and only when k is odd.

#include <cstdint>
#include <map>
#include <string>

#include "solbraid/errors.hpp"

namespace solbraid {

namespace detail {

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw resource_limit_error("exact integer overflow in polynomial arithmetic");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw resource_limit_error("exact integer overflow in polynomial arithmetic");
  return r;
}

}  // namespace detail

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(char variable) : var_(variable) {}

  static LaurentPolynomial constant(long long c, char variable = 't') {
    LaurentPolynomial p(variable);
    if (c != 0) p.terms_[0] = c;
    return p;
  }
  static LaurentPolynomial one(char variable = 't') { return constant(1, variable); }
  /// c * var^(doubled/2)
  static LaurentPolynomial monomial_half(long long c, int doubled, char variable = 't') {
    LaurentPolynomial p(variable);
    if (c != 0) p.terms_[doubled] = c;
    return p;
  }
  /// c * var^exp for an integer exponent
  static LaurentPolynomial monomial(long long c, int exp, char variable = 't') {
    return monomial_half(c, 2 * exp, variable);
  }

  char variable() const { return var_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1; }
  const std::map<int, long long>& terms() const { return terms_; }  // doubled exponent -> coeff

  int min_doubled_exp() const { require_nonzero(); return terms_.begin()->first; }
  int max_doubled_exp() const { require_nonzero(); return terms_.rbegin()->first; }

  long long eval_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : terms_) s = detail::checked_add(s, c);
    return s;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r(var_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    merge_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    merge_var(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r(a.is_constant() ? b.var_ : a.var_);
    if (!a.is_constant() && !b.is_constant() && a.var_ != b.var_)
      throw std::invalid_argument("polynomial variable mismatch");
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(ea + eb, detail::checked_mul(ca, cb));
    return r;
  }

  LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

  /// Multiply by c * var^(doubled/2); cheaper than building a monomial.
  LaurentPolynomial shifted(long long c, int doubled) const {
    LaurentPolynomial r(var_);
    for (const auto& [e, co] : terms_) {
      long long v = detail::checked_mul(co, c);
      if (v != 0) r.terms_[e + doubled] = v;
    }
    return r;
  }

  /// p(x) -> p(1/x)
  LaurentPolynomial substitute_inverse() const {
    LaurentPolynomial r(var_);
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
  }

  LaurentPolynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    LaurentPolynomial r = one(var_);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  /// Exact division; throws std::invalid_argument when the division leaves a
  /// remainder or a coefficient step is not integral.
  LaurentPolynomial divide_exact(const LaurentPolynomial& d) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (is_zero()) return LaurentPolynomial(var_);
    LaurentPolynomial num = *this;
    LaurentPolynomial q(var_);
    const int dlead = d.max_doubled_exp();
    const long long dc = d.terms_.rbegin()->second;
    while (!num.is_zero() && num.max_doubled_exp() - num.min_doubled_exp() >=
                                 dlead - d.min_doubled_exp()) {
      const int e = num.max_doubled_exp();
      const long long c = num.terms_.rbegin()->second;
      if (c % dc != 0)
        throw std::invalid_argument("polynomial division is not exact");
      const long long qc = c / dc;
      const int qe = e - dlead;
      q.add_term(qe, qc);
      num -= d.shifted(qc, qe);
    }
    if (!num.is_zero()) throw std::invalid_argument("polynomial division is not exact");
    return q;
  }

  /// True when p(x) == p(1/x) after the stored exponents are read as-is.
  bool is_palindromic() const { return *this == substitute_inverse(); }

  bool operator==(const LaurentPolynomial& o) const {
    if (terms_ != o.terms_) return false;
    return terms_.empty() || is_constant() || o.is_constant() || var_ == o.var_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      const bool neg = c < 0;
      const long long mag = neg ? -c : c;
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string pow_part;
      if (e != 0) {
        pow_part = std::string(1, var_);
        if (e != 2) {
          pow_part += "^";
          if (e % 2 == 0)
            pow_part += std::to_string(e / 2);
          else
            pow_part += std::to_string(e) + "/2";
        }
      }
      if (pow_part.empty())
        out += std::to_string(mag);
      else if (mag != 1)
        out += std::to_string(mag) + pow_part;
      else
        out += pow_part;
    }
    return out;
  }

 private:
  char var_ = 't';
  std::map<int, long long> terms_;

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  void merge_var(const LaurentPolynomial& o) {
    if (is_constant() && !o.is_constant())
      var_ = o.var_;
    else if (!is_constant() && !o.is_constant() && var_ != o.var_)
      throw std::invalid_argument("polynomial variable mismatch");
  }
  void add_term(int e, long long c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = detail::checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }
  void require_nonzero() const {
    if (terms_.empty()) throw std::invalid_argument("zero polynomial has no degree");
  }
};

}  // namespace solbraid
