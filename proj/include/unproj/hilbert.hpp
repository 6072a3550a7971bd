#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "unproj/error.hpp"

namespace unproj {

/// Univariate polynomial in t with int64 coefficients; index = power.
/// Trailing zeros are trimmed so equality is structural.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPoly one() { return IntPoly({1}); }
  static IntPoly monomial(std::int64_t coeff, int power) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(power) + 1, 0);
    c.back() = coeff;
    return IntPoly(std::move(c));
  }
  /// Builds from (coefficient, power) pairs.
  static IntPoly from_terms(const std::vector<std::pair<std::int64_t, int>>& terms) {
    IntPoly p;
    for (auto [c, e] : terms) p += monomial(c, e);
    return p;
  }
  /// 1 - t^w
  static IntPoly one_minus(int w) { return one() - monomial(1, w); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t operator[](int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : 0;
  }
  const std::vector<std::int64_t>& coefficients() const { return c_; }

  /// Non-zero terms as (coefficient, power), ascending power.
  std::vector<std::pair<std::int64_t, int>> terms() const {
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) out.emplace_back(c_[i], static_cast<int>(i));
    return out;
  }

  std::int64_t evaluate_at_one() const {
    std::int64_t s = 0;
    for (auto c : c_) s = checked_add(s, c);
    return s;
  }

  /// t^d N(1/t) == N(t) with d the degree.
  bool is_palindromic() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return true;
  }

  /// Exact division by (1 - t); precondition evaluate_at_one() == 0.
  IntPoly divide_one_minus_t() const {
    if (evaluate_at_one() != 0) throw Error("polynomial not divisible by 1 - t");
    if (c_.empty()) return {};
    // N = (1 - t) Q  =>  q_i = sum_{j<=i} n_j
    std::vector<std::int64_t> q(c_.size() - 1, 0);
    std::int64_t run = 0;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
      run = checked_add(run, c_[i]);
      q[i] = run;
    }
    return IntPoly(std::move(q));
  }

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = checked_add(a[static_cast<int>(i)], b[static_cast<int>(i)]);
    return IntPoly(std::move(c));
  }
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + b * IntPoly({-1}); }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    }
    return IntPoly(std::move(c));
  }
  IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
  /// Multiplies by t^k.
  IntPoly shifted(int k) const {
    if (is_zero()) return {};
    std::vector<std::int64_t> c(static_cast<std::size_t>(k), 0);
    c.insert(c.end(), c_.begin(), c_.end());
    return IntPoly(std::move(c));
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  std::string to_string(char var = 't') const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto [c, e] : terms()) {
      std::int64_t mag = c < 0 ? -c : c;
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (e == 0 || mag != 1) out += std::to_string(mag);
      if (e > 0) {
        if (mag != 1) out += '*';
        out += var;
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("integer overflow in Hilbert arithmetic");
    return r;
  }
  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("integer overflow in Hilbert arithmetic");
    return r;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<std::int64_t> c_;
};

/// N(t) / prod_i (1 - t^{w_i}) over the full list of ambient weights.
/// The fraction is never reduced.
struct HilbertSeries {
  IntPoly numerator;
  std::vector<int> denominator_weights;

  IntPoly denominator() const {
    IntPoly d = IntPoly::one();
    for (int w : denominator_weights) d = d * IntPoly::one_minus(w);
    return d;
  }

  /// Coefficients of the power series up to t^max_degree: dim_k (R/I)_d.
  std::vector<std::int64_t> expand(int max_degree) const {
    // series = N * prod 1/(1 - t^w); multiply by each geometric series in turn
    std::vector<std::int64_t> s(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int i = 0; i <= max_degree; ++i) s[static_cast<std::size_t>(i)] = numerator[i];
    for (int w : denominator_weights)
      for (int i = w; i <= max_degree; ++i) s[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i - w)];
    return s;
  }

  /// Krull dimension and degree, valid when all weights equal 1:
  /// N = (1-t)^k N' with N'(1) != 0 gives dim = n - k and degree N'(1).
  std::pair<int, std::int64_t> dimension_and_degree() const {
    for (int w : denominator_weights)
      if (w != 1) throw Error("dimension_and_degree needs a standard grading");
    if (numerator.is_zero()) return {-1, 0};
    IntPoly n = numerator;
    int k = 0;
    while (n.evaluate_at_one() == 0) {
      n = n.divide_one_minus_t();
      ++k;
    }
    return {static_cast<int>(denominator_weights.size()) - k, n.evaluate_at_one()};
  }

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
    auto wa = a.denominator_weights, wb = b.denominator_weights;
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    return a.numerator == b.numerator && wa == wb;
  }
};

}  // namespace unproj
