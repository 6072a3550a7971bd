#pragma once

// Weighted-graded polynomial rings, monomials and monomial orders.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "unproj/error.hpp"
#include "unproj/field.hpp"

namespace unproj {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector with cached weighted degree and support bitmask.
/// Exponents are 8-bit; every operation that could overflow checks.
class Monomial {
 public:
  using Exponent = std::uint8_t;
  static constexpr int kMaxExponent = 255;

  Monomial() = default;

  /// Builds from explicit exponents; `weights` must have the same length.
  Monomial(std::span<const int> exponents, std::span<const int> weights) {
    if (exponents.size() > kMaxVariables) throw Error("too many variables");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
      if (exponents[i] < 0 || exponents[i] > kMaxExponent) throw Error("exponent out of range");
      exp_[i] = static_cast<Exponent>(exponents[i]);
      degree_ += exponents[i] * weights[i];
      if (exponents[i] != 0) support_ |= 1u << i;
    }
  }

  static Monomial variable(std::size_t index, int weight, int power = 1) {
    if (power < 0 || power > kMaxExponent) throw Error("exponent out of range");
    Monomial m;
    m.exp_[index] = static_cast<Exponent>(power);
    m.degree_ = weight * power;
    if (power != 0) m.support_ = 1u << index;
    return m;
  }

  int operator[](std::size_t i) const { return exp_[i]; }
  int degree() const { return degree_; }
  std::uint32_t support() const { return support_; }
  bool is_one() const { return support_ == 0; }
  int total_degree() const {
    int s = 0;
    for (auto e : exp_) s += e;
    return s;
  }

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0) return false;
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      int e = a.exp_[i] + b.exp_[i];
      if (e > kMaxExponent) throw Error("exponent overflow");
      m.exp_[i] = static_cast<Exponent>(e);
    }
    m.degree_ = a.degree_ + b.degree_;
    m.support_ = a.support_ | b.support_;
    return m;
  }

  /// Exact quotient; precondition `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVariables; ++i) {
      m.exp_[i] = static_cast<Exponent>(a.exp_[i] - b.exp_[i]);
      if (m.exp_[i] != 0) m.support_ |= 1u << i;
    }
    m.degree_ = a.degree_ - b.degree_;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b, std::span<const int> weights) {
    Monomial m;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
      m.degree_ += m.exp_[i] * weights[i];
    }
    m.support_ = a.support_ | b.support_;
    return m;
  }

  /// Divides out `b` as far as possible: exponent-wise max(a - b, 0).
  static Monomial colon(const Monomial& a, const Monomial& b, std::span<const int> weights) {
    Monomial m;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      int e = std::max(0, a.exp_[i] - b.exp_[i]);
      m.exp_[i] = static_cast<Exponent>(e);
      m.degree_ += e * weights[i];
      if (e != 0) m.support_ |= 1u << i;
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  /// Arbitrary but fixed total order, for use as a container key.
  friend bool key_less(const Monomial& a, const Monomial& b) { return a.exp_ < b.exp_; }

  std::span<const Exponent> exponents(std::size_t n) const { return {exp_.data(), n}; }

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::int32_t degree_ = 0;
  std::uint32_t support_ = 0;
};

enum class OrderKind {
  Lex,             ///< lexicographic on the ring's variable list
  WeightedRevLex,  ///< weighted degree, ties broken reverse-lexicographically
};

inline std::string_view to_string(OrderKind k) {
  return k == OrderKind::Lex ? "lex" : "grevlex";
}

inline OrderKind parse_order(std::string_view s) {
  if (s == "lex") return OrderKind::Lex;
  if (s == "grevlex" || s == "wrevlex") return OrderKind::WeightedRevLex;
  throw Error("unknown monomial order '" + std::string(s) + "'");
}

/// Compares under `kind` using the first `n` variables.
inline std::strong_ordering compare(OrderKind kind, std::size_t n, const Monomial& a,
                                    const Monomial& b) {
  if (kind == OrderKind::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] <=> b[i];
    return std::strong_ordering::equal;
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

struct Variable {
  std::string name;
  int weight = 1;
  friend bool operator==(const Variable&, const Variable&) = default;
};

inline bool is_valid_variable_name(std::string_view s) {
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto alnum = [&](char c) { return alpha(c) || (c >= '0' && c <= '9') || c == '_'; };
  return !s.empty() && alpha(s.front()) && std::all_of(s.begin() + 1, s.end(), alnum);
}

/// k[v_1, ..., v_n] with positive integer weights and an order of record.
/// The variable list, the field and the order together form the ring's
/// identity; polynomials from rings that differ in any of them never mix.
template <CoefficientField F>
class PolynomialRing {
 public:
  using Field = F;
  using Element = typename F::Element;

  PolynomialRing(F field, std::vector<Variable> vars, OrderKind order = OrderKind::WeightedRevLex)
      : field_(std::move(field)), vars_(std::move(vars)), order_(order) {
    if (vars_.size() > kMaxVariables)
      throw Error("at most " + std::to_string(kMaxVariables) + " variables are supported");
    std::unordered_set<std::string> seen;
    for (const auto& v : vars_) {
      if (!is_valid_variable_name(v.name)) throw Error("invalid variable name '" + v.name + "'");
      if (v.weight < 1) throw Error("variable '" + v.name + "' has non-positive weight");
      if (!seen.insert(v.name).second) throw Error("duplicate variable '" + v.name + "'");
      weights_.push_back(v.weight);
    }
  }

  static std::shared_ptr<const PolynomialRing> make(F field, std::vector<Variable> vars,
                                                    OrderKind order = OrderKind::WeightedRevLex) {
    return std::make_shared<const PolynomialRing>(std::move(field), std::move(vars), order);
  }

  const F& field() const { return field_; }
  std::size_t size() const { return vars_.size(); }
  const std::vector<Variable>& variables() const { return vars_; }
  std::span<const int> weights() const { return weights_; }
  int weight(std::size_t i) const { return weights_[i]; }
  const std::string& name(std::size_t i) const { return vars_[i].name; }
  OrderKind order() const { return order_; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == name) return i;
    return std::nullopt;
  }
  std::size_t require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw Error("unknown variable '" + std::string(name) + "'");
    return *i;
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return unproj::compare(order_, vars_.size(), a, b);
  }

  Monomial monomial(std::span<const int> exponents) const {
    if (exponents.size() != vars_.size()) throw Error("exponent vector length mismatch");
    return Monomial(exponents, weights_);
  }
  Monomial variable_monomial(std::size_t i, int power = 1) const {
    return Monomial::variable(i, weights_[i], power);
  }
  Monomial lcm(const Monomial& a, const Monomial& b) const {
    return Monomial::lcm(a, b, weights_);
  }

  std::shared_ptr<const PolynomialRing> with_order(OrderKind order) const {
    return make(field_, vars_, order);
  }

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
    return a.order_ == b.order_ && a.vars_ == b.vars_ && a.field_ == b.field_;
  }

 private:
  F field_;
  std::vector<Variable> vars_;
  std::vector<int> weights_;
  OrderKind order_;
};

template <CoefficientField F>
using RingPtr = std::shared_ptr<const PolynomialRing<F>>;

template <CoefficientField F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

/// Same variables and field, possibly a different order.
template <CoefficientField F>
bool same_variables(const PolynomialRing<F>& a, const PolynomialRing<F>& b) {
  return a.variables() == b.variables() && a.field() == b.field();
}

/// All monomials of weighted degree `d` in the variables `vars` (indices
/// into `ring`), ordered so that the exponent of the last listed variable
/// is compared first, then the one before it, and so on, ascending.
/// With vars = (a, b, c) and unit weights this gives a^2, ab, b^2, ac, bc, c^2.
template <CoefficientField F>
std::vector<Monomial> monomials_of_degree(const PolynomialRing<F>& ring, int d, std::vector<std::size_t> vars) {
  std::vector<std::vector<int>> found;
  std::vector<int> cur(vars.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
    if (pos == vars.size()) {
      if (remaining == 0) found.push_back(cur);
      return;
    }
    int w = ring.weight(vars[pos]);
    for (int e = 0; e * w <= remaining; ++e) {
      cur[pos] = e;
      self(self, pos + 1, remaining - e * w);
    }
    cur[pos] = 0;
  };
  if (d >= 0) rec(rec, 0, d);
  std::sort(found.begin(), found.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  std::vector<Monomial> out;
  for (const auto& e : found) {
    std::vector<int> full(ring.size(), 0);
    for (std::size_t i = 0; i < vars.size(); ++i) full[vars[i]] = e[i];
    out.push_back(ring.monomial(full));
  }
  return out;
}

template <CoefficientField F>
std::vector<Monomial> monomials_of_degree(const PolynomialRing<F>& ring, int d) {
  std::vector<std::size_t> all(ring.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return monomials_of_degree(ring, d, std::move(all));
}

}  // namespace unproj
