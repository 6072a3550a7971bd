#pragma once

// Coefficient fields. Both satisfy the CoefficientField concept; polynomial
// code is templated on the field and never touches element internals.

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "unproj/error.hpp"

namespace unproj {

template <class F>
concept CoefficientField = requires(const F& k, const typename F::Element& a, std::int64_t n,
                                    std::string_view s) {
  typename F::Element;
  { k.zero() } -> std::same_as<typename F::Element>;
  { k.one() } -> std::same_as<typename F::Element>;
  { k.from_int(n) } -> std::same_as<typename F::Element>;
  { k.from_decimal(s, s) } -> std::same_as<typename F::Element>;
  { k.add(a, a) } -> std::same_as<typename F::Element>;
  { k.sub(a, a) } -> std::same_as<typename F::Element>;
  { k.neg(a) } -> std::same_as<typename F::Element>;
  { k.mul(a, a) } -> std::same_as<typename F::Element>;
  { k.inv(a) } -> std::same_as<typename F::Element>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.is_one(a) } -> std::same_as<bool>;
  { k.to_string(a) } -> std::same_as<std::string>;
  { k.name() } -> std::same_as<std::string>;
};

/// Integers modulo a prime p < 2^31. Residues are kept in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p < 2 || p >= (1u << 31)) throw FieldError("prime modulus must lie in [2, 2^31)");
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) throw FieldError("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }

  Element from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }

  Element from_decimal(std::string_view num, std::string_view den) const {
    Element n = parse_mod(num);
    Element d = parse_mod(den);
    if (d == 0) throw FieldError("denominator vanishes modulo " + std::to_string(p_));
    return mul(n, inv(d));
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw FieldError("inverse of zero");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return from_int(t);
  }

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  /// Symmetric representative in (-p/2, p/2].
  std::int64_t to_signed(Element a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }
  std::string to_string(Element a) const { return std::to_string(to_signed(a)); }
  std::string name() const { return "Fp:" + std::to_string(p_); }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  Element parse_mod(std::string_view digits) const {
    std::uint64_t r = 0;
    for (char ch : digits) {
      if (ch < '0' || ch > '9') throw FieldError("malformed integer '" + std::string(digits) + "'");
      r = (r * 10 + static_cast<std::uint64_t>(ch - '0')) % p_;
    }
    return static_cast<Element>(r);
  }

  std::uint32_t p_;
};

/// The rationals, backed by GMP. gmpxx keeps every result canonical
/// (lowest terms, positive denominator).
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(std::int64_t v) const { return mpq_class(mpz_class(std::to_string(v))); }

  Element from_decimal(std::string_view num, std::string_view den) const {
    mpz_class n, d;
    if (n.set_str(std::string(num), 10) != 0 || d.set_str(std::string(den), 10) != 0)
      throw FieldError("malformed integer in '" + std::string(num) + "/" + std::string(den) + "'");
    if (d == 0) throw FieldError("zero denominator");
    Element q(n, d);
    q.canonicalize();
    return q;
  }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw FieldError("inverse of zero");
    return 1 / a;
  }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  std::string to_string(const Element& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

static_assert(CoefficientField<PrimeField>);
static_assert(CoefficientField<RationalField>);

}  // namespace unproj
