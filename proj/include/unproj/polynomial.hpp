#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "unproj/ring.hpp"

namespace unproj {

template <CoefficientField F>
struct Term {
  Monomial mono;
  typename F::Element coeff;
};

template <CoefficientField F>
using TermList = std::vector<Term<F>>;

namespace detail {

/// Merges two strictly descending term lists, adding coefficients.
template <CoefficientField F>
TermList<F> merge_terms(const PolynomialRing<F>& ring, std::span<const Term<F>> a,
                        std::span<const Term<F>> b) {
  const F& k = ring.field();
  TermList<F> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      auto s = k.add(a[i].coeff, b[j].coeff);
      if (!k.is_zero(s)) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

/// Geometric bucket accumulator: amortises repeated additions of sorted
/// term lists and yields the sum's terms in descending order.
template <CoefficientField F>
class Geobucket {
 public:
  explicit Geobucket(const PolynomialRing<F>& ring) : ring_(&ring) {}

  void add(TermList<F> terms) {
    if (terms.empty()) return;
    std::size_t level = 0;
    while (capacity(level) < terms.size()) ++level;
    for (;;) {
      if (level >= buckets_.size()) buckets_.resize(level + 1);
      auto& b = buckets_[level];
      if (b.empty()) {
        b.terms = std::move(terms);
        b.head = 0;
        return;
      }
      terms = merge_terms<F>(*ring_, b.live(), terms);
      b.clear();
      if (terms.size() <= capacity(level)) {
        b.terms = std::move(terms);
        return;
      }
      ++level;
    }
  }

  /// Removes and returns the largest term with nonzero coefficient.
  std::optional<Term<F>> pop_leading() {
    const F& k = ring_->field();
    for (;;) {
      Bucket* best = nullptr;
      for (auto& b : buckets_) {
        if (b.empty()) continue;
        if (!best || ring_->compare(b.front().mono, best->front().mono) > 0) best = &b;
      }
      if (!best) return std::nullopt;
      Term<F> t = best->take();
      for (auto& b : buckets_) {
        if (&b != best && !b.empty() && b.front().mono == t.mono) t.coeff = k.add(t.coeff, b.take().coeff);
      }
      if (!k.is_zero(t.coeff)) return t;
    }
  }

  TermList<F> drain() {
    TermList<F> out;
    while (auto t = pop_leading()) out.push_back(std::move(*t));
    return out;
  }

 private:
  struct Bucket {
    TermList<F> terms;
    std::size_t head = 0;
    bool empty() const { return head >= terms.size(); }
    const Term<F>& front() const { return terms[head]; }
    std::span<const Term<F>> live() const { return std::span<const Term<F>>(terms).subspan(head); }
    Term<F> take() {
      Term<F> t = std::move(terms[head++]);
      if (head == terms.size()) clear();
      return t;
    }
    void clear() {
      terms.clear();
      head = 0;
    }
  };

  static std::size_t capacity(std::size_t level) { return std::size_t{8} << (2 * level); }

  const PolynomialRing<F>* ring_;
  std::vector<Bucket> buckets_;
};

}  // namespace detail

/// Result of `weighted_degree`.
struct WeightedDegree {
  enum class Kind { Zero, Homogeneous, NonHomogeneous };
  Kind kind = Kind::Zero;
  int degree = 0;  ///< meaningful only when kind == Homogeneous

  static WeightedDegree zero() { return {}; }
  static WeightedDegree homogeneous(int d) { return {Kind::Homogeneous, d}; }
  static WeightedDegree non_homogeneous() { return {Kind::NonHomogeneous, 0}; }
  bool is_homogeneous() const { return kind == Kind::Homogeneous; }
  friend bool operator==(const WeightedDegree&, const WeightedDegree&) = default;
};

/// Sparse polynomial: terms strictly descending under the ring's order,
/// no zero coefficients. The zero polynomial has no terms.
template <CoefficientField F>
class Polynomial {
 public:
  using Element = typename F::Element;
  using Ring = PolynomialRing<F>;

  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

  /// Takes terms in any order; duplicates are combined and zeros dropped.
  Polynomial(RingPtr<F> ring, TermList<F> terms) : ring_(std::move(ring)) {
    const F& k = ring_->field();
    std::sort(terms.begin(), terms.end(),
              [&](const Term<F>& a, const Term<F>& b) { return ring_->compare(a.mono, b.mono) > 0; });
    for (auto& t : terms) {
      if (!terms_.empty() && terms_.back().mono == t.mono) {
        terms_.back().coeff = k.add(terms_.back().coeff, t.coeff);
        if (k.is_zero(terms_.back().coeff)) terms_.pop_back();
      } else if (!k.is_zero(t.coeff)) {
        terms_.push_back(std::move(t));
      }
    }
  }

  /// Wraps terms already sorted descending with nonzero coefficients.
  static Polynomial from_sorted(RingPtr<F> ring, TermList<F> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  static Polynomial constant(RingPtr<F> ring, Element c) {
    Polynomial p(std::move(ring));
    if (!p.ring_->field().is_zero(c)) p.terms_.push_back({Monomial{}, std::move(c)});
    return p;
  }
  template <std::integral I>
    requires(!std::same_as<I, Element>)
  static Polynomial constant(RingPtr<F> ring, I c) {
    auto e = ring->field().from_int(static_cast<std::int64_t>(c));
    return constant(std::move(ring), std::move(e));
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    Polynomial p(ring);
    p.terms_.push_back({ring->variable_monomial(i), ring->field().one()});
    return p;
  }
  static Polynomial variable(RingPtr<F> ring, std::string_view name) {
    auto i = ring->require_index(name);
    return variable(std::move(ring), i);
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, Element c) {
    Polynomial p(std::move(ring));
    if (!p.ring_->field().is_zero(c)) p.terms_.push_back({m, std::move(c)});
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  const F& field() const { return ring_->field(); }
  const TermList<F>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term<F>& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const Element& leading_coeff() const { return terms_.front().coeff; }

  /// Coefficient of `m`, zero if absent.
  Element coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [&](const Term<F>& t, const Monomial& x) {
      return ring_->compare(t.mono, x) > 0;
    });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return field().zero();
  }

  WeightedDegree weighted_degree() const {
    if (terms_.empty()) return WeightedDegree::zero();
    int d = terms_.front().mono.degree();
    for (const auto& t : terms_)
      if (t.mono.degree() != d) return WeightedDegree::non_homogeneous();
    return WeightedDegree::homogeneous(d);
  }
  bool is_homogeneous() const { return weighted_degree().kind != WeightedDegree::Kind::NonHomogeneous; }

  /// Largest weighted degree of a term (0 for the zero polynomial).
  int max_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Bitmask of variables occurring in some term.
  std::uint32_t support() const {
    std::uint32_t s = 0;
    for (const auto& t : terms_) s |= t.mono.support();
    return s;
  }

  Polynomial monic() const {
    if (is_zero() || field().is_one(leading_coeff())) return *this;
    return scaled(field().inv(leading_coeff()));
  }

  Polynomial scaled(const Element& c) const {
    const F& k = field();
    if (k.is_zero(c)) return Polynomial(ring_);
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono, k.mul(t.coeff, c)});
    return p;
  }

  /// c * m * this; order is preserved because monomial orders are multiplicative.
  TermList<F> times_term(const Monomial& m, const Element& c, std::size_t skip = 0) const {
    const F& k = field();
    TermList<F> out;
    out.reserve(terms_.size() - std::min(skip, terms_.size()));
    for (std::size_t i = skip; i < terms_.size(); ++i)
      out.push_back({terms_[i].mono * m, k.mul(terms_[i].coeff, c)});
    return out;
  }
  Polynomial mul_term(const Monomial& m, const Element& c) const {
    if (field().is_zero(c)) return Polynomial(ring_);
    return from_sorted(ring_, times_term(m, c));
  }

  Polynomial operator-() const { return scaled(field().neg(field().one())); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    return from_sorted(a.ring_, detail::merge_terms<F>(*a.ring_, a.terms_, b.terms_));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    const Polynomial& small = a.size() <= b.size() ? a : b;
    const Polynomial& large = a.size() <= b.size() ? b : a;
    detail::Geobucket<F> acc(*a.ring_);
    for (const auto& t : small.terms_) acc.add(large.times_term(t.mono, t.coeff));
    return from_sorted(a.ring_, acc.drain());
  }

  friend Polynomial operator*(const Polynomial& a, const Element& c) { return a.scaled(c); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned e) const {
    Polynomial result = constant(ring_, field().one());
    Polynomial base = *this;
    while (e != 0) {
      if (e & 1u) result *= base;
      e >>= 1;
      if (e != 0) base *= base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    return true;
  }

 private:
  static void check_ring(const Polynomial& a, const Polynomial& b) {
    if (!same_ring(a.ring_, b.ring_)) throw RingMismatch();
  }

  RingPtr<F> ring_;
  TermList<F> terms_;
};

template <CoefficientField F>
WeightedDegree weighted_degree(const Polynomial<F>& f) {
  return f.weighted_degree();
}

/// Re-sorts `f` into `target`, which must have the same variables and field
/// (typically the same ring under another monomial order).
template <CoefficientField F>
Polynomial<F> change_order(const Polynomial<F>& f, const RingPtr<F>& target) {
  if (same_ring(f.ring(), target)) return f;
  if (!same_variables(*f.ring(), *target)) throw RingMismatch("rings differ in more than the order");
  return Polynomial<F>(target, f.terms());
}

}  // namespace unproj
