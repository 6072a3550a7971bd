#pragma once

// Buchberger's algorithm and multivariate division.
//
// GroebnerEngine is incremental: generators can be added between calls to
// complete(), and complete(d) only processes pairs of sugar degree <= d.
// For homogeneous input this yields a basis that is correct up to degree d,
// which is what minimal-generator extraction needs.

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "unproj/polynomial.hpp"

namespace unproj {

namespace detail {

/// Divides by a list of polynomials, first divisor in list order wins.
template <CoefficientField F>
class Reducer {
 public:
  explicit Reducer(const RingPtr<F>& ring) : ring_(ring) {}

  void push(const Polynomial<F>* d) {
    if (d->is_zero()) return;
    divisors_.push_back(d);
    inv_lc_.push_back(ring_->field().inv(d->leading_coeff()));
  }

  const Polynomial<F>* find(const Monomial& m, std::size_t* index = nullptr) const {
    for (std::size_t k = 0; k < divisors_.size(); ++k) {
      if (divisors_[k]->leading_monomial().divides(m)) {
        if (index) *index = k;
        return divisors_[k];
      }
    }
    return nullptr;
  }

  /// Full reduction of the terms accumulated in `acc`.
  Polynomial<F> reduce(Geobucket<F>& acc) const {
    const F& k = ring_->field();
    TermList<F> rem;
    std::size_t idx = 0;
    while (auto t = acc.pop_leading()) {
      if (const auto* d = find(t->mono, &idx)) {
        auto q = t->mono / d->leading_monomial();
        auto c = k.neg(k.mul(t->coeff, inv_lc_[idx]));
        acc.add(d->times_term(q, c, 1));
      } else {
        rem.push_back(std::move(*t));
      }
    }
    return Polynomial<F>::from_sorted(ring_, std::move(rem));
  }

  Polynomial<F> reduce(const Polynomial<F>& f) const {
    Geobucket<F> acc(*ring_);
    acc.add(f.terms());
    return reduce(acc);
  }

  bool empty() const { return divisors_.empty(); }

 private:
  RingPtr<F> ring_;
  std::vector<const Polynomial<F>*> divisors_;
  std::vector<typename F::Element> inv_lc_;
};

}  // namespace detail

/// Remainder of `f` on division by `divisors` under the ring's order.
/// Divisors are tried in list order; zero divisors are ignored.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors) {
  detail::Reducer<F> r(f.ring());
  for (const auto& d : divisors) {
    if (!same_ring(d.ring(), f.ring())) throw RingMismatch();
    r.push(&d);
  }
  return r.reduce(f);
}

/// Same, under an explicit order; the result lives in the ring with that order.
template <CoefficientField F>
Polynomial<F> normal_form(const Polynomial<F>& f, std::span<const Polynomial<F>> divisors, OrderKind order) {
  auto ring = f.ring()->order() == order ? f.ring() : f.ring()->with_order(order);
  std::vector<Polynomial<F>> ds;
  ds.reserve(divisors.size());
  for (const auto& d : divisors) ds.push_back(change_order(d, ring));
  return normal_form<F>(change_order(f, ring), ds);
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by ascending
/// leading monomial.
template <CoefficientField F>
class GroebnerBasis {
 public:
  GroebnerBasis(RingPtr<F> ring, std::vector<Polynomial<F>> elements)
      : ring_(std::move(ring)), elements_(std::move(elements)) {}

  const RingPtr<F>& ring() const { return ring_; }
  OrderKind order() const { return ring_->order(); }
  const std::vector<Polynomial<F>>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool is_unit() const { return elements_.size() == 1 && elements_[0].is_constant(); }
  bool is_zero_ideal() const { return elements_.empty(); }

  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& g : elements_) out.push_back(g.leading_monomial());
    return out;
  }

  Polynomial<F> reduce(const Polynomial<F>& f) const {
    return normal_form<F>(change_order(f, ring_), elements_);
  }
  bool contains(const Polynomial<F>& f) const { return reduce(f).is_zero(); }

 private:
  RingPtr<F> ring_;
  std::vector<Polynomial<F>> elements_;
};

template <CoefficientField F>
class GroebnerEngine {
 public:
  explicit GroebnerEngine(RingPtr<F> ring) : ring_(std::move(ring)) {}

  const RingPtr<F>& ring() const { return ring_; }

  /// Reduces `g` against the current basis and inserts the remainder.
  void add_generator(const Polynomial<F>& g) {
    if (!same_ring(g.ring(), ring_)) throw RingMismatch();
    if (unit_) return;
    auto h = reduce(g);
    if (!h.is_zero()) insert(h.monic(), g.max_degree());
  }

  /// Processes S-pairs until none of sugar <= max_sugar remains.
  void complete(std::optional<int> max_sugar = std::nullopt) {
    const int bound = max_sugar.value_or(std::numeric_limits<int>::max());
    for (;;) {
      if (unit_) {
        pairs_.clear();
        return;
      }
      auto next = select_pair(bound);
      if (!next) return;
      Pair p = pairs_[*next];
      pairs_[*next] = pairs_.back();
      pairs_.pop_back();
      ++stats_.pairs_processed;

      const auto& gi = basis_[p.i].poly;
      const auto& gj = basis_[p.j].poly;
      const F& k = ring_->field();
      detail::Geobucket<F> acc(*ring_);
      acc.add(gi.times_term(p.lcm / gi.leading_monomial(), k.one(), 1));
      acc.add(gj.times_term(p.lcm / gj.leading_monomial(), k.neg(k.one()), 1));
      auto h = reducer().reduce(acc);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(h.monic(), p.sugar);
    }
  }

  Polynomial<F> reduce(const Polynomial<F>& f) const { return reducer().reduce(f); }

  bool is_unit() const { return unit_; }

  /// Inter-reduces the active elements. Valid as a reduced Gröbner basis
  /// once complete() has run without a bound.
  std::vector<Polynomial<F>> reduced_basis() const {
    std::vector<Polynomial<F>> out;
    for (std::size_t a = 0; a < active_.size(); ++a) {
      detail::Reducer<F> others(ring_);
      for (std::size_t b = 0; b < active_.size(); ++b)
        if (b != a) others.push(&basis_[active_[b]].poly);
      out.push_back(others.reduce(basis_[active_[a]].poly).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial<F>& x, const Polynomial<F>& y) {
      return ring_->compare(x.leading_monomial(), y.leading_monomial()) < 0;
    });
    return out;
  }

  struct Stats {
    std::size_t pairs_processed = 0;
    std::size_t zero_reductions = 0;
  };
  const Stats& stats() const { return stats_; }
  std::size_t pending_pairs() const { return pairs_.size(); }

 private:
  struct Element {
    Polynomial<F> poly;
    int sugar;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int sugar;
  };

  detail::Reducer<F> reducer() const {
    detail::Reducer<F> r(ring_);
    for (auto idx : active_) r.push(&basis_[idx].poly);
    return r;
  }

  std::optional<std::size_t> select_pair(int bound) const {
    std::optional<std::size_t> best;
    for (std::size_t n = 0; n < pairs_.size(); ++n) {
      const auto& p = pairs_[n];
      if (p.sugar > bound) continue;
      if (!best) {
        best = n;
        continue;
      }
      const auto& b = pairs_[*best];
      if (p.sugar != b.sugar) {
        if (p.sugar < b.sugar) best = n;
        continue;
      }
      auto c = ring_->compare(p.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::pair(p.i, p.j) < std::pair(b.i, b.j))) best = n;
    }
    return best;
  }

  // Gebauer-Moeller installation of a new basis element.
  void insert(Polynomial<F> h, int sugar) {
    if (h.is_constant()) {
      unit_ = true;
      basis_.clear();
      active_.clear();
      pairs_.clear();
      basis_.push_back({std::move(h), 0});
      active_.push_back(0);
      return;
    }
    const std::size_t k = basis_.size();
    const Monomial lh = h.leading_monomial();
    basis_.push_back({std::move(h), sugar});

    struct Candidate {
      std::size_t i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> cands;
    for (auto i : active_) {
      const auto& li = basis_[i].poly.leading_monomial();
      cands.push_back({i, ring_->lcm(li, lh), (li.support() & lh.support()) == 0});
    }
    std::vector<Candidate> kept;
    for (std::size_t n = 0; n < cands.size(); ++n) {
      const auto& p = cands[n];
      bool keep = p.coprime;
      if (!keep) {
        keep = true;
        for (std::size_t m = n + 1; m < cands.size() && keep; ++m)
          if (cands[m].lcm.divides(p.lcm)) keep = false;
        for (std::size_t m = 0; m < kept.size() && keep; ++m)
          if (kept[m].lcm.divides(p.lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }

    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const auto& li = basis_[p.i].poly.leading_monomial();
      const auto& lj = basis_[p.j].poly.leading_monomial();
      return !(ring_->lcm(li, lh) == p.lcm) && !(ring_->lcm(lj, lh) == p.lcm);
    });

    for (const auto& c : kept) {
      if (c.coprime) continue;
      const auto& gi = basis_[c.i];
      int s = std::max(gi.sugar + c.lcm.degree() - gi.poly.leading_monomial().degree(),
                       sugar + c.lcm.degree() - lh.degree());
      pairs_.push_back({c.i, k, c.lcm, s});
    }

    std::erase_if(active_, [&](std::size_t i) { return lh.divides(basis_[i].poly.leading_monomial()); });
    active_.push_back(k);
  }

  RingPtr<F> ring_;
  std::vector<Element> basis_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  bool unit_ = false;
  Stats stats_;
};

/// Reduced Gröbner basis of the ideal generated by `gens` under `order`.
template <CoefficientField F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, const RingPtr<F>& base_ring, OrderKind order) {
  auto ring = base_ring->order() == order ? base_ring : base_ring->with_order(order);
  GroebnerEngine<F> engine(ring);
  std::vector<Polynomial<F>> sorted;
  for (const auto& g : gens) {
    if (!same_variables(*g.ring(), *ring)) throw RingMismatch();
    if (!g.is_zero()) sorted.push_back(change_order(g, ring));
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial<F>& a, const Polynomial<F>& b) { return a.max_degree() < b.max_degree(); });
  for (const auto& g : sorted) engine.add_generator(g);
  engine.complete();
  return GroebnerBasis<F>(ring, engine.reduced_basis());
}

template <CoefficientField F>
GroebnerBasis<F> buchberger(std::span<const Polynomial<F>> gens, OrderKind order) {
  if (gens.empty()) throw Error("buchberger needs the ring: pass it explicitly for an empty list");
  return buchberger<F>(gens, gens.front().ring(), order);
}

// ---------------------------------------------------------------------------
// Representation-tracking variant. Every basis element carries its
// expression in terms of the input generators, so division by the basis
// yields cofactors with respect to the original generators.

template <CoefficientField F>
struct TrackedBasis {
  RingPtr<F> ring;
  std::size_t generator_count = 0;
  std::vector<Polynomial<F>> elements;
  std::vector<std::vector<Polynomial<F>>> cofactors;  // elements[k] = sum cofactors[k][i] * gen_i
};

/// f = sum cofactors[i] * gen_i + remainder.
template <CoefficientField F>
struct TrackedDivision {
  Polynomial<F> remainder;
  std::vector<Polynomial<F>> cofactors;
};

namespace detail {

template <CoefficientField F>
struct TrackedReduction {
  Polynomial<F> remainder;
  std::vector<TermList<F>> quotients;  // per basis element
};

template <CoefficientField F>
TrackedReduction<F> tracked_reduce(const Polynomial<F>& f, const std::vector<Polynomial<F>>& basis) {
  const auto& ring = f.ring();
  const F& k = ring->field();
  Reducer<F> r(ring);
  for (const auto& b : basis) r.push(&b);
  TrackedReduction<F> out{Polynomial<F>(ring), std::vector<TermList<F>>(basis.size())};
  Geobucket<F> acc(*ring);
  acc.add(f.terms());
  TermList<F> rem;
  std::size_t idx = 0;
  while (auto t = acc.pop_leading()) {
    if (const auto* d = r.find(t->mono, &idx)) {
      auto q = t->mono / d->leading_monomial();
      auto c = k.mul(t->coeff, k.inv(d->leading_coeff()));
      out.quotients[idx].push_back({q, c});
      acc.add(d->times_term(q, k.neg(c), 1));
    } else {
      rem.push_back(std::move(*t));
    }
  }
  out.remainder = Polynomial<F>::from_sorted(ring, std::move(rem));
  return out;
}

}  // namespace detail

template <CoefficientField F>
TrackedBasis<F> tracked_groebner(std::span<const Polynomial<F>> gens) {
  if (gens.empty()) throw Error("tracked_groebner needs at least one generator");
  TrackedBasis<F> tb;
  tb.ring = gens.front().ring();
  tb.generator_count = gens.size();
  const F& k = tb.ring->field();
  auto unit_vector = [&](std::size_t i) {
    std::vector<Polynomial<F>> v(gens.size(), Polynomial<F>(tb.ring));
    v[i] = Polynomial<F>::constant(tb.ring, k.one());
    return v;
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto add = [&](Polynomial<F> p, std::vector<Polynomial<F>> cof) {
    std::size_t n = tb.elements.size();
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, n);
    tb.elements.push_back(std::move(p));
    tb.cofactors.push_back(std::move(cof));
  };
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!same_ring(gens[i].ring(), tb.ring)) throw RingMismatch();
    if (!gens[i].is_zero()) add(gens[i], unit_vector(i));
  }
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const auto& a, const auto& b) {
      auto la = tb.ring->lcm(tb.elements[a.first].leading_monomial(), tb.elements[a.second].leading_monomial());
      auto lb = tb.ring->lcm(tb.elements[b.first].leading_monomial(), tb.elements[b.second].leading_monomial());
      return tb.ring->compare(la, lb) < 0;
    });
    auto [i, j] = *best;
    pairs.erase(best);
    const auto& gi = tb.elements[i];
    const auto& gj = tb.elements[j];
    if ((gi.leading_monomial().support() & gj.leading_monomial().support()) == 0) continue;
    auto l = tb.ring->lcm(gi.leading_monomial(), gj.leading_monomial());
    auto mi = l / gi.leading_monomial();
    auto mj = l / gj.leading_monomial();
    auto ci = k.inv(gi.leading_coeff());
    auto cj = k.neg(k.inv(gj.leading_coeff()));
    auto s = gi.mul_term(mi, ci) + gj.mul_term(mj, cj);
    std::vector<Polynomial<F>> cof(gens.size(), Polynomial<F>(tb.ring));
    for (std::size_t g = 0; g < gens.size(); ++g)
      cof[g] = tb.cofactors[i][g].mul_term(mi, ci) + tb.cofactors[j][g].mul_term(mj, cj);
    auto red = detail::tracked_reduce(s, tb.elements);
    if (red.remainder.is_zero()) continue;
    for (std::size_t e = 0; e < red.quotients.size(); ++e) {
      if (red.quotients[e].empty()) continue;
      auto q = Polynomial<F>::from_sorted(tb.ring, std::move(red.quotients[e]));
      for (std::size_t g = 0; g < gens.size(); ++g) cof[g] -= q * tb.cofactors[e][g];
    }
    add(std::move(red.remainder), std::move(cof));
  }
  return tb;
}

template <CoefficientField F>
TrackedDivision<F> tracked_divide(const Polynomial<F>& f, const TrackedBasis<F>& tb) {
  if (!same_ring(f.ring(), tb.ring)) throw RingMismatch();
  auto red = detail::tracked_reduce(f, tb.elements);
  TrackedDivision<F> out{red.remainder, std::vector<Polynomial<F>>(tb.generator_count, Polynomial<F>(tb.ring))};
  for (std::size_t e = 0; e < red.quotients.size(); ++e) {
    if (red.quotients[e].empty()) continue;
    auto q = Polynomial<F>::from_sorted(tb.ring, std::move(red.quotients[e]));
    for (std::size_t g = 0; g < tb.generator_count; ++g) out.cofactors[g] += q * tb.cofactors[e][g];
  }
  return out;
}

}  // namespace unproj
