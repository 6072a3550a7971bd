#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "unproj/groebner.hpp"
#include "unproj/monomial_ideal.hpp"

namespace unproj {

/// Ideal given by generators. Zero generators are dropped on construction.
/// Reduced Gröbner bases are computed on demand and cached per order; the
/// cache is shared between copies and written at most once per order.
template <CoefficientField F>
class Ideal {
 public:
  explicit Ideal(RingPtr<F> ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

  Ideal(RingPtr<F> ring, std::vector<Polynomial<F>> gens) : Ideal(std::move(ring)) {
    for (auto& g : gens) {
      if (!same_variables(*g.ring(), *ring_)) throw RingMismatch("generator outside the ideal's ring");
      if (!g.is_zero()) gens_.push_back(change_order(g, ring_));
    }
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Polynomial<F>>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial<F>& g) { return g.is_homogeneous(); });
  }

  const GroebnerBasis<F>& groebner_basis(std::optional<OrderKind> order = std::nullopt) const {
    OrderKind o = order.value_or(ring_->order());
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(o);
    if (it == cache_->bases.end())
      it = cache_->bases.emplace(o, std::make_shared<const GroebnerBasis<F>>(buchberger<F>(gens_, ring_, o))).first;
    return *it->second;
  }

  bool contains(const Polynomial<F>& f, std::optional<OrderKind> order = std::nullopt) const {
    return groebner_basis(order).contains(f);
  }
  bool contains(const Ideal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial<F>& g) { return contains(g); });
  }
  bool is_unit() const { return groebner_basis().is_unit(); }

  friend Ideal operator+(const Ideal& a, const Ideal& b) {
    if (!same_variables(*a.ring_, *b.ring_)) throw RingMismatch();
    auto gens = a.gens_;
    for (const auto& g : b.gens_) gens.push_back(change_order(g, a.ring_));
    return Ideal(a.ring_, std::move(gens));
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<OrderKind, std::shared_ptr<const GroebnerBasis<F>>> bases;
  };

  RingPtr<F> ring_;
  std::vector<Polynomial<F>> gens_;
  std::shared_ptr<Cache> cache_;
};

template <CoefficientField F>
bool ideal_member(const Polynomial<F>& f, const Ideal<F>& ideal, std::optional<OrderKind> order = std::nullopt) {
  return ideal.contains(f, order);
}

/// Krull dimension of R/I, read off the initial ideal.
template <CoefficientField F>
int dimension(const Ideal<F>& ideal, std::optional<OrderKind> order = std::nullopt) {
  const auto& gb = ideal.groebner_basis(order);
  if (gb.is_unit()) throw UnitIdealError();
  return monomial_ideal_dimension(gb.leading_monomials(), ideal.ring()->size());
}

template <CoefficientField F>
int codimension(const Ideal<F>& ideal, std::optional<OrderKind> order = std::nullopt) {
  return static_cast<int>(ideal.ring()->size()) - dimension(ideal, order);
}

template <CoefficientField F>
HilbertSeries hilbert_series(const Ideal<F>& ideal, std::optional<OrderKind> order = std::nullopt) {
  if (!ideal.is_homogeneous()) throw NonHomogeneousError("hilbert_series needs a homogeneous ideal");
  const auto& gb = ideal.groebner_basis(order);
  if (gb.is_unit()) throw UnitIdealError();
  auto w = ideal.ring()->weights();
  return HilbertSeries{hilbert_numerator(gb.leading_monomials(), w), std::vector<int>(w.begin(), w.end())};
}

/// A subset of the generators that still generates and from which nothing
/// can be dropped. Generators are visited by ascending degree; each one is
/// kept iff it is not in the ideal of those already kept, which only needs a
/// Gröbner basis truncated at its own degree.
template <CoefficientField F>
std::vector<Polynomial<F>> minimal_generators(const Ideal<F>& ideal) {
  if (!ideal.is_homogeneous()) throw NonHomogeneousError("minimal_generators needs homogeneous generators");
  std::vector<Polynomial<F>> gens = ideal.generators();
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial<F>& a, const Polynomial<F>& b) {
    return a.max_degree() < b.max_degree();
  });
  GroebnerEngine<F> engine(ideal.ring());
  std::vector<Polynomial<F>> kept;
  for (const auto& g : gens) {
    engine.complete(g.max_degree());
    if (engine.reduce(g).is_zero()) continue;
    kept.push_back(g);
    engine.add_generator(g);
  }
  return kept;
}

/// True iff the ideal generated by `fs` has codimension |fs|.
template <CoefficientField F>
bool is_regular_sequence(std::span<const Polynomial<F>> fs) {
  if (fs.empty()) return true;
  for (const auto& f : fs) {
    if (f.is_zero()) return false;
    if (!f.is_homogeneous()) throw NonHomogeneousError("is_regular_sequence needs homogeneous elements");
  }
  Ideal<F> ideal(fs.front().ring(), std::vector<Polynomial<F>>(fs.begin(), fs.end()));
  if (ideal.is_unit()) return false;
  return codimension(ideal) == static_cast<int>(fs.size());
}

}  // namespace unproj
