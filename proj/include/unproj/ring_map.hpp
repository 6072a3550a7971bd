#pragma once

#include <map>
#include <string>
#include <vector>

#include "unproj/ideal.hpp"

namespace unproj {

/// k-algebra homomorphism given by one image per source variable.
template <CoefficientField F>
class RingMap {
 public:
  RingMap(RingPtr<F> source, RingPtr<F> target, std::vector<Polynomial<F>> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_->size()) throw Error("ring map needs one image per source variable");
    if (!(source_->field() == target_->field())) throw RingMismatch("ring map between different fields");
    for (const auto& im : images_)
      if (!same_ring(im.ring(), target_)) throw RingMismatch("ring map image outside the target ring");
  }

  /// Images by name: listed variables map as given, every other source
  /// variable maps to the target variable of the same name (or to zero if
  /// the target has none and `missing_to_zero` is set).
  static RingMap by_name(RingPtr<F> source, RingPtr<F> target,
                         const std::map<std::string, Polynomial<F>>& images, bool missing_to_zero = false) {
    std::vector<Polynomial<F>> ims;
    for (std::size_t i = 0; i < source->size(); ++i) {
      const auto& name = source->name(i);
      if (auto it = images.find(name); it != images.end()) {
        ims.push_back(change_order(it->second, target));
      } else if (auto j = target->index_of(name)) {
        ims.push_back(Polynomial<F>::variable(target, *j));
      } else if (missing_to_zero) {
        ims.push_back(Polynomial<F>(target));
      } else {
        throw Error("no image given for variable '" + name + "'");
      }
    }
    return RingMap(std::move(source), std::move(target), std::move(ims));
  }

  static RingMap identity(RingPtr<F> ring) { return by_name(ring, ring, {}); }

  const RingPtr<F>& source() const { return source_; }
  const RingPtr<F>& target() const { return target_; }
  const std::vector<Polynomial<F>>& images() const { return images_; }

  /// True iff every image is homogeneous of its source variable's weight.
  bool is_graded() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      auto d = images_[i].weighted_degree();
      if (d.kind == WeightedDegree::Kind::NonHomogeneous) return false;
      if (d.kind == WeightedDegree::Kind::Homogeneous && d.degree != source_->weight(i)) return false;
    }
    return true;
  }

  Polynomial<F> operator()(const Polynomial<F>& f) const {
    if (!same_variables(*f.ring(), *source_)) throw RingMismatch("polynomial outside the map's source");
    const F& k = source_->field();
    // powers[i][e] = image_i^e, filled lazily
    std::vector<std::vector<Polynomial<F>>> powers(images_.size());
    auto power = [&](std::size_t i, int e) -> const Polynomial<F>& {
      auto& ps = powers[i];
      if (ps.empty()) ps.push_back(Polynomial<F>::constant(target_, k.one()));
      while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * images_[i]);
      return ps[static_cast<std::size_t>(e)];
    };
    Polynomial<F> result(target_);
    std::vector<Polynomial<F>> parts;
    for (const auto& t : f.terms()) {
      Polynomial<F> p = Polynomial<F>::constant(target_, t.coeff);
      for (std::size_t i = 0; i < images_.size() && !p.is_zero(); ++i)
        if (t.mono[i] != 0) p *= power(i, t.mono[i]);
      parts.push_back(std::move(p));
    }
    // pairwise summation keeps the merges balanced
    while (parts.size() > 1) {
      std::vector<Polynomial<F>> next;
      for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
      if (parts.size() % 2) next.push_back(std::move(parts.back()));
      parts = std::move(next);
    }
    return parts.empty() ? result : parts.front();
  }

  Ideal<F> operator()(const Ideal<F>& ideal) const {
    std::vector<Polynomial<F>> gens;
    for (const auto& g : ideal.generators()) gens.push_back((*this)(g));
    return Ideal<F>(target_, std::move(gens));
  }

 private:
  RingPtr<F> source_;
  RingPtr<F> target_;
  std::vector<Polynomial<F>> images_;
};

template <CoefficientField F>
Polynomial<F> apply_ring_map(const RingMap<F>& m, const Polynomial<F>& f) {
  return m(f);
}

template <CoefficientField F>
Ideal<F> apply_ring_map(const RingMap<F>& m, const Ideal<F>& ideal) {
  return m(ideal);
}

}  // namespace unproj
