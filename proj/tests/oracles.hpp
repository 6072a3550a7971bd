#pragma once

// Test-side oracles that avoid the Groebner code paths.

#include <algorithm>
#include <map>
#include <random>

#include "test_support.hpp"

namespace unproj::testing {

// Degree-by-degree linear algebra, independent of any Gröbner machinery:
// I_d is spanned by m * g over all generators g and monomials m of
// complementary degree.
template <CoefficientField F>
class DegreeSpan {
 public:
  DegreeSpan(const Ideal<F>& ideal, int d) : ring_(ideal.ring()), basis_(monomials_of_degree(*ring_, d)) {
    for (const auto& g : ideal.generators()) {
      int e = d - g.max_degree();
      if (e < 0) continue;
      for (const auto& m : monomials_of_degree(*ring_, e)) insert(vec(g.mul_term(m, ring_->field().one())));
    }
  }

  std::size_t rank() const { return rows_.size(); }
  std::size_t monomial_count() const { return basis_.size(); }
  bool contains(const Polynomial<F>& f) const { return reduce(vec(f)).empty(); }

 private:
  using Row = std::map<std::size_t, typename F::Element>;  // column -> coeff

  Row vec(const Polynomial<F>& f) const {
    Row r;
    for (const auto& t : f.terms()) {
      auto it = std::find(basis_.begin(), basis_.end(), t.mono);
      if (it == basis_.end()) throw Error("term outside the degree");
      r[static_cast<std::size_t>(it - basis_.begin())] = t.coeff;
    }
    return r;
  }

  Row reduce(Row r) const {
    const F& k = ring_->field();
    for (const auto& [pivot, row] : rows_) {
      auto it = r.find(pivot);
      if (it == r.end()) continue;
      auto c = it->second;
      for (const auto& [col, v] : row) {
        auto nv = k.sub(r[col], k.mul(c, v));
        if (k.is_zero(nv))
          r.erase(col);
        else
          r[col] = nv;
      }
    }
    return r;
  }

  void insert(Row r) {
    r = reduce(std::move(r));
    if (r.empty()) return;
    const F& k = ring_->field();
    auto [pivot, lead] = *r.begin();
    auto inv = k.inv(lead);
    for (auto& [col, v] : r) v = k.mul(v, inv);
    // keep rows fully reduced against the new pivot
    for (auto& [p, row] : rows_) {
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      auto c = it->second;
      for (const auto& [col, v] : r) {
        auto nv = k.sub(row[col], k.mul(c, v));
        if (k.is_zero(nv))
          row.erase(col);
        else
          row[col] = nv;
      }
    }
    rows_.emplace(pivot, std::move(r));
  }

  RingPtr<F> ring_;
  std::vector<Monomial> basis_;
  std::map<std::size_t, Row> rows_;
};

template <CoefficientField F>
Ideal<F> random_homogeneous_ideal(const RingPtr<F>& r, std::mt19937_64& rng, int max_gens, int max_deg) {
  std::vector<Polynomial<F>> gens;
  int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_gens));
  for (int i = 0; i < n; ++i) {
    auto g = random_homogeneous(r, rng, 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_deg)));
    if (!g.is_zero()) gens.push_back(g);
  }
  return Ideal<F>(r, gens);
}

}  // namespace unproj::testing
