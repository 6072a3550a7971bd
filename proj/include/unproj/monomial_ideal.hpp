#pragma once

// Combinatorics of monomial ideals: minimalisation, the Hilbert numerator
// by pivot splitting, and Krull dimension via a minimum variable cover.

#include <algorithm>
#include <bit>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "unproj/hilbert.hpp"
#include "unproj/ring.hpp"

namespace unproj {

/// Drops duplicates and generators divisible by another one; sorted by
/// (degree, key) so the result is canonical.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return key_less(a, b);
  });
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& o) { return o.divides(m); });
    if (!redundant) out.push_back(m);
  }
  return out;
}

namespace detail {

class HilbertNumerator {
 public:
  explicit HilbertNumerator(std::span<const int> weights) : weights_(weights.begin(), weights.end()) {}

  IntPoly operator()(std::vector<Monomial> gens) { return compute(minimalize(std::move(gens))); }

 private:
  IntPoly compute(const std::vector<Monomial>& gens) {
    if (gens.empty()) return IntPoly::one();
    if (gens.size() == 1) return IntPoly::one_minus(gens[0].degree());
    if (gens[0].is_one()) return {};

    // pairwise coprime generators form a regular sequence
    std::uint32_t seen = 0;
    bool coprime = true;
    for (const auto& g : gens) {
      if (seen & g.support()) {
        coprime = false;
        break;
      }
      seen |= g.support();
    }
    if (coprime) {
      IntPoly r = IntPoly::one();
      for (const auto& g : gens) r = r * IntPoly::one_minus(g.degree());
      return r;
    }

    std::string key = make_key(gens);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Pivot on the variable occurring in most mixed (non-pure-power)
    // generators, at the median of its exponents there. A pure power can
    // then never be the pivot itself, so both branches are strictly larger.
    std::size_t n = weights_.size();
    auto mixed = [](const Monomial& g) { return std::popcount(g.support()) > 1; };
    std::size_t best = 0;
    int best_count = -1;
    for (std::size_t v = 0; v < n; ++v) {
      int c = 0;
      for (const auto& g : gens) c += mixed(g) && g[v] > 0;
      if (c > best_count) {
        best_count = c;
        best = v;
      }
    }
    std::vector<int> exps;
    for (const auto& g : gens)
      if (mixed(g) && g[best] > 0) exps.push_back(g[best]);
    std::sort(exps.begin(), exps.end());
    int e = exps[exps.size() / 2];
    Monomial pivot = Monomial::variable(best, weights_[best], e);

    std::vector<Monomial> sum = gens;
    sum.push_back(pivot);
    std::vector<Monomial> quotient;
    for (const auto& g : gens) quotient.push_back(Monomial::colon(g, pivot, weights_));

    IntPoly r = compute(minimalize(std::move(sum))) + compute(minimalize(std::move(quotient))).shifted(pivot.degree());
    memo_.emplace(std::move(key), r);
    return r;
  }

  std::string make_key(const std::vector<Monomial>& gens) const {
    std::string k;
    k.reserve(gens.size() * weights_.size());
    for (const auto& g : gens)
      for (std::size_t v = 0; v < weights_.size(); ++v) k.push_back(static_cast<char>(g[v]));
    return k;
  }

  std::vector<int> weights_;
  std::map<std::string, IntPoly> memo_;
};

// Branch and bound for the smallest variable set meeting every support.
inline void min_cover(const std::vector<std::uint32_t>& supports, std::uint32_t chosen, int size, int& best) {
  if (size >= best) return;
  const std::uint32_t* open = nullptr;
  int open_bits = 64;
  for (const auto& s : supports) {
    if (s & chosen) continue;
    int b = std::popcount(s);
    if (b < open_bits) {
      open_bits = b;
      open = &s;
    }
  }
  if (!open) {
    best = size;
    return;
  }
  if (size + 1 >= best) return;
  for (std::uint32_t rest = *open; rest != 0; rest &= rest - 1)
    min_cover(supports, chosen | (rest & -rest), size + 1, best);
}

}  // namespace detail

/// Numerator N with HS(k[x]/L) = N / prod (1 - t^{w_i}).
inline IntPoly hilbert_numerator(std::vector<Monomial> gens, std::span<const int> weights) {
  return detail::HilbertNumerator(weights)(std::move(gens));
}

/// Minimum number of variables meeting the support of every generator.
inline int minimum_support_cover(const std::vector<Monomial>& gens) {
  std::vector<std::uint32_t> supports;
  for (const auto& g : gens) supports.push_back(g.support());
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  if (std::find(supports.begin(), supports.end(), 0u) != supports.end()) throw UnitIdealError();
  int best = 33;
  detail::min_cover(supports, 0, 0, best);
  return best;
}

/// Krull dimension of k[x_1..x_n]/L.
inline int monomial_ideal_dimension(const std::vector<Monomial>& gens, std::size_t nvars) {
  return static_cast<int>(nvars) - minimum_support_cover(gens);
}

}  // namespace unproj
