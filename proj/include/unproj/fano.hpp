#pragma once

// The three codimension 6 Fano 3-fold families 29376, 9176 and 24198:
// reference data, seeded construction of Q = psi(I_un) and its checks.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unproj/hilbert.hpp"
#include "unproj/ideal.hpp"
#include "unproj/unprojection.hpp"

namespace unproj {

/// Graded Betti numbers: modules[i] lists (twist, multiplicity) for C_i.
struct BettiTable {
  std::vector<std::vector<std::pair<int, int>>> modules;

  int length() const { return static_cast<int>(modules.size()) - 1; }

  int top_twist() const {
    if (modules.empty() || modules.back().size() != 1) throw Error("last module must be a single twist");
    return modules.back().front().first;
  }

  /// sum_i (-1)^i sum m t^twist
  IntPoly alternating_sum() const {
    IntPoly s;
    for (std::size_t i = 0; i < modules.size(); ++i)
      for (auto [twist, mult] : modules[i]) s += IntPoly::monomial(i % 2 ? -mult : mult, twist);
    return s;
  }

  bool well_formed() const {
    if (modules.size() < 2 || modules.front() != std::vector<std::pair<int, int>>{{0, 1}}) return false;
    if (modules.back().size() != 1) return false;
    for (const auto& m : modules)
      for (auto [twist, mult] : m)
        if (mult <= 0 || twist < 0) return false;
    return true;
  }

  /// C_i has twist tau with multiplicity m iff C_{n-i} has top - tau with m.
  bool is_self_dual() const {
    if (!well_formed()) return false;
    int top = top_twist();
    std::size_t n = modules.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) {
      auto mirrored = modules[n - i];
      for (auto& [twist, mult] : mirrored) twist = top - twist;
      auto a = modules[i];
      std::sort(a.begin(), a.end());
      std::sort(mirrored.begin(), mirrored.end());
      if (a != mirrored) return false;
    }
    return true;
  }
};

/// A general form of `degree` in `variables` substituted for `target`.
struct FormSpec {
  std::string target;
  int degree = 0;
  std::vector<std::string> variables;  ///< enumeration order of the monomials
};

/// A singular stratum of the ambient weighted projective space: the
/// coordinate subspace of `variables`, all of one weight.
struct StratumSpec {
  std::string name;
  std::vector<std::string> variables;
  std::optional<bool> contains_point;  ///< for single coordinate points
  std::optional<std::int64_t> degree;  ///< for larger strata: expected number of points
};

struct FanoFamilySpec {
  int id = 0;
  WeightMap source_weights;           ///< x's, kept c's and T's of the specialized ring
  std::vector<std::string> kept_c;    ///< c's that stay variables
  std::vector<Variable> ambient;      ///< the ring A, in order
  std::vector<FormSpec> forms;        ///< f1 then f2
  int parameter_count = 0;
  IntPoly numerator;
  std::vector<int> denominator_weights;
  std::vector<StratumSpec> strata;
  std::int64_t singular_points = 0;   ///< total over all strata
  std::array<int, 2> ci_degrees{};
  int ci_twist = 0;
  BettiTable betti;

  int ambient_weight_sum() const {
    int s = 0;
    for (const auto& v : ambient) s += v.weight;
    return s;
  }
};

namespace detail {

inline IntPoly poly(std::initializer_list<std::pair<std::int64_t, int>> terms) { return IntPoly::from_terms(terms); }

inline std::vector<Variable> vars(std::initializer_list<std::pair<const char*, int>> list) {
  std::vector<Variable> out;
  for (auto [n, w] : list) out.push_back({n, w});
  return out;
}

inline std::vector<FanoFamilySpec> make_family_specs() {
  std::vector<FanoFamilySpec> specs;

  FanoFamilySpec a;
  a.id = 29376;
  a.source_weights = {{"x1", 1}, {"x2", 2}, {"x3", 1}, {"x4", 2}, {"x5", 1}, {"x6", 2},
                      {"T1", 3}, {"T2", 1}, {"T3", 1}, {"T4", 1}};
  a.ambient = vars({{"w1", 1}, {"w2", 1}, {"T2", 1}, {"T3", 1}, {"T4", 1}, {"x1", 1}, {"x3", 1}, {"x5", 1},
                    {"x6", 2}, {"T1", 3}});
  std::vector<std::string> seq_a{"x1", "x3", "x5", "T2", "T3", "T4", "w1", "w2", "x6"};
  a.forms = {{"x2", 2, seq_a}, {"x4", 2, seq_a}};
  a.parameter_count = 74;
  a.numerator = poly({{1, 0}, {-6, 2}, {15, 4}, {-20, 6}, {15, 8}, {-6, 10}, {1, 12}});
  a.denominator_weights = {1, 1, 1, 1, 1, 1, 1, 1, 2, 3};
  a.strata = {{"T1", {"T1"}, true, std::nullopt}, {"x6", {"x6"}, false, std::nullopt}};
  a.singular_points = 1;
  a.ci_degrees = {3, 3};
  a.ci_twist = -3;
  a.betti.modules = {{{0, 1}},
                     {{2, 6}, {3, 8}, {4, 6}},
                     {{3, 8}, {4, 24}, {5, 24}, {6, 8}},
                     {{4, 3}, {5, 24}, {6, 36}, {7, 24}, {8, 3}},
                     {{6, 8}, {7, 24}, {8, 24}, {9, 8}},
                     {{8, 6}, {9, 8}, {10, 6}},
                     {{12, 1}}};
  specs.push_back(std::move(a));

  FanoFamilySpec b;
  b.id = 9176;
  b.source_weights = {{"x1", 2}, {"x2", 3}, {"x3", 2}, {"x4", 3}, {"x5", 2}, {"x6", 3},
                      {"T1", 4}, {"T2", 2}, {"T3", 2}, {"T4", 2}};
  b.ambient = vars({{"w1", 1}, {"w2", 1}, {"x1", 2}, {"x5", 2}, {"T2", 2}, {"T3", 2}, {"T4", 2}, {"x2", 3},
                    {"x4", 3}, {"x6", 3}});
  std::vector<std::string> seq_b{"w1", "w2", "x1", "x5", "T2", "T3", "T4", "x2", "x4", "x6"};
  b.forms = {{"x3", 2, seq_b}, {"T1", 4, seq_b}};
  b.parameter_count = 49;
  b.numerator = poly({{1, 0}, {-6, 4}, {-8, 5}, {2, 6}, {24, 7}, {21, 8}, {-16, 9}, {-36, 10}, {-16, 11},
                      {21, 12}, {24, 13}, {2, 14}, {-8, 15}, {-6, 16}, {1, 20}});
  b.denominator_weights = {1, 1, 2, 2, 2, 2, 2, 3, 3, 3};
  b.strata = {{"F1", {"x1", "x5", "T2", "T3", "T4"}, std::nullopt, std::nullopt},
              {"F2", {"x2", "x4", "x6"}, std::nullopt, std::nullopt}};
  b.singular_points = 8;
  b.ci_degrees = {5, 5};
  b.ci_twist = -5;
  b.betti.modules = {{{0, 1}},
                     {{4, 6}, {5, 8}, {6, 6}},
                     {{6, 8}, {7, 24}, {8, 24}, {9, 8}},
                     {{8, 3}, {9, 24}, {10, 36}, {11, 24}, {12, 3}},
                     {{11, 8}, {12, 24}, {13, 24}, {14, 8}},
                     {{14, 6}, {15, 8}, {16, 6}},
                     {{20, 1}}};
  specs.push_back(std::move(b));

  FanoFamilySpec c;
  c.id = 24198;
  c.source_weights = {{"x1", 1}, {"x2", 2}, {"x3", 1}, {"x4", 2}, {"x5", 1}, {"x6", 1}, {"c3", 1},
                      {"c6", 1}, {"T1", 3}, {"T2", 2}, {"T3", 2}, {"T4", 1}};
  c.kept_c = {"c3", "c6"};
  c.ambient = vars({{"x1", 1}, {"x3", 1}, {"x5", 1}, {"x6", 1}, {"c3", 1}, {"c6", 1}, {"x2", 2}, {"x4", 2},
                    {"T3", 2}, {"T1", 3}});
  std::vector<std::string> seq_c{"x1", "x3", "x5", "x6", "c3", "c6", "x2", "x4", "T3"};
  c.forms = {{"T2", 2, seq_c}, {"T4", 1, seq_c}};
  c.parameter_count = 30;
  c.numerator = poly({{1, 0}, {-1, 2}, {-10, 3}, {5, 4}, {24, 5}, {-5, 6}, {-28, 7}, {-5, 8}, {24, 9}, {5, 10},
                      {-10, 11}, {-1, 12}, {1, 14}});
  c.denominator_weights = {1, 1, 1, 1, 1, 1, 2, 2, 2, 3};
  c.strata = {{"F1", {"x2", "x4", "T3"}, std::nullopt, 2}, {"T1", {"T1"}, true, std::nullopt}};
  c.singular_points = 3;
  c.ci_degrees = {3, 3};
  c.ci_twist = -4;
  c.betti.modules = {{{0, 1}},
                     {{2, 1}, {3, 10}, {4, 7}, {5, 2}},
                     {{4, 12}, {5, 28}, {6, 20}, {7, 4}},
                     {{5, 2}, {6, 25}, {7, 36}, {8, 25}, {9, 2}},
                     {{7, 4}, {8, 20}, {9, 28}, {10, 12}},
                     {{9, 2}, {10, 7}, {11, 10}, {12, 1}},
                     {{14, 1}}};
  specs.push_back(std::move(c));
  return specs;
}

}  // namespace detail

inline const std::vector<FanoFamilySpec>& all_family_specs() {
  static const auto specs = detail::make_family_specs();
  return specs;
}

inline const FanoFamilySpec& family_spec(int id) {
  for (const auto& s : all_family_specs())
    if (s.id == id) return s;
  throw Error("unknown family " + std::to_string(id));
}

struct BettiConsistency {
  bool alt_sum_matches = false;
  bool canonical_twist_is_minus_1 = false;
  bool self_dual = false;
  bool ok() const { return alt_sum_matches && canonical_twist_is_minus_1 && self_dual; }
};

/// Pure arithmetic on the reference data; needs no Gröbner computation.
inline BettiConsistency betti_consistency(int id) {
  const auto& s = family_spec(id);
  BettiConsistency r;
  r.alt_sum_matches = s.betti.well_formed() && s.betti.alternating_sum() == s.numerator;
  r.canonical_twist_is_minus_1 = s.betti.well_formed() && s.betti.top_twist() - s.ambient_weight_sum() == -1;
  r.self_dual = s.betti.is_self_dual();
  return r;
}

/// Canonical twist (d1 + d2) - sum(weights) of a codimension 2 complete intersection.
inline int ci_canonical_twist(std::span<const int> weights, std::array<int, 2> degrees) {
  int s = 0;
  for (int w : weights) s += w;
  return degrees[0] + degrees[1] - s;
}

/// The same for an actual pair of generators, which must form a regular sequence.
template <CoefficientField F>
int ci_canonical_twist(const Ideal<F>& ci) {
  const auto& gens = ci.generators();
  if (gens.size() != 2 || !is_regular_sequence<F>(gens)) throw Error("not a regular sequence of length 2");
  return ci_canonical_twist(ci.ring()->weights(), {gens[0].max_degree(), gens[1].max_degree()});
}

/// Seeded nonzero draws: uniform on 1..p-1 for a prime field, +-1..+-9 over QQ.
template <CoefficientField F>
typename F::Element general_value(const F& field, std::mt19937_64& rng) {
  if constexpr (requires { field.characteristic(); }) {
    auto p = static_cast<std::uint64_t>(field.characteristic());
    return field.from_int(static_cast<std::int64_t>(1 + rng() % (p - 1)));
  } else {
    auto v = static_cast<std::int64_t>(1 + rng() % 9);
    return field.from_int(rng() % 2 ? v : -v);
  }
}

template <CoefficientField F>
struct FamilyInstance {
  const FanoFamilySpec* spec = nullptr;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, typename F::Element>> c_values;
  std::vector<typename F::Element> l_values;  ///< l_1, l_2, ...
  SpecializedUnprojection<F> specialized;   ///< I hat and I_un hat
  std::vector<Polynomial<F>> forms;          ///< f1, f2 in the ambient ring
  Ideal<F> Q;

  const RingPtr<F>& ambient() const { return Q.ring(); }
};

/// Generic I_un over `field`, shared by every family built over the same field.
template <CoefficientField F>
UnprojectionIdeal<F> generic_unprojection(F field = F{}) {
  return build_Iun(build_four_intersection<F>({}, std::move(field)));
}

template <CoefficientField F>
FamilyInstance<F> build_family(int id, std::uint64_t seed, const UnprojectionIdeal<F>& generic) {
  const auto& spec = family_spec(id);
  const F& k = generic.ring()->field();
  std::mt19937_64 rng(seed);

  std::vector<std::pair<std::string, typename F::Element>> c_values;
  CoefficientAssignment<F> assignment;
  for (int i = 1; i <= 6; ++i) {
    std::string name = "c" + std::to_string(i);
    if (std::find(spec.kept_c.begin(), spec.kept_c.end(), name) != spec.kept_c.end()) continue;
    auto v = general_value(k, rng);
    assignment.values[static_cast<std::size_t>(i - 1)] = v;
    c_values.emplace_back(name, v);
  }
  auto specialized = specialize(generic, assignment, spec.source_weights);

  auto A = PolynomialRing<F>::make(k, spec.ambient);
  std::vector<typename F::Element> l_values;
  std::vector<Polynomial<F>> forms;
  std::map<std::string, Polynomial<F>> psi_images;
  for (const auto& form : spec.forms) {
    std::vector<std::size_t> idx;
    for (const auto& v : form.variables) idx.push_back(A->require_index(v));
    TermList<F> terms;
    for (const auto& m : monomials_of_degree(*A, form.degree, idx)) {
      auto l = general_value(k, rng);
      l_values.push_back(l);
      terms.push_back({m, l});
    }
    Polynomial<F> f(A, std::move(terms));
    psi_images.emplace(form.target, f);
    forms.push_back(std::move(f));
  }
  if (static_cast<int>(l_values.size()) != spec.parameter_count)
    throw ConstructionError("family " + std::to_string(id) + ": parameter count " + std::to_string(l_values.size()) +
                            " differs from " + std::to_string(spec.parameter_count));
  auto psi = RingMap<F>::by_name(specialized.ring, A, psi_images);
  if (!psi.is_graded()) throw ConstructionError("psi is not graded");
  auto Q = psi(specialized.Iun);
  if (!Q.is_homogeneous()) throw NonHomogeneousError("Q is not homogeneous");
  return {&spec, seed, std::move(c_values), std::move(l_values), std::move(specialized), std::move(forms), std::move(Q)};
}

template <CoefficientField F>
FamilyInstance<F> build_family(int id, std::uint64_t seed, F field = F{}) {
  return build_family(id, seed, generic_unprojection<F>(std::move(field)));
}

struct FamilyReport {
  int codim = 0;
  std::size_t min_gens = 0;
  HilbertSeries hilbert;
  bool hilbert_match = false;
  bool palindromic = false;
};

template <CoefficientField F>
FamilyReport verify_family(const FanoFamilySpec& spec, const Ideal<F>& Q) {
  FamilyReport r;
  r.codim = codimension(Q);
  r.min_gens = minimal_generators(Q).size();
  r.hilbert = hilbert_series(Q);
  r.hilbert_match = r.hilbert == HilbertSeries{spec.numerator, spec.denominator_weights};
  r.palindromic = r.hilbert.numerator.is_palindromic() && r.hilbert.numerator.degree() == spec.numerator.degree();
  return r;
}

template <CoefficientField F>
FamilyReport verify_family(const FamilyInstance<F>& inst) {
  return verify_family(*inst.spec, inst.Q);
}

struct StratumResult {
  std::string name;
  int weight = 0;
  int dimension = -1;        ///< projective dimension of V(Q) on the stratum; -1 if empty
  std::int64_t degree = 0;
  std::optional<bool> contains_point;
  bool pass = true;          ///< agrees with the reference expectation, if any
};

struct StrataReport {
  std::vector<StratumResult> strata;
  std::int64_t total_points = 0;
  bool pass = false;
};

template <CoefficientField F>
StrataReport strata_check(const FanoFamilySpec& spec, const Ideal<F>& Q) {
  const auto& A = Q.ring();
  StrataReport rep;
  bool ok = true;
  for (const auto& st : spec.strata) {
    StratumResult r;
    r.name = st.name;
    std::vector<std::size_t> idx;
    for (const auto& v : st.variables) idx.push_back(A->require_index(v));
    r.weight = A->weight(idx.front());
    for (auto i : idx)
      if (A->weight(i) != r.weight) throw Error("stratum " + st.name + " has mixed weights");

    if (idx.size() == 1) {
      // Q vanishes at the coordinate point iff no generator has a pure power of it
      bool vanishes = true;
      for (const auto& g : Q.generators())
        for (const auto& t : g.terms())
          if (t.mono.support() == (1u << idx[0])) vanishes = false;
      r.contains_point = vanishes;
      r.dimension = vanishes ? 0 : -1;
      r.degree = vanishes ? 1 : 0;
      if (st.contains_point) r.pass = *st.contains_point == vanishes;
    } else {
      std::vector<Variable> sv;
      for (const auto& v : st.variables) sv.push_back({v, 1});
      auto S = PolynomialRing<F>::make(A->field(), std::move(sv));
      auto restrict_map = RingMap<F>::by_name(A, S, {}, true);
      auto restricted = restrict_map(Q);
      if (restricted.size() == 0) {
        r.dimension = static_cast<int>(idx.size()) - 1;
        r.degree = 1;
      } else {
        auto [dim, deg] = hilbert_series(restricted).dimension_and_degree();
        r.dimension = dim - 1;
        r.degree = dim > 0 ? deg : 0;
      }
      if (st.degree) r.pass = r.dimension == 0 && r.degree == *st.degree;
      // strata of a quasismooth Fano 3-fold meet it in isolated points
      if (r.dimension > 0) r.pass = false;
    }
    if (r.dimension == 0) rep.total_points += r.degree;
    ok = ok && r.pass;
    rep.strata.push_back(std::move(r));
  }
  rep.pass = ok && rep.total_points == spec.singular_points;
  return rep;
}

template <CoefficientField F>
StrataReport strata_check(const FamilyInstance<F>& inst) {
  return strata_check(*inst.spec, inst.Q);
}

}  // namespace unproj
