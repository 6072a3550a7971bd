#pragma once

// The 4-intersection format: a codimension 2 complete intersection I = (f, g)
// inside four codimension 3 ideals J_1..J_4, the maps phi_t : J_t/I -> R/I,
// the multipliers A_st and the codimension 6 ideal I_un.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unproj/ideal.hpp"
#include "unproj/ring_map.hpp"
#include "unproj/text.hpp"

namespace unproj {

using WeightMap = std::map<std::string, int>;

enum class SignConvention {
  Alternating,  ///< images (h1, -h2, h3)
  Uniform,      ///< images (h1, h2, h3)
};

template <CoefficientField F>
using Matrix2x3 = std::array<std::array<Polynomial<F>, 3>, 2>;

/// h_i = det of the matrix with column i removed, returned with the signs
/// of `conv`.
template <CoefficientField F>
std::array<Polynomial<F>, 3> km_phi_minors(const Matrix2x3<F>& m,
                                           SignConvention conv = SignConvention::Alternating) {
  auto minor = [&](int j, int k) { return m[0][j] * m[1][k] - m[0][k] * m[1][j]; };
  auto h2 = minor(0, 2);
  return {minor(1, 2), conv == SignConvention::Alternating ? -h2 : h2, minor(0, 1)};
}

namespace detail {

inline const std::array<std::array<const char*, 3>, 4> kJGenerators{{
    {"x1", "x3", "x5"},
    {"x1", "x4", "x6"},
    {"x2", "x3", "x6"},
    {"x2", "x4", "x5"},
}};

inline const char* partner(std::string_view x) {
  static const std::map<std::string_view, const char*> p{{"x1", "x2"}, {"x2", "x1"}, {"x3", "x4"},
                                                         {"x4", "x3"}, {"x5", "x6"}, {"x6", "x5"}};
  return p.at(x);
}

inline void check_index(int t) {
  if (t < 1 || t > 4) throw Error("index " + std::to_string(t) + " outside 1..4");
}

template <CoefficientField F>
RingPtr<F> append_variables(const RingPtr<F>& ring, const std::vector<Variable>& extra) {
  auto vars = ring->variables();
  vars.insert(vars.end(), extra.begin(), extra.end());
  return PolynomialRing<F>::make(ring->field(), std::move(vars), ring->order());
}

}  // namespace detail

template <CoefficientField F>
struct PhiMap {
  int t = 0;
  std::array<std::string, 3> generators;  ///< variables generating J_t
  Matrix2x3<F> relations;                 ///< f = sum row0_i * gen_i, g = sum row1_i * gen_i
  std::array<Polynomial<F>, 3> images;
  std::optional<int> degree_shift;  ///< unset when every image is zero

  const Polynomial<F>& image_of(std::string_view var) const {
    for (std::size_t i = 0; i < 3; ++i)
      if (generators[i] == var) return images[i];
    throw Error("'" + std::string(var) + "' does not generate J_" + std::to_string(t));
  }
};

template <CoefficientField F>
struct FourIntersectionData {
  RingPtr<F> ring;
  std::vector<Polynomial<F>> c;  ///< c_1..c_6 as ring elements (variables or constants)
  Polynomial<F> f, g;
  Ideal<F> I;
  std::vector<Ideal<F>> J;  ///< J_1..J_4 at positions 0..3
  std::vector<PhiMap<F>> phi;
  SignConvention convention = SignConvention::Alternating;

  const Ideal<F>& Jt(int t) const { return detail::check_index(t), J[static_cast<std::size_t>(t - 1)]; }
  const PhiMap<F>& phit(int t) const { return detail::check_index(t), phi[static_cast<std::size_t>(t - 1)]; }
};

/// Builds f, g, I, J_t and phi_t over `ring`, which must contain x1..x6;
/// `c` holds the six coefficients as elements of `ring`.
template <CoefficientField F>
FourIntersectionData<F> build_four_intersection(const RingPtr<F>& ring, std::vector<Polynomial<F>> c,
                                                SignConvention conv = SignConvention::Alternating) {
  if (c.size() != 6) throw Error("six coefficients c1..c6 are required");
  auto x = [&](std::string_view name) { return Polynomial<F>::variable(ring, name); };
  auto f = c[0] * x("x1") * x("x2") + c[1] * x("x3") * x("x4") + c[2] * x("x5") * x("x6");
  auto g = c[3] * x("x1") * x("x2") + c[4] * x("x3") * x("x4") + c[5] * x("x5") * x("x6");
  for (const auto* p : {&f, &g})
    if (p->weighted_degree().kind == WeightedDegree::Kind::NonHomogeneous)
      throw NonHomogeneousError("f and g are not homogeneous under the given weights");

  Ideal<F> I(ring, {f, g});
  std::vector<Ideal<F>> J;
  std::vector<PhiMap<F>> phi;
  for (int t = 1; t <= 4; ++t) {
    const auto& gens = detail::kJGenerators[static_cast<std::size_t>(t - 1)];
    std::vector<Polynomial<F>> jg;
    std::vector<Polynomial<F>> rows[2];
    // generator i of every J_t comes from the i-th monomial pair of f and g
    for (std::size_t i = 0; i < 3; ++i) {
      jg.push_back(x(gens[i]));
      auto other = x(detail::partner(gens[i]));
      rows[0].push_back(c[i] * other);
      rows[1].push_back(c[i + 3] * other);
    }
    Matrix2x3<F> rel{{{rows[0][0], rows[0][1], rows[0][2]}, {rows[1][0], rows[1][1], rows[1][2]}}};
    PhiMap<F> m{t, {gens[0], gens[1], gens[2]}, rel, km_phi_minors(rel, conv), std::nullopt};
    for (std::size_t i = 0; i < 3; ++i) {
      auto d = m.images[i].weighted_degree();
      if (d.kind == WeightedDegree::Kind::Zero) continue;
      if (d.kind == WeightedDegree::Kind::NonHomogeneous)
        throw ConstructionError("phi_" + std::to_string(t) + " has a non-homogeneous image");
      int shift = d.degree - ring->weight(ring->require_index(gens[i]));
      if (m.degree_shift && *m.degree_shift != shift)
        throw ConstructionError("phi_" + std::to_string(t) + " has no uniform degree");
      m.degree_shift = shift;
    }
    Ideal<F> Jt(ring, std::move(jg));
    if (!Jt.contains(I)) throw ConstructionError("I is not contained in J_" + std::to_string(t));
    J.push_back(std::move(Jt));
    phi.push_back(std::move(m));
  }
  return {ring, std::move(c), std::move(f), std::move(g), std::move(I), std::move(J), std::move(phi), conv};
}

/// Generic data over k[c1..c6, x1..x6]; unlisted variables get weight 1.
template <CoefficientField F>
FourIntersectionData<F> build_four_intersection(const WeightMap& weights = {}, F field = F{},
                                                SignConvention conv = SignConvention::Alternating) {
  std::vector<Variable> vars;
  for (const char* prefix : {"c", "x"})
    for (int i = 1; i <= 6; ++i) {
      std::string name = prefix + std::to_string(i);
      auto it = weights.find(name);
      vars.push_back({name, it == weights.end() ? 1 : it->second});
    }
  for (const auto& [name, w] : weights)
    if (std::none_of(vars.begin(), vars.end(), [&](const Variable& v) { return v.name == name; }))
      throw Error("weight given for unknown variable '" + name + "'");
  auto ring = PolynomialRing<F>::make(std::move(field), std::move(vars));
  std::vector<Polynomial<F>> c;
  for (int i = 1; i <= 6; ++i) c.push_back(Polynomial<F>::variable(ring, "c" + std::to_string(i)));
  return build_four_intersection(ring, std::move(c), conv);
}

struct PhiCertificate {
  bool well_defined = false;
  std::array<std::optional<bool>, 4> maps_into;  ///< maps_into[s-1]; unset for s = t

  bool ok() const {
    return well_defined && std::all_of(maps_into.begin(), maps_into.end(),
                                       [](const std::optional<bool>& b) { return !b || *b; });
  }
};

/// phi_t respects the two relations modulo I, and its images lie in every other J_s.
template <CoefficientField F>
PhiCertificate verify_phi(const FourIntersectionData<F>& data, int t) {
  const auto& m = data.phit(t);
  PhiCertificate cert;
  cert.well_defined = true;
  for (const auto& row : m.relations) {
    Polynomial<F> comb(data.ring);
    for (std::size_t i = 0; i < 3; ++i) comb += row[i] * m.images[i];
    cert.well_defined = cert.well_defined && data.I.contains(comb);
  }
  for (int s = 1; s <= 4; ++s) {
    if (s == t) continue;
    const auto& Js = data.Jt(s);
    cert.maps_into[static_cast<std::size_t>(s - 1)] =
        std::all_of(m.images.begin(), m.images.end(), [&](const Polynomial<F>& h) { return Js.contains(h); });
  }
  return cert;
}

/// phi_s(p + I) for p in J_s, via a representation of p in the generators of J_s.
template <CoefficientField F>
Polynomial<F> apply_phi(const FourIntersectionData<F>& data, int s, const Polynomial<F>& p) {
  const auto& m = data.phit(s);
  std::vector<Polynomial<F>> gens;
  for (const auto& v : m.generators) gens.push_back(Polynomial<F>::variable(data.ring, v));
  gens.push_back(data.f);
  gens.push_back(data.g);
  auto div = tracked_divide(p, tracked_groebner<F>(gens));
  if (!div.remainder.is_zero())
    throw ConstructionError("element outside J_" + std::to_string(s) + " given to phi_" + std::to_string(s));
  Polynomial<F> out(data.ring);
  for (std::size_t i = 0; i < 3; ++i) out += div.cofactors[i] * m.images[i];
  return out;
}

/// A with phi_s(phi_t(p)) = A p mod I for every generator p of J_t, reduced
/// to its normal form modulo I.
template <CoefficientField F>
Polynomial<F> compute_Ast(const FourIntersectionData<F>& data, int s, int t) {
  if (s == t) throw Error("compute_Ast needs distinct indices");
  const auto& mt = data.phit(t);
  const auto& gbI = data.I.groebner_basis();
  auto p = Polynomial<F>::variable(data.ring, mt.generators[0]);
  auto composed = apply_phi(data, s, mt.images[0]);
  std::vector<Polynomial<F>> gens{p, data.f, data.g};
  auto div = tracked_divide(composed, tracked_groebner<F>(gens));
  auto tag = "A_" + std::to_string(s) + std::to_string(t);
  if (!div.remainder.is_zero()) throw ConstructionError("no valid " + tag + ": phi_s(phi_t(p)) is not in (p) + I");
  auto A = gbI.reduce(div.cofactors[0]);
  for (std::size_t i = 1; i < 3; ++i) {
    auto q = Polynomial<F>::variable(data.ring, mt.generators[i]);
    if (!gbI.contains(apply_phi(data, s, mt.images[i]) - A * q))
      throw ConstructionError("no valid " + tag + ": cross-check on " + mt.generators[i] + " fails");
  }
  return A;
}

/// True iff A = +-x^2 * m * m' for a variable x and two of the 2x2 minors of
/// the coefficient matrix (c1 c2 c3 / c4 c5 c6). Needs c1..c6 as variables.
template <CoefficientField F>
bool has_minor_product_shape(const FourIntersectionData<F>& data, const Polynomial<F>& A) {
  const auto& c = data.c;
  std::vector<Polynomial<F>> minors{c[0] * c[4] - c[1] * c[3], c[0] * c[5] - c[2] * c[3],
                                    c[1] * c[5] - c[2] * c[4]};
  const auto& gbI = data.I.groebner_basis();
  for (int j = 1; j <= 6; ++j) {
    auto x = Polynomial<F>::variable(data.ring, "x" + std::to_string(j));
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a; b < 3; ++b) {
        auto cand = gbI.reduce(x * x * minors[a] * minors[b]);
        if (cand == A || cand == -A) return true;
      }
  }
  return false;
}

template <CoefficientField F>
struct UnprojectionIdeal {
  Ideal<F> ideal;                   ///< 20 generators in the fixed order below
  std::vector<std::string> labels;  ///< one per generator
  std::map<std::pair<int, int>, Polynomial<F>> A;  ///< A_st keyed by (s, t), in the base ring

  const RingPtr<F>& ring() const { return ideal.ring(); }
};

/// I_un in R[T1..T4]: f, g; T_t x - phi_t(x) for the generators x of each J_t;
/// T_s T_t - A_st for (s,t) = 21, 31, 41, 32, 42, 43. T_t gets the degree
/// shift of phi_t unless `t_weights` says otherwise.
template <CoefficientField F>
UnprojectionIdeal<F> build_Iun(const FourIntersectionData<F>& data,
                               std::optional<std::array<int, 4>> t_weights = std::nullopt) {
  std::vector<Variable> ts;
  for (int t = 1; t <= 4; ++t) {
    int w = 0;
    if (t_weights) {
      w = (*t_weights)[static_cast<std::size_t>(t - 1)];
    } else if (auto shift = data.phit(t).degree_shift) {
      w = *shift;
    } else {
      throw ConstructionError("phi_" + std::to_string(t) + " is zero; give the T weights explicitly");
    }
    ts.push_back({"T" + std::to_string(t), w});
  }
  auto ext = detail::append_variables(data.ring, ts);
  auto embed = RingMap<F>::by_name(data.ring, ext, {});
  auto T = [&](int t) { return Polynomial<F>::variable(ext, "T" + std::to_string(t)); };

  std::vector<Polynomial<F>> gens{embed(data.f), embed(data.g)};
  std::vector<std::string> labels{"f", "g"};
  for (int t = 1; t <= 4; ++t) {
    const auto& m = data.phit(t);
    for (std::size_t i = 0; i < 3; ++i) {
      gens.push_back(T(t) * Polynomial<F>::variable(ext, m.generators[i]) - embed(m.images[i]));
      labels.push_back("T" + std::to_string(t) + "*" + m.generators[i] + " - phi" + std::to_string(t) + "(" +
                       m.generators[i] + ")");
    }
  }
  std::map<std::pair<int, int>, Polynomial<F>> A;
  for (auto [s, t] : std::array<std::pair<int, int>, 6>{{{2, 1}, {3, 1}, {4, 1}, {3, 2}, {4, 2}, {4, 3}}}) {
    auto a = compute_Ast(data, s, t);
    gens.push_back(T(s) * T(t) - embed(a));
    labels.push_back("T" + std::to_string(s) + "*T" + std::to_string(t) + " - A" + std::to_string(s) +
                     std::to_string(t));
    A.emplace(std::pair{s, t}, std::move(a));
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].is_zero() || !gens[i].is_homogeneous())
      throw NonHomogeneousError("generator " + labels[i] + " of I_un is not homogeneous");
  return {Ideal<F>(ext, std::move(gens)), std::move(labels), std::move(A)};
}

/// Values for c1..c6; an unset entry keeps c_i as a variable.
template <CoefficientField F>
struct CoefficientAssignment {
  std::array<std::optional<typename F::Element>, 6> values;
  bool test_mode = false;  ///< permits zero values
};

template <CoefficientField F>
struct SpecializedUnprojection {
  RingPtr<F> base_ring;  ///< x1..x6 followed by the kept c's
  RingPtr<F> ring;       ///< base_ring followed by T1..T4
  Ideal<F> I;
  Ideal<F> Iun;
};

/// Ring of the specialization: x1..x6 and the kept c's, weights taken from
/// `weights` or else from `source`.
template <CoefficientField F>
RingPtr<F> specialized_base_ring(const PolynomialRing<F>& source, const CoefficientAssignment<F>& assignment,
                                 const WeightMap& weights) {
  std::vector<Variable> vars;
  auto add = [&](const std::string& name) {
    auto it = weights.find(name);
    vars.push_back({name, it != weights.end() ? it->second : source.weight(source.require_index(name))});
  };
  for (int i = 1; i <= 6; ++i) add("x" + std::to_string(i));
  for (int i = 1; i <= 6; ++i)
    if (!assignment.values[static_cast<std::size_t>(i - 1)]) add("c" + std::to_string(i));
  return PolynomialRing<F>::make(source.field(), std::move(vars), source.order());
}

/// c1..c6 as elements of `ring` under `assignment`.
template <CoefficientField F>
std::vector<Polynomial<F>> coefficient_images(const RingPtr<F>& ring, const CoefficientAssignment<F>& assignment) {
  const F& k = ring->field();
  std::vector<Polynomial<F>> c;
  for (int i = 1; i <= 6; ++i) {
    const auto& v = assignment.values[static_cast<std::size_t>(i - 1)];
    if (v && k.is_zero(*v) && !assignment.test_mode)
      throw Error("c" + std::to_string(i) + " = 0 is not a general value");
    c.push_back(v ? Polynomial<F>::constant(ring, *v) : Polynomial<F>::variable(ring, "c" + std::to_string(i)));
  }
  return c;
}

/// Substitutes the assigned c's into I and I_un. Weights of x's and kept
/// c's default to those of the generic ring; T_t defaults to the degree
/// shift of the specialized phi_t (or its generic weight if that is zero).
template <CoefficientField F>
SpecializedUnprojection<F> specialize(const UnprojectionIdeal<F>& generic, const CoefficientAssignment<F>& assignment,
                                      const WeightMap& weights = {}) {
  const auto& src = generic.ring();
  auto base = specialized_base_ring(*src, assignment, weights);
  std::optional<FourIntersectionData<F>> local;
  std::vector<Variable> ts;
  for (int t = 1; t <= 4; ++t) {
    std::string name = "T" + std::to_string(t);
    int w = src->weight(src->require_index(name));
    if (auto it = weights.find(name); it != weights.end()) {
      w = it->second;
    } else {
      if (!local) local = build_four_intersection(base, coefficient_images(base, assignment));
      if (auto shift = local->phit(t).degree_shift) w = *shift;
    }
    ts.push_back({name, w});
  }
  auto ext = detail::append_variables(base, ts);
  auto c = coefficient_images(ext, assignment);
  std::map<std::string, Polynomial<F>> images;
  for (int i = 1; i <= 6; ++i) images.emplace("c" + std::to_string(i), c[static_cast<std::size_t>(i - 1)]);
  auto sub = RingMap<F>::by_name(src, ext, images);

  std::vector<Polynomial<F>> gens;
  for (const auto& g : generic.ideal.generators()) {
    auto h = sub(g);
    if (!h.is_homogeneous() && !h.is_zero())
      throw NonHomogeneousError("specialized generator " + format_poly(h) + " is not homogeneous");
    gens.push_back(std::move(h));
  }
  auto to_base = RingMap<F>::by_name(ext, base, {}, true);
  Ideal<F> I(base, {to_base(gens[0]), to_base(gens[1])});
  return {base, ext, std::move(I), Ideal<F>(ext, std::move(gens))};
}

/// The single Kustin-Miller unprojection of (rows of `A`) . xs inside (xs):
/// I + (T x_1 - h_1, T x_2 + h_2, T x_3 - h_3) in R[T], T of the degree of phi.
template <CoefficientField F>
Ideal<F> build_km_unprojection(const Matrix2x3<F>& A, const std::array<Polynomial<F>, 3>& xs,
                               const std::string& T = "T") {
  const auto& ring = xs[0].ring();
  auto h = km_phi_minors(A);
  std::optional<int> shift;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!xs[i].is_monomial() || !xs[i].is_homogeneous()) throw Error("xs must be variables");
    auto d = h[i].weighted_degree();
    if (d.kind != WeightedDegree::Kind::Homogeneous) throw NonHomogeneousError("minor is zero or not homogeneous");
    int s = d.degree - xs[i].max_degree();
    if (shift && *shift != s) throw NonHomogeneousError("minors have incompatible degrees");
    shift = s;
  }
  auto ext = detail::append_variables(ring, {{T, *shift}});
  auto embed = RingMap<F>::by_name(ring, ext, {});
  auto t = Polynomial<F>::variable(ext, T);
  std::vector<Polynomial<F>> gens;
  for (const auto& row : A) {
    Polynomial<F> r(ring);
    for (std::size_t i = 0; i < 3; ++i) r += row[i] * xs[i];
    gens.push_back(embed(r));
  }
  for (std::size_t i = 0; i < 3; ++i) gens.push_back(t * embed(xs[i]) - embed(h[i]));
  return Ideal<F>(ext, std::move(gens));
}

/// The generic 2x3 matrix (a1 a2 a3 / b1 b2 b3) and (x1, x3, x5) in the
/// standard graded k[a1..a3, b1..b3, x1, x3, x5].
template <CoefficientField F>
std::pair<Matrix2x3<F>, std::array<Polynomial<F>, 3>> km_generic_input(F field = F{}) {
  std::vector<Variable> vars;
  for (const char* n : {"a1", "a2", "a3", "b1", "b2", "b3", "x1", "x3", "x5"}) vars.push_back({n, 1});
  auto ring = PolynomialRing<F>::make(std::move(field), std::move(vars));
  auto v = [&](const char* n) { return Polynomial<F>::variable(ring, n); };
  return {Matrix2x3<F>{{{v("a1"), v("a2"), v("a3")}, {v("b1"), v("b2"), v("b3")}}}, {v("x1"), v("x3"), v("x5")}};
}

}  // namespace unproj
