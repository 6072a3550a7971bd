#include <gtest/gtest.h>

#include <map>
#include <random>

#include "test_support.hpp"

using namespace unproj;
using namespace unproj::testing;

namespace {

// Schoolbook product over a key-ordered map, independent of the geobucket path.
template <CoefficientField F>
Polynomial<F> naive_product(const Polynomial<F>& a, const Polynomial<F>& b) {
  const F& k = a.field();
  auto less = [](const Monomial& x, const Monomial& y) { return key_less(x, y); };
  std::map<Monomial, typename F::Element, decltype(less)> acc(less);
  for (const auto& s : a.terms())
    for (const auto& t : b.terms()) {
      auto m = s.mono * t.mono;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, k.mul(s.coeff, t.coeff));
      else
        it->second = k.add(it->second, k.mul(s.coeff, t.coeff));
    }
  TermList<F> terms;
  for (auto& [m, c] : acc) terms.push_back({m, c});
  return Polynomial<F>(a.ring(), std::move(terms));
}

}  // namespace

TEST(PolyArith, CancellationLeavesRemainingTerm) {
  auto r = make_ring({"x1", "x2"});
  EXPECT_EQ(P(r, "x1 + x2") + P(r, "-x1"), P(r, "x2"));
}

TEST(PolyArith, MultiplicativeIdentity) {
  auto r = make_ring({"x1", "x2", "x3"});
  auto f = P(r, "3*x1^2*x3 - x2 + 7");
  EXPECT_EQ(f * Polynomial<Fp>::constant(r, 1), f);
}

TEST(PolyArith, DifferenceOfSquaresMatchesNaiveExpansion) {
  auto r = make_ring<QQ>({"x1", "x2"});
  auto a = P(r, "x1 + x2");
  auto b = P(r, "x1 - x2");
  EXPECT_EQ(a * b, naive_product(a, b));
  EXPECT_EQ(a * b, P(r, "x1^2 - x2^2"));
}

TEST(PolyArith, ProductMatchesNaiveOnRandomInputs) {
  auto r = make_ring({"a", "b", "c", "d"}, {1, 2, 1, 3});
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(r, rng, 12, 4);
    auto g = random_poly(r, rng, 12, 4);
    ASSERT_EQ(f * g, naive_product(f, g));
  }
}

TEST(PolyArith, RingMismatchIsAnError) {
  auto r1 = make_ring({"x", "y"});
  auto r2 = make_ring({"x", "z"});
  EXPECT_THROW(P(r1, "x") + P(r2, "x"), RingMismatch);
  EXPECT_THROW(P(r1, "x") * P(r2, "x"), RingMismatch);
  auto r3 = make_ring({"x", "y"}, {}, OrderKind::Lex);
  EXPECT_THROW(P(r1, "x") + P(r3, "x"), RingMismatch);
}

TEST(WeightedDegree, BaseCubicIsHomogeneousOfDegreeThree) {
  auto r = make_ring({"c1", "c2", "c3", "c4", "c5", "c6", "x1", "x2", "x3", "x4", "x5", "x6"});
  auto f = P(r, "c1*x1*x2 + c2*x3*x4 + c3*x5*x6");
  EXPECT_EQ(weighted_degree(f), WeightedDegree::homogeneous(3));
}

TEST(WeightedDegree, ConstantZeroAndMixed) {
  auto r = make_ring({"x1", "x2"}, {1, 2});
  EXPECT_EQ(weighted_degree(P(r, "1")), WeightedDegree::homogeneous(0));
  EXPECT_EQ(weighted_degree(P(r, "x1 + x2")), WeightedDegree::non_homogeneous());
  EXPECT_EQ(weighted_degree(P(r, "x1^2 + x2")), WeightedDegree::homogeneous(2));
  EXPECT_EQ(weighted_degree(Polynomial<Fp>(r)), WeightedDegree::zero());
}

TEST(WeightedDegree, AdditiveUnderProducts) {
  auto r = make_ring({"a", "b", "c"}, {1, 2, 3});
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto f = random_homogeneous(r, rng, 1 + static_cast<int>(rng() % 6));
    auto g = random_homogeneous(r, rng, 1 + static_cast<int>(rng() % 6));
    auto fg = f * g;
    if (f.is_zero() || g.is_zero() || fg.is_zero()) continue;
    EXPECT_EQ(weighted_degree(fg).degree, weighted_degree(f).degree + weighted_degree(g).degree);
  }
}

TEST(Text, RoundTripsCanonicalForm) {
  auto r = make_ring({"x1", "x2", "x3"});
  auto f = P(r, "x1*x2 - 2*x3^2");
  EXPECT_EQ(format_poly(f), "x1*x2 - 2*x3^2");
  EXPECT_EQ(P(r, format_poly(f)), f);
}

TEST(Text, RationalCoefficient) {
  auto r = make_ring<QQ>({"c1"});
  auto f = P(r, "3/2*c1");
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.leading_coeff(), mpq_class(3, 2));
  EXPECT_EQ(format_poly(f), "3/2*c1");
}

TEST(Text, Errors) {
  auto r = make_ring({"x1", "x2", "x3", "x4", "x5", "x6"});
  EXPECT_THROW(P(r, "x7"), ParseError);
  EXPECT_THROW(P(r, "x1 +"), ParseError);
  EXPECT_THROW(P(r, "x1 x2"), ParseError);
  EXPECT_THROW(P(r, "3/0*x1"), ParseError);
  EXPECT_THROW(P(r, "x1^0"), ParseError);
  EXPECT_THROW(P(r, "2*"), ParseError);
  EXPECT_THROW(P(r, ""), ParseError);
}

TEST(Text, ConstantsAndWhitespace) {
  auto r = make_ring({"x", "y"});
  EXPECT_TRUE(P(r, "0").is_zero());
  EXPECT_EQ(P(r, " - 1 +  x ^ 2*y"), P(r, "x^2*y - 1"));
  EXPECT_EQ(P(r, "x*x*y"), P(r, "x^2*y"));
  EXPECT_EQ(format_poly(P(r, "-x")), "-x");
  EXPECT_EQ(format_poly(P(r, "5")), "5");
}

TEST(Text, ParseInvertsFormatOnRandomPolynomials) {
  std::mt19937_64 rng(3);
  auto rq = make_ring<QQ>({"a", "b", "c"}, {2, 1, 1});
  auto rp = make_ring({"a", "b", "c"}, {2, 1, 1}, OrderKind::Lex);
  for (int i = 0; i < 300; ++i) {
    auto f = random_poly(rq, rng, 8, 5);
    ASSERT_EQ(P(rq, format_poly(f)), f) << format_poly(f);
    auto g = random_poly(rp, rng, 8, 5);
    ASSERT_EQ(P(rp, format_poly(g)), g) << format_poly(g);
  }
}

template <class F>
class FieldAxioms : public ::testing::Test {};
using Fields = ::testing::Types<PrimeField, RationalField>;
TYPED_TEST_SUITE(FieldAxioms, Fields);

TYPED_TEST(FieldAxioms, HoldOnSeededTriples) {
  TypeParam k;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_element(k, rng), b = random_element(k, rng), c = random_element(k, rng);
    ASSERT_EQ(k.add(k.add(a, b), c), k.add(a, k.add(b, c)));
    ASSERT_EQ(k.mul(k.mul(a, b), c), k.mul(a, k.mul(b, c)));
    ASSERT_EQ(k.mul(a, k.add(b, c)), k.add(k.mul(a, b), k.mul(a, c)));
    ASSERT_EQ(k.add(a, b), k.add(b, a));
    ASSERT_EQ(k.mul(a, b), k.mul(b, a));
    ASSERT_TRUE(k.is_zero(k.add(a, k.neg(a))));
    if (!k.is_zero(a)) {
      ASSERT_TRUE(k.is_one(k.mul(a, k.inv(a))));
    }
  }
}

TEST(PrimeFieldTest, RejectsCompositeAndReducesInputs) {
  EXPECT_THROW(PrimeField(32001), FieldError);
  EXPECT_THROW(PrimeField(1), FieldError);
  PrimeField k;
  EXPECT_EQ(k.from_int(-1), 32002u);
  EXPECT_EQ(k.to_string(32002), "-1");
  EXPECT_EQ(k.from_decimal("3", "2"), k.mul(3, k.inv(2)));
  EXPECT_THROW(k.from_decimal("1", "32003"), FieldError);
  EXPECT_THROW(k.inv(0), FieldError);
}

TEST(RationalFieldTest, StaysInLowestTerms) {
  RationalField k;
  auto a = k.from_decimal("6", "4");
  EXPECT_EQ(a.get_num(), 3);
  EXPECT_EQ(a.get_den(), 2);
  auto b = k.mul(a, k.from_decimal("2", "3"));
  EXPECT_EQ(b, 1);
  EXPECT_GT(k.neg(a).get_den(), 0);
}

class OrderLaws : public ::testing::TestWithParam<OrderKind> {};

TEST_P(OrderLaws, TotalMultiplicativeWithOneMinimal) {
  auto r = make_ring({"a", "b", "c", "d"}, {1, 3, 2, 1}, GetParam());
  std::mt19937_64 rng(7);
  Monomial one;
  for (int i = 0; i < 2000; ++i) {
    auto a = random_monomial(*r, rng, 4), b = random_monomial(*r, rng, 4), c = random_monomial(*r, rng, 4);
    auto ab = r->compare(a, b), ba = r->compare(b, a);
    ASSERT_EQ(ab == 0, a == b);
    ASSERT_EQ(ab < 0, ba > 0);
    if (r->compare(a, b) < 0 && r->compare(b, c) < 0) {
      ASSERT_TRUE(r->compare(a, c) < 0);
    }
    if (r->compare(a, b) < 0) {
      ASSERT_TRUE(r->compare(a * c, b * c) < 0);
    }
    if (!a.is_one()) {
      ASSERT_TRUE(r->compare(a, one) > 0);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothOrders, OrderLaws, ::testing::Values(OrderKind::Lex, OrderKind::WeightedRevLex));

TEST(OrderKinds, LexFollowsVariableListAndGrevlexIsStandard) {
  auto lex = make_ring({"x", "y", "z"}, {}, OrderKind::Lex);
  EXPECT_EQ(format_poly(P(lex, "y^5 + x*z + z^9")), "x*z + y^5 + z^9");
  auto grevlex = make_ring({"x", "y", "z"});
  EXPECT_EQ(format_poly(P(grevlex, "x*z + y^2 + x^2")), "x^2 + y^2 + x*z");
}

TEST(PolyRingLaws, DistributiveAndCommutative) {
  auto r = make_ring<QQ>({"a", "b", "c"});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 150; ++i) {
    auto f = random_poly(r, rng), g = random_poly(r, rng), h = random_poly(r, rng);
    ASSERT_EQ(f * (g + h), f * g + f * h);
    ASSERT_EQ(f + g, g + f);
    ASSERT_EQ(f * g, g * f);
    ASSERT_TRUE((f - f).is_zero());
  }
}

TEST(MonomialEnumeration, ListsInLastVariableMajorOrder) {
  auto r = make_ring({"a", "b", "c"});
  auto ms = monomials_of_degree(*r, 2);
  std::vector<std::string> got;
  for (const auto& m : ms) got.push_back(format_monomial(m, *r));
  EXPECT_EQ(got, (std::vector<std::string>{"a^2", "a*b", "b^2", "a*c", "b*c", "c^2"}));
  auto w = make_ring({"u", "v"}, {1, 2});
  EXPECT_EQ(monomials_of_degree(*w, 4).size(), 3u);  // u^4, u^2 v, v^2
}

TEST(MonomialTest, ExponentOverflowIsChecked) {
  auto r = make_ring({"x"});
  auto m = r->variable_monomial(0, 200);
  EXPECT_THROW(m * m, Error);
}
