#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace qplane;
using qtest::num;
using qtest::P;

TEST(MonomialMul, Twist) {
  const FieldElem q = num(3);
  auto [c, e] = monomial_mul({0, 1}, {1, 0}, q);
  EXPECT_EQ(c, q);
  EXPECT_EQ(e, (ExponentPair{1, 1}));
  std::tie(c, e) = monomial_mul({4, 0}, {2, 0}, q);
  EXPECT_TRUE(c.is_one());
  EXPECT_EQ(e, (ExponentPair{6, 0}));
  std::tie(c, e) = monomial_mul({3, 2}, {2, 1}, num(-1));
  EXPECT_TRUE(c.is_one());
  EXPECT_EQ(e, (ExponentPair{5, 3}));
}

TEST(QPoly, Construction) {
  EXPECT_THROW(QPoly(num(0)), ZeroParameter);
  QPoly f(num(2));
  f.add_term({1, 0}, num(3));
  f.add_term({1, 0}, num(-3));
  EXPECT_TRUE(f.is_zero());
  EXPECT_THROW(f.add_term({0, 0}, FieldElem(Field::quadratic(2), 1)), FieldMismatch);
  EXPECT_THROW(QPoly(num(2)).leading_term(), ZeroInput);
}

TEST(QPoly, AdditionExamples) {
  const FieldElem q = num(2);
  const QPoly f = P("x^2 + 3xy", q);
  EXPECT_EQ(f + QPoly(q), f);
  EXPECT_EQ(P("x+y", q) + P("x-y", q), P("2x", q));
  EXPECT_TRUE(scalar_mul(FieldElem(q.field(), 0), f).is_zero());
  EXPECT_THROW(P("x", 2) + P("x", 3), ParameterMismatch);
}

TEST(QPoly, MultiplicationExamples) {
  const FieldElem m1 = num(-1);
  EXPECT_EQ(P("(x+y)", m1) * P("(x-y)", m1), P("x^2 - 2x y - y^2", m1));
  EXPECT_EQ(P("x-y", m1) * P("x-y", m1), P("x^2 + y^2", m1));
  const QPoly f = P("x^2y + 5", 7);
  EXPECT_EQ(f * QPoly::constant(num(7), 1), f);
  EXPECT_EQ(QPoly::y(num(5)) * QPoly::x(num(5)), scalar_mul(num(5), QPoly::monomial(num(5), num(1), {1, 1})));
  EXPECT_THROW(P("x", 2) * P("y", 3), ParameterMismatch);
}

TEST(QPoly, DegreeAndHomogeneity) {
  EXPECT_EQ(degree(P("x^2y + x", 2)).value(), 3U);
  EXPECT_TRUE(degree(QPoly(num(2))).is_neg_infinity());
  EXPECT_THROW(degree(QPoly(num(2))).value(), DegreeOfZero);
  EXPECT_LT(degree(QPoly(num(2))), Degree(0));
  EXPECT_TRUE((degree(QPoly(num(2))) + Degree(3)).is_neg_infinity());
  EXPECT_TRUE(is_homogeneous(P("x^2 - y^2", 2)));
  EXPECT_FALSE(is_homogeneous(P("x^2 + x", 2)));
}

TEST(QPoly, ScaleVars) {
  const FieldElem m1 = num(-1);
  const QPoly f = P("x^3 + 2xy - 7", m1);
  EXPECT_EQ(scale_vars(f, num(1), num(1)), f);
  EXPECT_EQ(scale_vars(P("x^2+y^2", m1), m1.inverse(), num(1)), P("x^2+y^2", m1));
  EXPECT_EQ(scale_vars(P("x y", 5), num(2), num(3)), P("6 x y", 5));
}

TEST(QPoly, Centrality) {
  const FieldElem m1 = num(-1);
  EXPECT_TRUE(is_central(P("x^2 y^4", m1)));
  EXPECT_FALSE(is_central(P("x y", m1)));
  EXPECT_TRUE(is_central(P("5", 2)));
  EXPECT_FALSE(is_central(P("x", 2)));
  EXPECT_TRUE(is_central(P("x y^3 + x^2", 1)));
  EXPECT_EQ(non_central_exponent(P("x^2 + x y", m1)), (ExponentPair{1, 1}));
}

TEST(QPoly, CentralElementsCommute) {
  qtest::Gen gen(21);
  const Field f = Field::quadratic(-3);
  const FieldElem omega = FieldElem::from_parts(f, Rational(-1, 2), Rational(1, 2));
  for (const FieldElem& q : {num(-1), omega, FieldElem::generator(Field::quadratic(-1))}) {
    for (int n = 0; n < 50; ++n) {
      const QPoly a = gen.poly(q, 3, 6, 5);
      const QPoly b = gen.poly(q, 3, 3, 5);
      if (is_central(a)) EXPECT_EQ(a * b, b * a) << to_string(a);
    }
  }
}

TEST(QPoly, ToString) {
  const FieldElem q = num(2);
  EXPECT_EQ(to_string(QPoly(q)), "0");
  EXPECT_EQ(to_string(P("x^2 - 2x y - y^2", q)), "x^2 - 2*x*y - y^2");
  EXPECT_EQ(to_string(P("-x + 3/2", q)), "-x + 3/2");
  EXPECT_EQ(to_string(P("3/2*x*y^2", q)), "3/2*x*y^2");
  const Field f = Field::quadratic(2);
  const FieldElem q2(f, 2);
  EXPECT_EQ(to_string(P("(1+sqrt(2)) x - sqrt(2) y", q2)), "(1+sqrt(2))*x - sqrt(2)*y");
  EXPECT_EQ(to_string(ExponentPair{0, 0}), "1");
}

TEST(QPoly, MultiplicationMatchesWordOracle) {
  qtest::Gen gen(22);
  const std::vector<FieldElem> qs{num(1), num(-1), num(2), num(3, 2), num(-2, 3)};
  for (int n = 0; n < 500; ++n) {
    const FieldElem q = gen.pick(qs);
    const QPoly a = gen.poly(q, 4, 3, 6);
    const QPoly b = gen.poly(q, 4, 3, 6);
    const QPoly oracle = qtest::WordPoly::from(a).times(qtest::WordPoly::from(b)).normal_form();
    ASSERT_EQ(a * b, oracle) << to_string(a) << " * " << to_string(b);
  }
}

}  // namespace
