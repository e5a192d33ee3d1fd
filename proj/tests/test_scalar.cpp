#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace qplane;
using qtest::num;

const Field kQ = Field::rationals();
const Field kQ2 = Field::quadratic(2);

TEST(Field, ParseAndPrint) {
  EXPECT_EQ(Field::parse("Q"), kQ);
  EXPECT_EQ(Field::parse("Q(sqrt 2)"), kQ2);
  EXPECT_EQ(Field::parse("Q(sqrt(2))"), kQ2);
  EXPECT_EQ(Field::parse("Q(sqrt(-3))").radicand(), -3);
  EXPECT_EQ(kQ2.to_string(), "Q(sqrt 2)");
  EXPECT_THROW(Field::quadratic(4), InvalidField);
  EXPECT_THROW(Field::quadratic(1), InvalidField);
  EXPECT_THROW(Field::quadratic(0), InvalidField);
  EXPECT_THROW(Field::parse("R"), InvalidField);
}

TEST(FieldElem, Arithmetic) {
  EXPECT_EQ(num(1, 2) + num(1, 3), num(5, 6));
  const FieldElem r2 = FieldElem::generator(kQ2);
  const FieldElem one(kQ2, 1);
  EXPECT_EQ((one + r2) * (one - r2), FieldElem(kQ2, -1));
  const FieldElem inv = (FieldElem(kQ2, 2) * r2).inverse();
  EXPECT_EQ(inv, FieldElem::from_parts(kQ2, 0, Rational(1, 4)));
  EXPECT_TRUE((inv * FieldElem(kQ2, 2) * r2).is_one());
  EXPECT_THROW(FieldElem(kQ, 0).inverse(), DivisionByZero);
  EXPECT_THROW(FieldElem(kQ, 1) + FieldElem(kQ2, 1), FieldMismatch);
}

TEST(FieldElem, PowAndNorm) {
  EXPECT_EQ(num(2).pow(10), num(1024));
  EXPECT_EQ(num(2).pow(-3), num(1, 8));
  EXPECT_EQ(num(-1).pow(0), num(1));
  const FieldElem a = FieldElem::from_parts(kQ2, 3, 2);
  EXPECT_EQ(a.norm(), Rational(1));
  EXPECT_EQ(a * a.conjugate(), FieldElem(kQ2, a.norm()));
}

TEST(FieldElem, SignUnderRealEmbedding) {
  EXPECT_EQ(FieldElem::from_parts(kQ2, 1, -1).sign(), -1);
  EXPECT_EQ(FieldElem::from_parts(kQ2, -1, 1).sign(), 1);
  EXPECT_EQ(FieldElem::from_parts(kQ2, 3, -2).sign(), 1);
  EXPECT_EQ(FieldElem(kQ2, 0).sign(), 0);
  EXPECT_THROW(FieldElem::generator(Field::quadratic(-1)).sign(), NotReal);
}

TEST(FieldElem, ToString) {
  EXPECT_EQ(num(-3).to_string(), "-3");
  EXPECT_EQ(num(5, 6).to_string(), "5/6");
  EXPECT_EQ(FieldElem::generator(kQ2).to_string(), "sqrt(2)");
  EXPECT_EQ(FieldElem::from_parts(kQ2, 0, Rational(-1, 2)).to_string(), "-sqrt(2)/2");
  EXPECT_EQ(FieldElem::from_parts(kQ2, 0, Rational(3, 2)).to_string(), "3*sqrt(2)/2");
  EXPECT_EQ(FieldElem::from_parts(kQ2, Rational(1, 3), Rational(2, 3)).to_string(), "(1+2*sqrt(2))/3");
  EXPECT_EQ(FieldElem::from_parts(kQ2, 1, 2).to_string(), "1+2*sqrt(2)");
}

TEST(SqrtInField, Examples) {
  EXPECT_EQ(sqrt_in_field(num(9, 4)), num(3, 2));
  EXPECT_FALSE(sqrt_in_field(num(2)).has_value());
  EXPECT_FALSE(sqrt_in_field(num(-4)).has_value());
  EXPECT_EQ(sqrt_in_field(FieldElem(kQ2, 8)), FieldElem::from_parts(kQ2, 0, 2));
  // (1 + sqrt 2)^2 = 3 + 2 sqrt 2
  EXPECT_EQ(sqrt_in_field(FieldElem::from_parts(kQ2, 3, 2)), FieldElem::from_parts(kQ2, 1, 1));
  EXPECT_FALSE(sqrt_in_field(FieldElem::generator(kQ2)).has_value());
  const Field qi = Field::quadratic(-1);
  EXPECT_EQ(sqrt_in_field(FieldElem(qi, -4)), FieldElem::from_parts(qi, 0, 2));
}

TEST(SqrtInField, AgreesWithBruteForceOverQ) {
  qtest::Gen gen(11);
  for (int n = 0; n < 500; ++n) {
    const Rational r = gen.rational(12);
    const Rational sq = gen.coin() ? r * r : r;
    const auto mine = sqrt_in_field(FieldElem(kQ, sq));
    const auto oracle = qtest::brute_sqrt(sq, 12);
    ASSERT_EQ(mine.has_value(), oracle.has_value()) << to_string(sq);
    if (mine) EXPECT_EQ(mine->rat_part(), *oracle) << to_string(sq);
  }
}

TEST(SqrtInField, SquaresOfQuadraticElementsAreFound) {
  qtest::Gen gen(12);
  for (std::int64_t s : {2, 3, 5, -1, -3, 6}) {
    const Field f = Field::quadratic(s);
    for (int n = 0; n < 100; ++n) {
      const FieldElem a = gen.scalar(f, 9);
      const auto root = sqrt_in_field(a * a);
      ASSERT_TRUE(root.has_value()) << a.to_string();
      EXPECT_TRUE(*root == a || *root == -a) << a.to_string();
    }
  }
}

TEST(RootOfUnityOrder, Examples) {
  EXPECT_EQ(root_of_unity_order(num(1)), 1U);
  EXPECT_EQ(root_of_unity_order(num(-1)), 2U);
  EXPECT_FALSE(root_of_unity_order(num(2)).has_value());
  EXPECT_FALSE(root_of_unity_order(num(1, 2)).has_value());
  const Field f = Field::quadratic(-3);
  const FieldElem omega = FieldElem::from_parts(f, Rational(-1, 2), Rational(1, 2));
  EXPECT_TRUE(omega.pow(3).is_one());
  EXPECT_EQ(root_of_unity_order(omega), 3U);
  EXPECT_EQ(root_of_unity_order(-omega), 6U);
  EXPECT_EQ(root_of_unity_order(FieldElem::generator(Field::quadratic(-1))), 4U);
  EXPECT_THROW(root_of_unity_order(num(0)), ZeroParameter);
}

TEST(Squarefree, Parts) {
  EXPECT_TRUE(is_squarefree(6));
  EXPECT_FALSE(is_squarefree(12));
  EXPECT_EQ(squarefree_part(Rational(8)), 2);
  EXPECT_EQ(squarefree_part(Rational(-4)), -1);
  EXPECT_EQ(squarefree_part(Rational(1, 3)), 3);
  EXPECT_EQ(squarefree_part(Rational(9, 4)), 1);
}

}  // namespace
