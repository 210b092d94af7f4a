#include <gtest/gtest.h>

#include <random>

#include "liesub/field.hpp"
#include "liesub/linalg.hpp"
#include "liesub/upoly.hpp"

using namespace liesub;

namespace {

Field sqrt_m3() { return FieldSpec::intern({Rational(3), Rational(0), Rational(1)}); }

FieldElement el(Field f, std::vector<Rational> c) { return FieldElement(f, std::move(c)); }

FieldElement random_element(Field f, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  std::vector<Rational> c(f->degree());
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return FieldElement(f, c);
}

}  // namespace

TEST(FieldArith, RationalSum) {
  const Field q = FieldSpec::rationals();
  const auto r = field_arith(FieldElement(q, Rational(1, 3)), FieldElement(q, Rational(1, 6)), ArithOp::add);
  EXPECT_EQ(r, FieldElement(q, Rational(1, 2)));
}

TEST(FieldArith, DefiningRelation) {
  const Field f = sqrt_m3();
  const auto t = FieldElement::generator(f);
  EXPECT_EQ(field_arith(t, t, ArithOp::mul), FieldElement(f, Rational(-3)));
}

TEST(FieldArith, InverseOfOnePlusT) {
  const Field f = sqrt_m3();
  const auto one_plus_t = el(f, {1, 1});
  const auto r = field_arith(FieldElement(f, Rational(1)), one_plus_t, ArithOp::div);
  EXPECT_EQ(r, el(f, {Rational(1, 4), Rational(-1, 4)}));
}

TEST(FieldArith, DivisionByZeroThrows) {
  const Field f = sqrt_m3();
  EXPECT_THROW(field_arith(el(f, {1, 0}), FieldElement(f), ArithOp::div), DivisionByZero);
  const Field q = FieldSpec::rationals();
  EXPECT_THROW(field_arith(FieldElement(q, Rational(2)), FieldElement(q), ArithOp::div), DivisionByZero);
}

TEST(FieldArith, MismatchedFieldsThrow) {
  EXPECT_THROW(FieldElement(sqrt_m3(), Rational(1)) + FieldElement(FieldSpec::rationals(), Rational(1)),
               FieldMismatch);
}

TEST(FieldSpecs, InterningAndValidation) {
  EXPECT_EQ(sqrt_m3(), parse_field("3,0,1"));
  EXPECT_EQ(FieldSpec::rationals(), parse_field(""));
  EXPECT_TRUE(FieldSpec::rationals()->is_rationals());
  EXPECT_THROW(FieldSpec::intern({Rational(1), Rational(2)}), InvalidType);
  EXPECT_TRUE(sqrt_m3()->passes_rational_root_test());
  EXPECT_FALSE(parse_field("-1,0,1")->passes_rational_root_test());
}

TEST(FieldEmbed, RationalsIntoExtension) {
  const Field q = FieldSpec::rationals();
  const Field f = sqrt_m3();
  const auto img = field_embed(FieldElement(q, Rational(5)), q, f, FieldElement(f));
  EXPECT_EQ(img, FieldElement(f, Rational(5)));
}

TEST(FieldEmbed, Conjugation) {
  const Field f = sqrt_m3();
  const auto t = FieldElement::generator(f);
  EXPECT_EQ(field_embed(el(f, {1, 1}), f, f, -t), el(f, {1, -1}));
}

TEST(FieldEmbed, BadImageThrows) {
  const Field f = sqrt_m3();
  EXPECT_THROW(field_embed(el(f, {1, 1}), f, f, FieldElement(f, Rational(1))), NotAnEmbedding);
}

TEST(FieldProperties, AxiomsOnRandomElements) {
  std::mt19937 rng(7);
  for (Field f : {FieldSpec::rationals(), sqrt_m3(), parse_field("-2,0,0,1"), parse_field("1,1,1")}) {
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_element(f, rng);
      const auto b = random_element(f, rng);
      const auto c = random_element(f, rng);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      if (!a.is_zero()) EXPECT_EQ(a * a.inverse(), FieldElement(f, Rational(1)));
      if (!b.is_zero()) EXPECT_EQ((a * b) / b, a);
    }
  }
}

TEST(Rationals, RoundTripStrings) {
  EXPECT_EQ(to_string(frac(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), FormatError);
  EXPECT_THROW(parse_rational("x"), FormatError);
}

TEST(UnivariatePolys, RationalRoots) {
  // (2x - 1)(x + 3)(x^2 + 1)
  const upoly::Poly<Rational> p = upoly::mul(upoly::mul(upoly::Poly<Rational>{-1, 2}, {3, 1}), {1, 0, 1});
  auto roots = upoly::rational_roots(p);
  std::sort(roots.begin(), roots.end());
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0], Rational(-3));
  EXPECT_EQ(roots[1], Rational(1, 2));
  Rational s;
  EXPECT_TRUE(upoly::rational_sqrt(Rational(9, 4), s));
  EXPECT_EQ(s, Rational(3, 2));
  EXPECT_FALSE(upoly::rational_sqrt(Rational(2), s));
}

TEST(LinearAlgebra, NullspaceAndSolve) {
  using linalg::Mat;
  Mat<Rational> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto ns = linalg::nullspace(m, 3, Rational(0));
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& row : m) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    EXPECT_EQ(s, 0);
  }
  EXPECT_EQ(linalg::rank(m, 3), 2u);
  const auto x = linalg::solve(m, {6, 12, 2}, 3, Rational(0));
  ASSERT_TRUE(x.has_value());
  EXPECT_FALSE(linalg::solve(m, {6, 13, 2}, 3, Rational(0)).has_value());
  const auto inv = linalg::inverse(Mat<Rational>{{2, -1}, {-1, 2}});
  EXPECT_EQ(inv[0][0], Rational(2, 3));
  EXPECT_EQ(inv[0][1], Rational(1, 3));
}
