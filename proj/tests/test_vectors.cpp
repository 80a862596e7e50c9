#include <gtest/gtest.h>

#include "bsaks/error.hpp"
#include "bsaks/finite_vector.hpp"
#include "bsaks/rational.hpp"
#include "bsaks/space.hpp"
#include "bsaks/text_format.hpp"

using namespace bsaks;

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-3, 9)), "-1/3");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
}

TEST(Number, ExactAndFloatingMix) {
  const Number a = Rational(1, 3);
  const Number b = Number::floating(0.5);
  EXPECT_TRUE(a.is_exact());
  EXPECT_FALSE((a + b).is_exact());
  EXPECT_NEAR((a + b).to_double(), 5.0 / 6.0, 1e-15);
  EXPECT_TRUE(a < b);
  EXPECT_EQ(max(a, Number(Rational(1, 4))), a);
}

TEST(FiniteVector, CanonicalFormDropsTailValues) {
  FiniteVector v({{CoordIndex{3}, Rational(1)}, {CoordIndex{1}, Rational(2)}, {CoordIndex{3}, Rational(-1)}});
  ASSERT_EQ(v.support_size(), 1u);
  EXPECT_EQ(v.at(CoordIndex{1}), 2);
  EXPECT_EQ(v.at(CoordIndex{3}), 0);

  FiniteVector t({{CoordIndex{2}, Rational(5)}, {CoordIndex{4}, Rational(1)}}, Rational(1));
  EXPECT_EQ(t.support_size(), 1u);
  EXPECT_EQ(t.at(CoordIndex{100}), 1);
}

TEST(FiniteVector, Arithmetic) {
  const FiniteVector a = FiniteVector::unit(CoordIndex{1}) + FiniteVector::unit(CoordIndex{2});
  const FiniteVector b = FiniteVector::unit(CoordIndex{2}) * Rational(3);
  const FiniteVector c = (a - b) / Rational(2);
  EXPECT_EQ(c.at(CoordIndex{1}), Rational(1, 2));
  EXPECT_EQ(c.at(CoordIndex{2}), -1);
  EXPECT_TRUE((c - c).is_zero());

  SparseAccumulator acc;
  acc.add(a);
  acc.add(b, Rational(-1));
  EXPECT_EQ(acc.scaled(Rational(1, 2)), c);
}

TEST(CoordIndex, OrderAndParse) {
  EXPECT_LT((CoordIndex{1, 5}), (CoordIndex{2, 1}));
  EXPECT_EQ(CoordIndex::parse("2.4"), (CoordIndex{2, 4}));
  EXPECT_EQ((CoordIndex{2, 4}).to_string(), "2.4");
  EXPECT_EQ((CoordIndex{3, 7}).rest(), CoordIndex{7});
}

TEST(TextFormat, RoundTrip) {
  const TextBlock b = parse_text("kind = l1-sum  # comment\nblock {\n  kind = weighted-alpha\n  alpha = 1/3\n}\n");
  EXPECT_EQ(b.require("kind"), "l1-sum");
  ASSERT_NE(b.child("block"), nullptr);
  EXPECT_EQ(b.child("block")->require("alpha"), "1/3");
  const TextBlock again = parse_text(format_text(b));
  EXPECT_EQ(format_text(again), format_text(b));
  EXPECT_THROW(parse_text("block {\n kind = x\n"), Error);
}

TEST(Space, NamesRoundTripThroughText) {
  for (const char* name : {"l1", "sup", "c", "schreier", "weighted:1/3", "omega", "lp:2"}) {
    const Space s = Space::parse_name(name);
    EXPECT_EQ(Space::from_text(s.to_text()), s) << name;
  }
  EXPECT_THROW(Space::parse_name("nowhere"), Error);
}

TEST(Space, RejectsTailsOutsideC) {
  const FiniteVector tail = FiniteVector::constant_tail(Rational(1));
  EXPECT_NO_THROW(Space::c().validate(tail));
  EXPECT_THROW(Space::sup().validate(tail), Error);
  EXPECT_THROW(Space::lp(1).validate(FiniteVector::unit(CoordIndex{1, 2})), Error);
}
