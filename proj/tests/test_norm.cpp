#include <gtest/gtest.h>

#include "bsaks/functional.hpp"
#include "bsaks/norm.hpp"
#include "oracles.hpp"

using namespace bsaks;

namespace {

FiniteVector from_dense(const oracle::Dense& x) {
  std::vector<FiniteVector::Entry> e;
  for (std::size_t i = 0; i < x.size(); ++i) e.push_back({CoordIndex{i + 1}, x[i]});
  return FiniteVector(std::move(e));
}

}  // namespace

TEST(Norm, MatchesBruteForceOnRandomVectors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const oracle::Dense x = oracle::random_dense(rng, 1 + trial % 12);
    const FiniteVector v = from_dense(x);
    EXPECT_EQ(norm(Space::lp(1), v), Number(oracle::l1(x)));
    EXPECT_EQ(norm(Space::sup(), v), Number(oracle::sup(x)));
    EXPECT_EQ(norm(Space::schreier(), v), Number(oracle::schreier(x))) << v.to_string();
  }
}

TEST(Norm, WeightedAlphaIsMaxOfScaledL1AndSup) {
  std::mt19937_64 rng(12);
  const Rational a(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    const oracle::Dense x = oracle::random_dense(rng, 1 + trial % 9);
    EXPECT_EQ(norm(Space::weighted_alpha(a), from_dense(x)), Number(std::max(Rational(a * oracle::l1(x)), oracle::sup(x))));
  }
}

TEST(Norm, ConvergentSequencesUseTheTail) {
  const FiniteVector v({{CoordIndex{1}, Rational(-3)}}, Rational(2));
  EXPECT_EQ(norm(Space::c(), v), Number(3));
  EXPECT_EQ(norm(Space::c(), FiniteVector::constant_tail(Rational(-1, 2))), Number(Rational(1, 2)));
}

TEST(Norm, L1SumAddsBlockNorms) {
  // block n carries |.|_{1/n}
  const Space omega = Space::parse_name("omega");
  FiniteVector v({{CoordIndex{2, 1}, Rational(1)}, {CoordIndex{2, 2}, Rational(1)}, {CoordIndex{3, 1}, Rational(-1)}});
  EXPECT_EQ(norm(omega, v), Number(2));
  FiniteVector w({{CoordIndex{4, 1}, Rational(1)}, {CoordIndex{4, 2}, Rational(1)}, {CoordIndex{4, 3}, Rational(1)}});
  EXPECT_EQ(norm(omega, w), Number(1));
}

TEST(Norm, LpIsFloatingAndTriangleHolds) {
  std::mt19937_64 rng(13);
  const Space l2 = Space::lp(2);
  for (int trial = 0; trial < 50; ++trial) {
    const FiniteVector a = from_dense(oracle::random_dense(rng, 6));
    const FiniteVector b = from_dense(oracle::random_dense(rng, 6));
    const Number na = norm(l2, a);
    EXPECT_FALSE(na.is_exact());
    EXPECT_LE(norm(l2, a + b).to_double(), na.to_double() + norm(l2, b).to_double() + 1e-12);
  }
}

TEST(Norm, NormingFunctionalAttainsTheNorm) {
  std::mt19937_64 rng(14);
  for (const Space& s : {Space::lp(1), Space::sup(), Space::schreier()}) {
    for (int trial = 0; trial < 40; ++trial) {
      const FiniteVector v = from_dense(oracle::random_dense(rng, 1 + trial % 8));
      FiniteVector f;
      Rational lim;
      const Number n = norm_with_functional(s, v, f, lim);
      Rational value = 0;
      for (const auto& [idx, c] : f.entries()) value += c * v.at(idx);
      EXPECT_EQ(Number(value), n) << s.name() << " " << v.to_string();
    }
  }
}

TEST(Functional, PairingAndDualBound) {
  const Functional e3 = Functional::coordinate(CoordIndex{3});
  const FiniteVector v({{CoordIndex{3}, Rational(5, 2)}});
  EXPECT_EQ(pair(e3, v), Rational(5, 2));
  EXPECT_EQ(dual_norm_bound(Space::sup(), e3), Number(1));

  const Functional s = Functional::sign_combination(FiniteVector({{CoordIndex{1}, Rational(1)}, {CoordIndex{2}, Rational(-1)}}));
  EXPECT_EQ(dual_norm_bound(Space::sup(), s), Number(2));
  EXPECT_EQ(dual_norm_bound(Space::lp(1), s), Number(1));
  EXPECT_TRUE(within_budget(Space::lp(1), s));
  EXPECT_FALSE(within_budget(Space::sup(), s));
}
