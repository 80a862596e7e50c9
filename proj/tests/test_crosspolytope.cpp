#include <gtest/gtest.h>

#include "bsaks/crosspolytope.hpp"
#include "bsaks/error.hpp"
#include "oracles.hpp"

using namespace bsaks;

namespace {

std::vector<FiniteVector> random_vectors(std::mt19937_64& rng, std::size_t d, std::size_t len) {
  std::vector<FiniteVector> out;
  for (std::size_t j = 0; j < d; ++j) {
    const oracle::Dense x = oracle::random_dense(rng, len, 2, 2);
    std::vector<FiniteVector::Entry> e;
    for (std::size_t i = 0; i < len; ++i) e.push_back({CoordIndex{i + 1}, x[i]});
    out.emplace_back(std::move(e));
  }
  return out;
}

std::vector<FiniteVector> units(std::size_t d) {
  std::vector<FiniteVector> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back(FiniteVector::unit(CoordIndex{i}));
  return out;
}

Rational l1_mass(const std::vector<Rational>& a) {
  Rational s = 0;
  for (const auto& x : a) s += abs(x);
  return s;
}

}  // namespace

TEST(Crosspolytope, UnitVectorValues) {
  EXPECT_EQ(crosspolytope_min(Space::lp(1), units(5)).value, Number(1));
  EXPECT_EQ(crosspolytope_min(Space::sup(), units(5)).value, Number(Rational(1, 5)));
  // {3,4,5} is admissible, so the Schreier norm is l1 there
  std::vector<FiniteVector> tail{FiniteVector::unit(CoordIndex{3}), FiniteVector::unit(CoordIndex{4}),
                                 FiniteVector::unit(CoordIndex{5})};
  EXPECT_EQ(crosspolytope_min(Space::schreier(), tail).value, Number(1));
}

TEST(Crosspolytope, ExactNeverExceedsGridAndWitnessIsFeasible) {
  std::mt19937_64 rng(21);
  for (const Space& s : {Space::lp(1), Space::sup(), Space::schreier()}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto v = random_vectors(rng, 1 + trial % 3, 4);
      CrosspolytopeOptions o;
      o.mode = MinMode::kExact;
      const MinimizationResult exact = crosspolytope_min(s, v, o);
      const MinimizationResult grid = grid_oracle(s, v, Rational(1, 12));
      ASSERT_TRUE(exact.value.is_exact());
      EXPECT_EQ(l1_mass(exact.alpha), 1);
      EXPECT_EQ(combination_norm(s, v, exact.alpha), exact.value);
      EXPECT_LE(exact.value, grid.value) << s.name();
      const MinimizationResult heur = crosspolytope_heuristic(s, v);
      EXPECT_GE(heur.value.to_double(), exact.value.to_double() - 1e-12);
    }
  }
}

TEST(Crosspolytope, GridIsAttainedWhenOptimumLiesOnTheGrid) {
  // min over the cross-polytope of |a1 - a2|_inf-ish: optimum at (1/2, 1/2)
  std::vector<FiniteVector> v{FiniteVector({{CoordIndex{1}, Rational(1)}, {CoordIndex{2}, Rational(1)}}),
                              FiniteVector({{CoordIndex{1}, Rational(1)}, {CoordIndex{2}, Rational(-1)}})};
  const MinimizationResult exact = crosspolytope_min(Space::sup(), v);
  const MinimizationResult grid = grid_oracle(Space::sup(), v, Rational(1, 4));
  EXPECT_EQ(exact.value, grid.value);
  EXPECT_EQ(exact.value, Number(1));
}

TEST(Crosspolytope, ExactModeRejectsNonPolyhedralNorms) {
  CrosspolytopeOptions o;
  o.mode = MinMode::kExact;
  EXPECT_THROW(crosspolytope_min(Space::lp(2), units(2), o), Error);
  const MinimizationResult h = crosspolytope_min(Space::lp(2), units(2));
  EXPECT_NEAR(h.value.to_double(), std::sqrt(0.5), 1e-3);
}

TEST(Crosspolytope, LexHelpers) {
  EXPECT_TRUE(lex_less({Rational(0), Rational(1)}, {Rational(1), Rational(0)}));
  EXPECT_TRUE(disjoint_supports(units(3)));
  EXPECT_FALSE(disjoint_supports({FiniteVector::unit(CoordIndex{1}), FiniteVector::unit(CoordIndex{1})}));
}
