#include <gtest/gtest.h>

#include "bsaks/catalog.hpp"
#include "bsaks/distortion.hpp"
#include "bsaks/error.hpp"
#include "bsaks/estimators.hpp"
#include "bsaks/norm.hpp"

using namespace bsaks;

namespace {

Number brute_window(const Space& s, const std::vector<FiniteVector>& x, std::size_t m) {
  Number best = 0;
  for (std::size_t k = m; k <= x.size(); ++k) {
    for (std::size_t l = k + 1; l <= x.size(); ++l) best = max(best, norm(s, x[k - 1] - x[l - 1]));
  }
  return best;
}

// every pair F < H of equal size <= b inside {1..n}
Number brute_asep(const Space& s, const std::vector<FiniteVector>& x, std::size_t b) {
  const std::size_t n = x.size();
  std::optional<Number> best;
  for (std::uint64_t f = 1; f < (1u << n); ++f) {
    const int size = __builtin_popcountll(f);
    if (static_cast<std::size_t>(size) > b) continue;
    const int top = 63 - __builtin_clzll(f);
    for (std::uint64_t h = 1; h < (1u << n); ++h) {
      if (__builtin_popcountll(h) != size || __builtin_ctzll(h) <= top) continue;
      FiniteVector d;
      for (std::size_t i = 0; i < n; ++i) {
        if (f >> i & 1) d += x[i];
        if (h >> i & 1) d -= x[i];
      }
      const Number v = norm(s, d / Rational(size));
      if (!best || v < *best) best = v;
    }
  }
  return *best;
}

std::size_t brute_admissible(std::size_t n) {
  std::size_t count = 0;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<std::uint64_t>(__builtin_popcountll(m)) <= static_cast<std::uint64_t>(__builtin_ctzll(m)) + 1) ++count;
  }
  return count;
}

IndexSet range(std::uint64_t a, std::uint64_t b) {
  IndexSet s;
  for (auto i = a; i <= b; ++i) s.push_back(i);
  return s;
}

}  // namespace

TEST(WindowProfile, MatchesPairwiseBruteForce) {
  for (const char* id : {"c-signflip|cesaro", "ell1-basis|cesaro", "schreier-basis|k^2|cesaro"}) {
    const SequenceSpec s = catalog_sequence(id);
    const Space space = s.traits().home;
    const auto x = generate_prefix(s, 14);
    const WindowProfile p = window_profile(space, s, 14);
    for (std::size_t m = 1; m <= 14; ++m) EXPECT_EQ(p.at(m), brute_window(space, x, m)) << id << " m=" << m;
    for (std::size_t m = 2; m <= 14; ++m) EXPECT_LE(p.at(m), p.at(m - 1));
  }
}

TEST(WindowProfile, CesaroDistanceAgreesWithProfileArgmax) {
  const SequenceSpec s = catalog_sequence("ell1-basis");
  const WindowProfile p = window_profile(Space::lp(1), s.cesaro(), 40);
  const auto [k, l] = p.argmax.at(4);
  EXPECT_EQ(cesaro_distance(Space::lp(1), s, k, l), p.at(5));
}

TEST(Ca, ConvergentSequencesAreExact) {
  std::vector<FiniteVector> v{FiniteVector::unit(CoordIndex{1}), FiniteVector::unit(CoordIndex{2})};
  const QuantityEstimate e = ca_estimate(Space::lp(1), explicit_sequence(v, Space::lp(1)), 20);
  EXPECT_EQ(e.bound_kind, BoundKind::kExact);
  EXPECT_EQ(e.value, Number(0));
  const QuantityEstimate basis = ca_estimate(Space::lp(1), catalog_sequence("ell1-basis"), 20);
  EXPECT_EQ(basis.value, Number(2));
  EXPECT_EQ(head_index(400, Rational(1, 20)), 20u);
  EXPECT_EQ(head_index(5, Rational(1, 20)), 1u);
}

TEST(Asep, MatchesBruteForceOnSmallPrefixes) {
  for (const char* id : {"ell1-basis", "c0-basis", "schreier-basis", "c-signflip"}) {
    const SequenceSpec s = catalog_sequence(id);
    const Space space = s.traits().home;
    const auto x = generate_prefix(s, 8);
    const QuantityEstimate e = asep_upper(space, x, 4);
    EXPECT_EQ(e.value, brute_asep(space, x, 4)) << id;
    ASSERT_TRUE(e.witness_blocks);
    EXPECT_LT(e.witness_blocks->first.back(), e.witness_blocks->second.front());
  }
}

TEST(Asep, SampledIsNeverBelowExhaustive) {
  const SequenceSpec s = catalog_sequence("schreier-basis");
  const QuantityEstimate full = asep_upper(Space::schreier(), s, 10, 5);
  const QuantityEstimate a = asep_sampled(Space::schreier(), s, 10, 5, 500, 3);
  const QuantityEstimate b = asep_sampled(Space::schreier(), s, 10, 5, 500, 3);
  EXPECT_GE(a.value, full.value);
  EXPECT_EQ(a.value, b.value);
}

TEST(Sm, CandidateSetCountMatchesEnumeration) {
  for (std::uint64_t n : {4u, 7u, 10u}) {
    const CandidateSets c = candidate_sets(range(1, n), Admissibility::kSchreier, SetStrategy::kExhaustive, 100000, false);
    EXPECT_EQ(c.sets.size(), brute_admissible(n)) << n;
    for (const auto& f : c.sets) EXPECT_LE(f.size(), f.front());
  }
}

TEST(Sm, BasisValues) {
  const SmResult sch = sm_delta_upper(Space::schreier(), catalog_sequence("schreier-basis"), range(1, 10));
  EXPECT_EQ(sch.estimate.value, Number(1));
  const SmResult c0 = sm_delta_upper(Space::sup(), catalog_sequence("c0-basis"), range(1, 10));
  EXPECT_EQ(c0.estimate.value, Number(Rational(1, 5)));
  EXPECT_EQ(*c0.estimate.witness_set, range(5, 9));
  const SmResult l1 = sm_delta_upper(Space::lp(1), catalog_sequence("ell1-basis"), range(1, 8));
  EXPECT_EQ(l1.estimate.value, Number(1));
}

TEST(Sm, CheckReportsTheFirstViolation) {
  const SmCheck pass = sm_delta_check(Space::schreier(), catalog_sequence("schreier-basis"), Number(1), 10);
  EXPECT_TRUE(pass.pass);
  EXPECT_TRUE(pass.certified);
  const SmCheck fail = sm_delta_check(Space::sup(), catalog_sequence("c0-basis"), Number(Rational(1, 2)), 10);
  ASSERT_FALSE(fail.pass);
  EXPECT_EQ(fail.violations.front().set, range(3, 5));
}

TEST(Diagonal, IndicesApproachThePointwiseLimit) {
  const SequenceSpec s = catalog_sequence("c0-summing");
  const auto idx = diagonal_indices(s, 6);
  ASSERT_EQ(idx.size(), 6u);
  for (std::size_t i = 1; i < idx.size(); ++i) EXPECT_LT(idx[i - 1], idx[i]);
}

TEST(Tcca, NeverAboveTheIdentityMap) {
  const SequenceSpec s = catalog_sequence("c0-summing");
  const QuantityEstimate id = cca_estimate(Space::sup(), s, 120);
  const QuantityEstimate t = tcca_upper(Space::sup(), s, 120);
  EXPECT_LE(t.value, id.value);
  EXPECT_EQ(t.bound_kind, BoundKind::kUpper);
}

TEST(Wu, CoordinateFamilyOnBases) {
  WuOptions o;
  o.families = {"coordinate", "admissible-interval-sign"};
  const QuantityEstimate sch = wu_lower(Space::schreier(), catalog_sequence("schreier-basis"), FiniteVector(), 50, o);
  EXPECT_GT(sch.value, Number(Rational(1, 2)));
  const QuantityEstimate l1 = wu_lower(Space::sup(), catalog_sequence("ell1-basis"), FiniteVector(), 50);
  EXPECT_EQ(l1.value, Number(0));
  o.families = {"no-such-family"};
  EXPECT_THROW(wu_lower(Space::sup(), catalog_sequence("c0-basis"), FiniteVector(), 20, o), Error);
}

TEST(SetQuantities, BallRecordsAreConsistent) {
  for (const char* id : {"ball-l1", "ball-c0"}) {
    const SetReport r = set_quantities(catalog_set(id));
    EXPECT_TRUE(r.consistent) << id;
    EXPECT_FALSE(r.evidence.empty());
  }
}

TEST(Distortion, SchreierBlocksStayInTheUnitBall) {
  const DistortionResult r = distortion_blocks(Space::schreier(), catalog_sequence("schreier-basis"));
  EXPECT_LE(r.max_norm, Number(1));
  for (std::uint64_t k = 1; k <= 20; ++k) EXPECT_LE(norm(Space::schreier(), generate(r.spec, k)), Number(1));
  EXPECT_THROW(distortion_blocks(Space::sup(), catalog_sequence("c0-basis")), Error);
}
