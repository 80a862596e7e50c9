#include <gtest/gtest.h>

#include "bsaks/error.hpp"
#include "bsaks/ramsey.hpp"

using namespace bsaks;

namespace {

// combinations of {1..n} of size t, lexicographic
template <class F>
bool each_subset(std::uint64_t n, std::uint64_t t, F&& f) {
  IndexSet s(t);
  for (std::uint64_t i = 0; i < t; ++i) s[i] = i + 1;
  if (t > n) return false;
  while (true) {
    if (f(s)) return true;
    std::int64_t i = static_cast<std::int64_t>(t) - 1;
    while (i >= 0 && s[i] == n - t + i + 1) --i;
    if (i < 0) return false;
    ++s[i];
    for (std::uint64_t j = i + 1; j < t; ++j) s[j] = s[j - 1] + 1;
  }
}

std::optional<IndexSet> brute_extract(const Coloring& c, std::uint64_t t) {
  std::optional<IndexSet> found;
  each_subset(c.n, t, [&](const IndexSet& m) {
    std::optional<int> color;
    const bool mono = !each_subset(t, c.d, [&](const IndexSet& pos) {
      IndexSet sub;
      for (auto p : pos) sub.push_back(m[p - 1]);
      const int k = c.color(sub);
      if (!color) color = k;
      return k != *color;
    });
    if (mono) found = m;
    return mono;
  });
  return found;
}

}  // namespace

TEST(SetMask, RoundTrip) {
  const IndexSet s{1, 4, 9};
  EXPECT_EQ(mask_of(s), 0b100001001u);
  EXPECT_EQ(set_of(mask_of(s)), s);
}

TEST(Hereditary, RulesAndCounterexamples) {
  const HereditaryFamily sch = HereditaryFamily::schreier(10);
  EXPECT_TRUE(sch.contains(IndexSet{3, 4, 5}));
  EXPECT_FALSE(sch.contains(IndexSet{2, 3, 4}));
  EXPECT_TRUE(sch.contains(IndexSet{}));
  const HereditaryFamily cap = HereditaryFamily::parse("cardinality-cap:3", 10);
  EXPECT_TRUE(cap.contains(IndexSet{1, 2, 3}));
  EXPECT_FALSE(cap.contains(IndexSet{1, 2, 3, 4}));
  EXPECT_FALSE(hereditary_counterexample(sch));

  const auto bad = hereditary_counterexample(HereditaryFamily::explicit_list(4, {{1, 2}}));
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->first, (IndexSet{1, 2}));
  EXPECT_EQ(bad->second, IndexSet{1});
  EXPECT_THROW(HereditaryFamily::explicit_list(3, {{1, 5}}), Error);
  EXPECT_THROW(HereditaryFamily::parse("no-such-family", 5), Error);
}

TEST(Dichotomy, CardinalityCapGivesCaseA) {
  for (std::uint64_t d = 0; d <= 4; ++d) {
    const HereditaryFamily f = HereditaryFamily::cardinality_cap(12, d);
    const DichotomyResult r = dichotomy_search(f, 6);
    ASSERT_EQ(r.which, DichotomyCase::kA) << d;
    EXPECT_EQ(r.d, d);
    EXPECT_TRUE(verify_dichotomy(f, r).ok);
  }
}

TEST(Dichotomy, SchreierGivesVerifiedCaseB) {
  const HereditaryFamily f = HereditaryFamily::schreier(18);
  const DichotomyResult r = dichotomy_search(f, 5);
  ASSERT_EQ(r.which, DichotomyCase::kB);
  EXPECT_EQ(r.m.size(), 5u);
  const VerifyOutcome v = verify_dichotomy(f, r);
  EXPECT_TRUE(v.ok) << v.message;
}

TEST(Dichotomy, VerifierRejectsTamperedCertificates) {
  const HereditaryFamily f = HereditaryFamily::schreier(18);
  DichotomyResult r = dichotomy_search(f, 5);
  ASSERT_EQ(r.which, DichotomyCase::kB);
  r.f.front() += 2;
  EXPECT_FALSE(verify_dichotomy(f, r).ok);

  DichotomyResult a = dichotomy_search(HereditaryFamily::cardinality_cap(12, 2), 5);
  a.d = 3;
  EXPECT_FALSE(verify_dichotomy(HereditaryFamily::cardinality_cap(12, 2), a).ok);
}

TEST(Ramsey, ExtractMatchesBruteForce) {
  const std::vector<Coloring> colorings{constant_coloring(2, 10, 1), parity_sum_coloring(2, 10), parity_sum_coloring(3, 9),
                                        pentagon_coloring(), coloring_by_name("parity-sum", 1, 8)};
  for (const auto& c : colorings) {
    for (std::uint64_t t = c.d; t <= 5; ++t) {
      const RamseyResult r = ramsey_extract(c, t);
      const auto want = brute_extract(c, t);
      EXPECT_EQ(r.set, want) << c.name << " t=" << t;
      if (r.set) {
        EXPECT_TRUE(verify_monochromatic(c, *r.set).ok);
      }
    }
  }
  EXPECT_FALSE(ramsey_extract(pentagon_coloring(), 3).set);
}

TEST(Ramsey, ColoringFromText) {
  const Coloring c = coloring_from_text(parse_text("d = 2\nn = 4\ndefault = 0\nsubset {\n  set = 1,2\n  color = 1\n}\n"));
  EXPECT_EQ(c.color(IndexSet{1, 2}), 1);
  EXPECT_EQ(c.color(IndexSet{2, 3}), 0);
  const RamseyResult r = ramsey_extract(c, 3);
  ASSERT_TRUE(r.set);
  EXPECT_EQ(*r.set, (IndexSet{1, 3, 4}));
}

TEST(Ramsey, CapsAreEnforced) {
  EXPECT_THROW(ramsey_extract(constant_coloring(2, 30), 3), Error);
  EXPECT_THROW(ramsey_extract(constant_coloring(4, 10), 5), Error);
}
