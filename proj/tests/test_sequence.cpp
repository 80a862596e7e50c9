#include <gtest/gtest.h>

#include "bsaks/catalog.hpp"
#include "bsaks/error.hpp"
#include "bsaks/sequence.hpp"

using namespace bsaks;

TEST(IndexMap, PowersListsAndComposition) {
  const IndexMap cube = IndexMap::power(3);
  EXPECT_EQ(cube(4), 64u);
  const IndexMap list = IndexMap::explicit_list({2, 5, 9});
  EXPECT_EQ(list(3), 9u);
  EXPECT_EQ(list(5), 11u);
  EXPECT_EQ(compose(cube, list)(2), 125u);
  EXPECT_EQ(IndexMap::parse("k^2")(7), 49u);
  EXPECT_THROW(IndexMap::explicit_list({3, 3}), Error);
  EXPECT_THROW(IndexMap::explicit_list({0, 1}), Error);
}

TEST(Sequence, CesaroStageAveragesThePrefix) {
  const SequenceSpec base = catalog_sequence("c-signflip");
  const SequenceSpec mean = catalog_sequence("c-signflip|cesaro");
  for (std::uint64_t k = 1; k <= 12; ++k) {
    FiniteVector sum;
    for (std::uint64_t i = 1; i <= k; ++i) sum += generate(base, i);
    EXPECT_EQ(generate(mean, k), sum / Rational(static_cast<long long>(k))) << k;
  }
  const auto prefix = generate_prefix(mean, 12);
  ASSERT_EQ(prefix.size(), 12u);
  EXPECT_EQ(prefix[11], generate(mean, 12));
}

TEST(Sequence, SubsequenceComposesMaps) {
  const SequenceSpec s = catalog_sequence("ell1-basis|k^2|k^3");
  EXPECT_EQ(generate(s, 2), FiniteVector::unit(CoordIndex{64}));
  const SequenceSpec t = catalog_sequence("schreier-basis|list:3,7,20");
  EXPECT_EQ(generate(t, 2), FiniteVector::unit(CoordIndex{7}));
  EXPECT_EQ(generate(t, 4), FiniteVector::unit(CoordIndex{21}));
}

TEST(Sequence, TextRoundTrip) {
  for (const char* id : {"ell1-basis", "c-signflip|cesaro", "schreier-basis|k^3", "omega-example(3)", "c0-summing|scale:1/2"}) {
    const SequenceSpec s = catalog_sequence(id);
    const SequenceSpec back = SequenceSpec::from_text(s.to_text());
    EXPECT_EQ(back, s) << id;
    for (std::uint64_t k = 1; k <= 6; ++k) EXPECT_EQ(generate(back, k), generate(s, k));
  }
}

TEST(Sequence, ExplicitSequenceRepeatsTheLastVector) {
  std::vector<FiniteVector> v{FiniteVector::unit(CoordIndex{1}), FiniteVector::unit(CoordIndex{2})};
  const SequenceSpec s = explicit_sequence(v, Space::lp(1));
  EXPECT_EQ(generate(s, 5), v[1]);
  EXPECT_TRUE(s.traits().convergent);
}

TEST(Catalog, GeneratorsAndSetsResolve) {
  for (const auto& g : catalog_generators()) {
    if (!g.params.empty() || g.id == "explicit" || g.id == "constant" || g.id == "blocks") continue;
    const SequenceSpec s = catalog_sequence(g.id);
    EXPECT_NO_THROW(generate(s, 3)) << g.id;
    s.traits().home.validate(generate(s, 3));
  }
  for (const char* id : {"ball-l1", "ball-c0", "ball-c", "omega-A(4)", "A-eps(1/4)"}) {
    const CatalogSetRecord r = catalog_set(id);
    EXPECT_FALSE(r.members.empty()) << id;
    EXPECT_FALSE(r.analytic.empty()) << id;
  }
  EXPECT_THROW(catalog_sequence("no-such-sequence"), Error);
  EXPECT_THROW(catalog_set("ball-nowhere"), Error);
}

TEST(Catalog, BallRecordsCarryTheStatedValues) {
  auto value = [](const std::string& set, const std::string& q) {
    for (const auto& a : catalog_set(set).analytic) {
      if (a.quantity == q && a.kind == BoundKind::kExact) return a.value;
    }
    return Rational(-1);
  };
  EXPECT_EQ(value("ball-l1", "bs"), 2);
  EXPECT_EQ(value("ball-l1", "wbs"), 0);
  EXPECT_EQ(value("ball-c0", "bs"), 1);
  EXPECT_EQ(value("ball-c0", "wbs"), 0);
  EXPECT_EQ(value("ball-c", "bs"), 2);
}
