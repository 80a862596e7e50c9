#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "bsaks/error.hpp"
#include "bsaks/report.hpp"
#include "bsaks/suite.hpp"

using namespace bsaks;

TEST(Config, ParsesKnownKeysAndRejectsOthers) {
  const std::string path = testing::TempDir() + "bsaks_config.txt";
  {
    std::ofstream out(path);
    out << "# smaller run\nomega_max = 12\ndistortion_omega = 1/4\nfloat_tolerance = 1e-6\n";
  }
  const SuiteConfig c = load_suite_config(path);
  EXPECT_EQ(c.omega_max, 12u);
  EXPECT_EQ(c.distortion_omega, Rational(1, 4));
  EXPECT_DOUBLE_EQ(c.float_tolerance, 1e-6);
  EXPECT_EQ(c.signflip_horizon, SuiteConfig{}.signflip_horizon);

  SuiteConfig d;
  EXPECT_THROW(apply_config_value(d, "no_such_key", "1"), Error);
  EXPECT_THROW(apply_config_value(d, "omega_max", "many"), Error);
  std::remove(path.c_str());
}

TEST(Config, DefaultTextLoadsBack) {
  const std::string path = testing::TempDir() + "bsaks_default.txt";
  {
    std::ofstream out(path);
    out << default_config_text();
  }
  const SuiteConfig c = load_suite_config(path);
  EXPECT_EQ(c.tcca_horizon, SuiteConfig{}.tcca_horizon);
  EXPECT_EQ(c.fuzz_trials, SuiteConfig{}.fuzz_trials);
  std::remove(path.c_str());
}

TEST(Suite, IdsAreSortedAndUnique) {
  const auto ids = paper_check_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
  EXPECT_THROW(run_paper_check("no-such-check", SuiteConfig{}), Error);
}

TEST(Suite, ReportsAreByteReproducibleWithoutTimings) {
  SuiteConfig c;
  const std::vector<std::string> only{"asep-ell1", "ramsey-cardinality-cap", "schreier-sm"};
  const std::string a = report_json(run_paper_suite(c, only)).dump(2);
  const std::string b = report_json(run_paper_suite(c, only)).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("runtime"), std::string::npos);
  c.timings = true;
  EXPECT_NE(report_json(run_paper_suite(c, {"asep-ell1"})).dump().find("runtime"), std::string::npos);
}

TEST(Suite, FailingRecordsCarryAReproduceCommand) {
  VerificationReport r;
  CheckRecord ok;
  ok.id = "b";
  ok.pass = true;
  CheckRecord bad;
  bad.id = "a";
  bad.reproduce = "bsaks verify paper --only a";
  r.checks = {ok, bad};
  r.sort_by_id();
  EXPECT_EQ(r.checks.front().id, "a");
  EXPECT_FALSE(r.pass());
  const auto j = report_json(r);
  const std::string text = j.dump();
  EXPECT_NE(text.find("--only a"), std::string::npos);
  EXPECT_LT(report_csv(r).find("a,"), report_csv(r).find("b,"));
}

TEST(Fuzz, SmallRunIsDeterministicAndGreen) {
  FuzzOptions o;
  o.seed = 5;
  o.trials = 15;
  o.dims = 4;
  o.horizon = 8;
  const VerificationReport a = fuzz_invariants(o);
  const VerificationReport b = fuzz_invariants(o);
  EXPECT_TRUE(a.pass());
  EXPECT_EQ(report_json(a).dump(), report_json(b).dump());
}
