#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "bsaks/catalog.hpp"
#include "bsaks/crosspolytope.hpp"
#include "bsaks/distortion.hpp"
#include "bsaks/estimators.hpp"
#include "bsaks/norm.hpp"
#include "bsaks/ramsey.hpp"
#include "bsaks/suite.hpp"

using namespace bsaks;

namespace {

// tolerances and runtime limits
constexpr double kGridTolerance = 1e-9;
constexpr double kSignflipFloor = 1.98;
constexpr double kEll1Floor = 1.9;
constexpr double kGrowthFloor = 1.6;
constexpr double kTccaCeiling = 1.02;
constexpr double kCrit1Seconds = 5;
constexpr double kCrit4Seconds = 30;
constexpr double kCrit8Seconds = 120;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

IndexSet range(std::uint64_t a, std::uint64_t b) {
  IndexSet s(b - a + 1);
  std::iota(s.begin(), s.end(), a);
  return s;
}

std::string fmt(double x) {
  std::ostringstream o;
  o.precision(6);
  o << x;
  return o.str();
}

// shared with criterion 11
Number g_asep, g_signflip, g_ell1, g_tcca;

Outcome crit1() {
  const auto t0 = std::chrono::steady_clock::now();
  int bad = 0;
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const SequenceSpec s = catalog_sequence("omega-example(" + std::to_string(n) + ")|cesaro");
    for (std::uint64_t m = 1; m <= 30; ++m) {
      const Number v = norm(s.traits().home, generate(s, m));
      if (!v.is_exact() || v.exact() != std::max(Rational(1, n), Rational(1, m))) ++bad;
    }
  }
  const double t = seconds_since(t0);
  return {bad == 0 && t < kCrit1Seconds, "900 pairs, mismatches " + std::to_string(bad) + ", " + fmt(t) + " s"};
}

Outcome crit2() {
  const QuantityEstimate e = asep_upper(Space::lp(1), catalog_sequence("ell1-basis"), 10, 5);
  g_asep = e.value;
  const bool witness = e.witness_blocks && e.witness_blocks->first == IndexSet{1} && e.witness_blocks->second == IndexSet{2};
  return {e.value == Number(2) && witness,
          "value " + e.value.to_string() + " witness " +
              (e.witness_blocks ? index_set_string(e.witness_blocks->first) + index_set_string(e.witness_blocks->second) : "none")};
}

Outcome crit3() {
  const IndexSet w = range(1, 10);
  const SmResult sch = sm_delta_upper(Space::schreier(), catalog_sequence("schreier-basis"), w);
  // grid oracle on every exhaustively searched set of size <= 4
  double worst_gap = 0;
  for (const auto& s : sch.sets) {
    if (s.set.size() > 4) continue;
    std::vector<FiniteVector> v;
    for (auto i : s.set) v.push_back(FiniteVector::unit(CoordIndex{i}));
    const MinimizationResult g = grid_oracle(Space::schreier(), v, Rational(1, 12));
    worst_gap = std::max(worst_gap, std::abs(g.value.to_double() - s.result.value.to_double()));
  }
  const bool sch_ok = sch.estimate.value == Number(1) && sch.estimate.value.is_exact() && worst_gap <= kGridTolerance;
  const SmResult c0 = sm_delta_upper(Space::sup(), catalog_sequence("c0-basis"), w);
  const bool c0_ok = c0.estimate.value == Number(Rational(1, 5)) && c0.estimate.witness_set && *c0.estimate.witness_set == range(5, 9);
  return {sch_ok && c0_ok, "schreier " + sch.estimate.value.to_string() + " (grid gap " + fmt(worst_gap) + "), c0 " +
                               c0.estimate.value.to_string() + " witness " +
                               (c0.estimate.witness_set ? index_set_string(*c0.estimate.witness_set) : "none")};
}

Outcome crit4() {
  const auto t0 = std::chrono::steady_clock::now();
  const WindowProfile p = window_profile(Space::c(), catalog_sequence("c-signflip|cesaro"), 1000);
  const double t = seconds_since(t0);
  g_signflip = p.at(10);
  return {p.at(10).is_exact() && p.at(10).to_double() >= kSignflipFloor && t < kCrit4Seconds,
          "D(10,1000) = " + p.at(10).to_string() + ", " + fmt(t) + " s"};
}

Outcome crit5() {
  const WindowProfile p = window_profile(Space::lp(1), catalog_sequence("ell1-basis|cesaro"), 400);
  g_ell1 = p.at(20);
  return {p.at(20).is_exact() && p.at(20).to_double() >= kEll1Floor, "D(20,400) = " + p.at(20).to_string()};
}

Outcome crit6() {
  const SequenceSpec s = catalog_sequence("schreier-basis|k^3");
  const Number small = cesaro_distance(Space::schreier(), s, 110, 1010);
  const Number large = cesaro_distance(Space::schreier(), s, 420, 8020);
  return {small.to_double() >= kGrowthFloor && large > small,
          "N=10: " + fmt(small.to_double()) + ", N=20: " + fmt(large.to_double())};
}

Outcome crit7() {
  SubsequenceFamilyOptions o;
  o.use_powers = false;
  const QuantityEstimate e = tcca_upper(Space::sup(), catalog_sequence("c0-summing"), 500, o);
  g_tcca = e.value;
  return {e.bound_kind == BoundKind::kUpper && e.value.to_double() <= kTccaCeiling,
          "tcca (diagonal) = " + e.value.to_string() + " " + bound_kind_name(e.bound_kind)};
}

Outcome crit8() {
  const auto t0 = std::chrono::steady_clock::now();
  FuzzOptions o;
  o.seed = 0;
  o.trials = 200;
  o.dims = 8;
  o.horizon = 16;
  const VerificationReport r = fuzz_invariants(o);
  const double t = seconds_since(t0);
  std::string failed;
  for (const auto& c : r.checks) {
    if (!c.pass) failed += " " + c.id;
  }
  return {r.pass() && t < kCrit8Seconds,
          "200 trials, " + std::to_string(r.checks.size()) + " invariants" + (failed.empty() ? "" : ", failed:" + failed) + ", " +
              fmt(t) + " s"};
}

Outcome crit9() {
  const DichotomyResult a = dichotomy_search(HereditaryFamily::cardinality_cap(18, 3), 6);
  const HereditaryFamily sch = HereditaryFamily::schreier(18);
  const DichotomyResult b = dichotomy_search(sch, 5);
  const VerifyOutcome v = verify_dichotomy(sch, b);
  return {a.which == DichotomyCase::kA && a.d == 3 && b.which == DichotomyCase::kB && v.ok,
          std::string("cap(3): case ") + dichotomy_case_name(a.which) + " d=" + std::to_string(a.d) + ", schreier(18): case " +
              dichotomy_case_name(b.which) + (v.ok ? " verified" : " rejected: " + v.message)};
}

Outcome crit10() {
  DistortionOptions o;
  o.omega = Rational(1, 5);
  const DistortionResult r = distortion_blocks(Space::schreier(), catalog_sequence("schreier-basis"), o);
  const SmCheck c = sm_delta_check(Space::schreier(), r.spec, Number(Rational(4, 5)), 50);
  Number worst = 0;
  for (std::uint64_t k = 1; k <= 50; ++k) worst = max(worst, norm(Space::schreier(), generate(r.spec, k)));
  return {c.pass && worst <= Number(1), std::string("sm check ") + (c.pass ? "passed" : "failed") + " over " +
                                            std::to_string(c.sets_checked) + " sets, max norm " + worst.to_string()};
}

Outcome crit11() {
  auto stated = [](const std::string& set, const std::string& q, std::string* cite) -> std::optional<Rational> {
    for (const auto& a : catalog_set(set).analytic) {
      if (a.quantity == q && a.kind == BoundKind::kExact) {
        *cite = a.citation;
        return a.value;
      }
    }
    return std::nullopt;
  };
  bool ok = true;
  std::string detail;
  struct Want {
    const char* set;
    const char* q;
    int value;
  };
  for (const Want w : {Want{"ball-l1", "bs", 2}, Want{"ball-l1", "wbs", 0}, Want{"ball-c0", "bs", 1}, Want{"ball-c0", "wbs", 0},
                       Want{"ball-c", "bs", 2}}) {
    std::string cite;
    const auto v = stated(w.set, w.q, &cite);
    if (!v || *v != w.value || cite.empty()) {
      ok = false;
      detail += std::string(" ") + w.set + "/" + w.q + " mismatch;";
    }
  }
  // lower evidence <= stated <= upper evidence
  const Rational slack(1, 50);
  ok = ok && g_asep <= Number(2) && g_ell1 <= Number(2) && g_signflip <= Number(2) &&
       g_tcca <= Number(Rational(1) + slack);
  for (const char* id : {"ball-l1", "ball-c0", "ball-c"}) {
    const SetReport r = set_quantities(catalog_set(id));
    if (!r.consistent) {
      ok = false;
      detail += std::string(" ") + id + " evidence inconsistent;";
    }
  }
  return {ok, "stated values and citations present; asep " + g_asep.to_string() + ", D ell1 " + g_ell1.to_string() +
                  ", D c " + g_signflip.to_string() + ", tcca c0 " + g_tcca.to_string() + detail};
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{crit1, crit2, crit3, crit4, crit5, crit6,
                                                       crit7, crit8, crit9, crit10, crit11};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
