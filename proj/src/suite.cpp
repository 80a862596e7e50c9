#include "bsaks/suite.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "bsaks/error.hpp"
#include "bsaks/norm.hpp"
#include "bsaks/text_format.hpp"

namespace bsaks {

namespace {

std::uint64_t to_count(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const auto x = std::stoull(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kParse, "config key '" + key + "' expects a count, got '" + v + "'");
}

struct Key {
  const char* name;
  std::function<void(SuiteConfig&, const std::string&)> set;
  std::function<std::string(const SuiteConfig&)> get;
};

#define BSAKS_COUNT_KEY(field) \
  Key { #field, [](SuiteConfig& c, const std::string& v) { c.field = to_count(#field, v); }, \
        [](const SuiteConfig& c) { return std::to_string(c.field); } }

const std::vector<Key>& keys() {
  static const std::vector<Key> table{
      BSAKS_COUNT_KEY(omega_max),
      BSAKS_COUNT_KEY(signflip_horizon),
      BSAKS_COUNT_KEY(ell1_horizon),
      BSAKS_COUNT_KEY(sm_window),
      BSAKS_COUNT_KEY(grid_steps),
      BSAKS_COUNT_KEY(asep_horizon),
      BSAKS_COUNT_KEY(asep_block),
      BSAKS_COUNT_KEY(tcca_horizon),
      BSAKS_COUNT_KEY(growth_small),
      BSAKS_COUNT_KEY(growth_large),
      Key{"distortion_omega", [](SuiteConfig& c, const std::string& v) { c.distortion_omega = parse_rational(v); },
          [](const SuiteConfig& c) { return to_string(c.distortion_omega); }},
      BSAKS_COUNT_KEY(distortion_horizon),
      BSAKS_COUNT_KEY(ramsey_ground),
      BSAKS_COUNT_KEY(fuzz_seed),
      BSAKS_COUNT_KEY(fuzz_trials),
      BSAKS_COUNT_KEY(fuzz_dims),
      BSAKS_COUNT_KEY(fuzz_horizon),
      BSAKS_COUNT_KEY(fuzz_trial_cap),
      Key{"float_tolerance", [](SuiteConfig& c, const std::string& v) { c.float_tolerance = std::stod(v); },
          [](const SuiteConfig& c) {
            std::ostringstream s;
            s << c.float_tolerance;
            return s.str();
          }},
      Key{"timings", [](SuiteConfig& c, const std::string& v) { c.timings = v == "true" || v == "1"; },
          [](const SuiteConfig& c) { return std::string(c.timings ? "true" : "false"); }},
  };
  return table;
}

#undef BSAKS_COUNT_KEY

}  // namespace

void apply_config_value(SuiteConfig& config, const std::string& key, const std::string& value) {
  for (const auto& k : keys()) {
    if (key == k.name) {
      k.set(config, value);
      return;
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown config key '" + key + "'");
}

SuiteConfig load_suite_config(const std::string& path) {
  SuiteConfig c;
  const TextBlock block = read_text_file(path);
  if (!block.children.empty()) throw Error(ErrorCode::kParse, "config files hold key = value lines only");
  for (const auto& [k, v] : block.values) apply_config_value(c, k, v);
  return c;
}

std::string default_config_text() {
  SuiteConfig c;
  std::string out;
  for (const auto& k : keys()) out += std::string(k.name) + " = " + k.get(c) + "\n";
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

std::string q(const Rational& x) { return to_string(x); }

CheckRecord record(std::string id, std::string citation) {
  CheckRecord r;
  r.id = std::move(id);
  r.citation = std::move(citation);
  r.tolerance = "0 (exact)";
  r.reproduce = "bsaks verify paper --only " + r.id;
  return r;
}

CheckRecord check_omega_norm(const SuiteConfig& cfg) {
  CheckRecord r = record("omega-example-norm", "weighted l1-sum example: ||(1/m)(x^n_1 + ... + x^n_m)|| = max{1/n, 1/m}");
  r.relation = "== max{1/n,1/m} for all 1 <= n,m <= " + std::to_string(cfg.omega_max);
  std::uint64_t checked = 0, bad = 0;
  for (std::uint64_t n = 1; n <= cfg.omega_max; ++n) {
    const SequenceSpec s = catalog_sequence("omega-example(" + std::to_string(n) + ")|cesaro");
    const Space space = s.traits().home;
    for (std::uint64_t m = 1; m <= cfg.omega_max; ++m) {
      const Number v = norm(space, generate(s, m));
      const Rational want = std::max(Rational(1, n), Rational(1, m));
      ++checked;
      if (!v.is_exact() || v.exact() != want) {
        if (!bad) r.detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " got " + v.to_string();
        ++bad;
      }
    }
  }
  r.values = {{"pairs", std::to_string(checked)}, {"mismatches", std::to_string(bad)}};
  r.bound_kinds = {"exact"};
  r.pass = bad == 0;
  return r;
}

CheckRecord check_asep(const SuiteConfig& cfg) {
  CheckRecord r = record("asep-ell1", "l1 basis: averaged disjoint blocks keep norm 2, so asep = 2");
  const QuantityEstimate e = asep_upper(Space::lp(1), catalog_sequence("ell1-basis"), cfg.asep_horizon, cfg.asep_block);
  r.values = {{"value", e.value.to_string()},
              {"F", index_set_string(e.witness_blocks->first)},
              {"H", index_set_string(e.witness_blocks->second)}};
  r.bound_kinds = {bound_kind_name(e.bound_kind)};
  r.relation = "value == 2 and witness == ({1},{2})";
  r.pass = e.value == Number(2) && e.witness_blocks->first == IndexSet{1} && e.witness_blocks->second == IndexSet{2};
  return r;
}

CheckRecord check_schreier_sm(const SuiteConfig& cfg) {
  CheckRecord r = record("schreier-sm", "Schreier basis: admissible F gives ||sum a_i e_i|| >= sum |a_i|, so the spreading constant is 1");
  IndexSet window(cfg.sm_window);
  std::iota(window.begin(), window.end(), 1);
  const SequenceSpec s = catalog_sequence("schreier-basis");
  const SmResult sm = sm_delta_upper(Space::schreier(), s, window);
  Number grid_min;
  bool first = true;
  std::uint64_t grids = 0;
  for (const auto& w : sm.sets) {
    if (w.set.size() > 4) continue;
    std::vector<FiniteVector> vs;
    for (auto k : w.set) vs.push_back(generate(s, k));
    const MinimizationResult g = grid_oracle(Space::schreier(), vs, Rational(1, cfg.grid_steps));
    ++grids;
    if (first || g.value < grid_min) grid_min = g.value;
    first = false;
  }
  Number sub_min;
  first = true;
  for (const auto& w : sm.sets) {
    if (w.set.size() > 4) continue;
    if (first || w.result.value < sub_min) sub_min = w.result.value;
    first = false;
  }
  const double gap = std::abs(grid_min.to_double() - sub_min.to_double());
  r.values = {{"value", sm.estimate.value.to_string()},
              {"sets", std::to_string(sm.sets.size())},
              {"grid_sets", std::to_string(grids)},
              {"grid_min", grid_min.to_string()},
              {"lp_min_small_sets", sub_min.to_string()}};
  r.bound_kinds = {bound_kind_name(sm.estimate.bound_kind), "grid-oracle"};
  r.relation = "value == 1 (face LP); |grid - LP| <= 1e-9 over admissible F with #F <= 4";
  r.tolerance = "0 for the LP value, 1e-9 for the grid agreement";
  r.pass = sm.estimate.value == Number(1) && sm.estimate.bound_kind == BoundKind::kUpper && gap <= 1e-9;
  return r;
}

CheckRecord check_c0_sm(const SuiteConfig& cfg) {
  CheckRecord r = record("c0-sm", "c0 basis: min ||sum a_i e_i||_inf over sum |a_i| = 1 is 1/#F");
  IndexSet window(cfg.sm_window);
  std::iota(window.begin(), window.end(), 1);
  const SmResult sm = sm_delta_upper(Space::sup(), catalog_sequence("c0-basis"), window);
  r.values = {{"value", sm.estimate.value.to_string()}, {"F", index_set_string(*sm.estimate.witness_set)}};
  r.bound_kinds = {bound_kind_name(sm.estimate.bound_kind)};
  r.relation = "value == 1/5 and F == {5,...,9}";
  r.pass = sm.estimate.value == Number(Rational(1, 5)) && *sm.estimate.witness_set == IndexSet{5, 6, 7, 8, 9};
  return r;
}

CheckRecord check_signflip(const SuiteConfig& cfg) {
  CheckRecord r = record("c-signflip-cesaro", "Cesaro means of the sign-flip sequence in c: ||y_m - y_n|| >= 2 - 2m/n");
  const WindowProfile p = window_profile(Space::c(), catalog_sequence("c-signflip|cesaro"), cfg.signflip_horizon);
  const Rational bound = 2 - Rational(20, static_cast<long long>(cfg.signflip_horizon));
  const Number v = p.at(10);
  r.values = {{"D(10,N)", v.to_string()}, {"N", std::to_string(cfg.signflip_horizon)}, {"bound", q(bound)}};
  r.bound_kinds = {"exact"};
  r.relation = "D(10, N) >= 2 - 20/N";
  r.pass = v.is_exact() && v >= Number(bound);
  return r;
}

CheckRecord check_ell1_cesaro(const SuiteConfig& cfg) {
  CheckRecord r = record("ell1-cesaro", "l1 lower bound on Cesaro differences: ||y_m - y_n|| >= 2 delta (1 - n/m), delta = 1");
  const WindowProfile p = window_profile(Space::lp(1), catalog_sequence("ell1-basis|cesaro"), cfg.ell1_horizon);
  const Rational bound = 2 * (1 - Rational(20, static_cast<long long>(cfg.ell1_horizon)));
  const Number v = p.at(20);
  r.values = {{"D(20,N)", v.to_string()}, {"N", std::to_string(cfg.ell1_horizon)}, {"bound", q(bound)}};
  r.bound_kinds = {"exact"};
  r.relation = "D(20, N) >= 2 (1 - 20/N)";
  r.pass = v.is_exact() && v >= Number(bound);
  return r;
}

CheckRecord check_growth(const SuiteConfig& cfg) {
  CheckRecord r = record("schreier-cesaro-growth",
                         "Schreier basis along k^3: Cesaro difference at (N + N^2, N + N^3) tends to 2c with c = 1");
  const SequenceSpec s = catalog_sequence("schreier-basis|k^3");
  auto at = [&](std::uint64_t n) {
    return cesaro_distance(Space::schreier(), s, n + n * n, n + n * n * n);
  };
  const Number small = at(cfg.growth_small);
  const Number large = at(cfg.growth_large);
  r.values = {{"N_small", std::to_string(cfg.growth_small)},
              {"value_small", small.to_string()},
              {"N_large", std::to_string(cfg.growth_large)},
              {"value_large", large.to_string()}};
  r.bound_kinds = {"exact", "exact"};
  r.relation = "value_small >= 1.6 and value_large > value_small";
  r.pass = small >= Number(Rational(8, 5)) && large > small;
  return r;
}

CheckRecord check_tcca(const SuiteConfig& cfg) {
  CheckRecord r = record("c0-summing-tcca", "c0 summing basis: tcca <= ||x|| <= 1 via the diagonal extraction");
  const SequenceSpec s = catalog_sequence("c0-summing");
  const QuantityEstimate all = tcca_upper(Space::sup(), s, cfg.tcca_horizon);
  const auto idx = diagonal_indices(s, cfg.tcca_horizon);
  CaOptions ca;
  ca.keep_profile = false;
  const QuantityEstimate diag =
      cca_estimate(Space::sup(), s.subsequence(IndexMap::explicit_list(idx, "diagonal")), cfg.tcca_horizon, ca);
  std::string maps;
  for (const auto& [k, v] : all.params) {
    if (k == "maps") maps = v;
  }
  r.values = {{"tcca_upper", all.value.to_string()}, {"diagonal", diag.value.to_string()}, {"maps", maps}};
  r.bound_kinds = {"upper", "heuristic"};
  r.relation = "diagonal value <= 1.02";
  r.tolerance = "slack 0.02 for the finite horizon";
  r.pass = diag.value <= Number(Rational(51, 50)) && all.value <= diag.value;
  return r;
}

CheckRecord check_distortion(const SuiteConfig& cfg) {
  CheckRecord r = record("distortion-blocks", "block construction: y_k = (1/((1+eta)^2 beta)) sum a_i u_{m0+kn+i} is 1-omega spreading");
  DistortionOptions o;
  o.omega = cfg.distortion_omega;
  const DistortionResult d = distortion_blocks(Space::schreier(), catalog_sequence("schreier-basis"), o);
  const Rational delta = 1 - cfg.distortion_omega;
  const SmCheck c = sm_delta_check(Space::schreier(), d.spec, Number(delta), cfg.distortion_horizon);
  Number top(0);
  for (std::uint64_t k = 1; k <= cfg.distortion_horizon; ++k) top = max(top, norm(Space::schreier(), generate(d.spec, k)));
  r.values = {{"eta", q(d.eta)},
              {"scale", q(d.scale)},
              {"beta", d.beta.to_string()},
              {"block_length", std::to_string(d.alpha.size())},
              {"strategy", set_strategy_name(c.strategy)},
              {"sets", std::to_string(c.sets_checked)},
              {"violations", std::to_string(c.violations.size())},
              {"max_norm", top.to_string()}};
  r.bound_kinds = {c.certified ? "exact" : "heuristic"};
  r.relation = "sm_delta_check(1 - omega, N) passes and max ||y_k|| <= 1";
  r.pass = c.pass && c.certified && top <= Number(1);
  return r;
}

CheckRecord check_ramsey_cap(const SuiteConfig& cfg) {
  CheckRecord r = record("ramsey-cardinality-cap", "hereditary dichotomy, case (a): F meets P(M) in [M]^{<=d}");
  const HereditaryFamily f = HereditaryFamily::cardinality_cap(cfg.ramsey_ground, 3);
  const DichotomyResult d = dichotomy_search(f, 6);
  const VerifyOutcome v = verify_dichotomy(f, d);
  r.values = {{"case", dichotomy_case_name(d.which)}, {"M", index_set_string(d.m)}, {"d", std::to_string(d.d)},
              {"verified", v.ok ? "true" : "false"}};
  r.bound_kinds = {"exact"};
  r.relation = "case a with d = 3, verifier confirms";
  r.pass = d.which == DichotomyCase::kA && d.d == 3 && v.ok;
  if (!v.ok) r.detail = v.message;
  return r;
}

CheckRecord check_ramsey_schreier(const SuiteConfig& cfg) {
  CheckRecord r = record("ramsey-schreier", "hereditary dichotomy, case (b): {F in M : #F <= f(min F)} lies in the family");
  const HereditaryFamily f = HereditaryFamily::schreier(cfg.ramsey_ground);
  const DichotomyResult d = dichotomy_search(f, 5);
  const VerifyOutcome v = verify_dichotomy(f, d);
  std::string fs;
  for (auto x : d.f) fs += (fs.empty() ? "" : ",") + std::to_string(x);
  r.values = {{"case", dichotomy_case_name(d.which)}, {"M", index_set_string(d.m)}, {"f", fs},
              {"verified", v.ok ? "true" : "false"}};
  r.bound_kinds = {"exact"};
  r.relation = "case b, verifier confirms";
  r.pass = d.which == DichotomyCase::kB && v.ok;
  if (!v.ok) r.detail = v.message;
  return r;
}

CheckRecord check_ball_records(const SuiteConfig&) {
  CheckRecord r = record("ball-records", "unit balls: bs(B_l1) = 2, wbs(B_l1) = 0, bs(B_c0) = 1, wbs(B_c0) = 0, bs(B_c) = 2");
  struct Want {
    const char* set;
    const char* quantity;
    Rational value;
  };
  const std::vector<Want> wants{{"ball-l1", "bs", Rational(2)},
                                {"ball-l1", "wbs", Rational(0)},
                                {"ball-c0", "bs", Rational(1)},
                                {"ball-c0", "wbs", Rational(0)},
                                {"ball-c", "bs", Rational(2)}};
  bool ok = true;
  std::map<std::string, SetReport> reports;
  for (const char* id : {"ball-l1", "ball-c0", "ball-c"}) {
    reports.emplace(id, set_quantities(catalog_set(id)));
    ok = ok && reports.at(id).consistent;
    r.values.emplace_back(std::string(id) + ".consistent", reports.at(id).consistent ? "true" : "false");
  }
  for (const auto& w : wants) {
    bool found = false;
    for (const auto& a : reports.at(w.set).record.analytic) {
      if (a.quantity == w.quantity && a.kind == BoundKind::kExact && a.value == w.value && !a.citation.empty()) found = true;
    }
    r.values.emplace_back(std::string(w.set) + "." + w.quantity, found ? q(w.value) : "missing");
    ok = ok && found;
  }
  r.bound_kinds = {"exact (stated)", "heuristic (evidence)"};
  r.relation = "stated values present with citations; member evidence <= stated value + 1/50";
  r.tolerance = "slack 1/50 on finite-horizon evidence";
  r.pass = ok;
  return r;
}

CheckRecord check_omega_set(const SuiteConfig&) {
  CheckRecord r = record("omega-set-report", "weighted l1-sum example: bs(A_n) <= 2/n, beta(A_n) >= 1, chi(A_n) >= 1/2");
  const SetReport rep = set_quantities(catalog_set("omega-A(4)"));
  Number cca_max(0);
  for (const auto& e : rep.evidence) {
    if (e.source.rfind("cca", 0) == 0) cca_max = max(cca_max, e.value);
  }
  r.values = {{"n", "4"}, {"cca_evidence", cca_max.to_string()}, {"consistent", rep.consistent ? "true" : "false"}};
  r.bound_kinds = {"heuristic"};
  r.relation = "cca evidence <= 2/n";
  r.pass = rep.consistent && cca_max <= Number(Rational(1, 2));
  return r;
}

CheckRecord check_wu(const SuiteConfig&) {
  CheckRecord r = record("schreier-wu", "Schreier basis: admissible-set functionals exceed eps on {m,...,2m-1}");
  WuOptions o;
  o.families = {"coordinate", "admissible-interval-sign"};
  const QuantityEstimate e = wu_lower(Space::schreier(), catalog_sequence("schreier-basis"), FiniteVector(), 50, o);
  r.values = {{"value", e.value.to_string()}, {"count", std::to_string(e.witness_count)},
              {"functional", e.witness_functional ? e.witness_functional->to_string() : "none"}};
  r.bound_kinds = {bound_kind_name(e.bound_kind)};
  r.relation = "lower evidence >= 9/10 relative to the searched family";
  r.pass = e.value >= Number(Rational(9, 10));
  return r;
}

CheckRecord check_fuzz(const SuiteConfig& cfg) {
  CheckRecord r = record("fuzz-invariants", "finite window form of cca >= asep/2 plus estimator invariants");
  FuzzOptions o;
  o.seed = cfg.fuzz_seed;
  o.trials = cfg.fuzz_trials;
  o.dims = cfg.fuzz_dims;
  o.horizon = cfg.fuzz_horizon;
  o.trial_cap = cfg.fuzz_trial_cap;
  const VerificationReport f = fuzz_invariants(o);
  r.pass = f.pass();
  for (const auto& c : f.checks) {
    r.values.emplace_back(c.id, c.pass ? "pass" : "fail");
    if (!c.pass && r.detail.empty()) r.detail = c.detail;
  }
  r.bound_kinds = {"exact"};
  r.relation = "every invariant holds on every trial";
  r.tolerance = "0 (exact); heuristic <= grid + 0.05";
  r.reproduce = "bsaks fuzz --seed " + std::to_string(o.seed) + " --trials " + std::to_string(o.trials) + " --dims " +
                std::to_string(o.dims) + " --horizon " + std::to_string(o.horizon);
  return r;
}

const std::map<std::string, std::function<CheckRecord(const SuiteConfig&)>>& registry() {
  static const std::map<std::string, std::function<CheckRecord(const SuiteConfig&)>> table{
      {"asep-ell1", check_asep},
      {"ball-records", check_ball_records},
      {"c-signflip-cesaro", check_signflip},
      {"c0-sm", check_c0_sm},
      {"c0-summing-tcca", check_tcca},
      {"distortion-blocks", check_distortion},
      {"ell1-cesaro", check_ell1_cesaro},
      {"fuzz-invariants", check_fuzz},
      {"omega-example-norm", check_omega_norm},
      {"omega-set-report", check_omega_set},
      {"ramsey-cardinality-cap", check_ramsey_cap},
      {"ramsey-schreier", check_ramsey_schreier},
      {"schreier-cesaro-growth", check_growth},
      {"schreier-sm", check_schreier_sm},
      {"schreier-wu", check_wu},
  };
  return table;
}

}  // namespace

std::vector<std::string> paper_check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : registry()) ids.push_back(id);
  return ids;
}

CheckRecord run_paper_check(const std::string& id, const SuiteConfig& config) {
  auto it = registry().find(id);
  if (it == registry().end()) throw Error(ErrorCode::kInvalidArgument, "unknown check '" + id + "'");
  const auto t0 = Clock::now();
  CheckRecord r = it->second(config);
  r.runtime = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

VerificationReport run_paper_suite(const SuiteConfig& config, const std::vector<std::string>& only) {
  VerificationReport report;
  report.timings = config.timings;
  for (const auto& id : only.empty() ? paper_check_ids() : only) report.checks.push_back(run_paper_check(id, config));
  report.sort_by_id();
  return report;
}

}  // namespace bsaks
