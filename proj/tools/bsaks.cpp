#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bsaks/catalog.hpp"
#include "bsaks/crosspolytope.hpp"
#include "bsaks/distortion.hpp"
#include "bsaks/error.hpp"
#include "bsaks/estimators.hpp"
#include "bsaks/ramsey.hpp"
#include "bsaks/report.hpp"
#include "bsaks/suite.hpp"
#include "bsaks/text_format.hpp"

using namespace bsaks;
using nlohmann::json;

namespace {

constexpr int kPass = 0;
constexpr int kCheckFailed = 1;
constexpr int kInfrastructure = 2;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

IndexSet parse_window(const std::string& text) {
  IndexSet w;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto a = std::stoull(text.substr(0, dots));
    const auto b = std::stoull(text.substr(dots + 2));
    for (auto i = a; i <= b; ++i) w.push_back(i);
    return w;
  }
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) w.push_back(std::stoull(piece));
  return w;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string piece;
  while (std::getline(in, piece, ',')) {
    if (!piece.empty()) out.push_back(piece);
  }
  return out;
}

struct QuantityArgs {
  std::string name;
  std::string space;
  std::string sequence;
  std::string sequence_file;
  std::string set;
  std::uint64_t horizon = 100;
  std::uint64_t max_block = 0;
  std::string delta;
  std::string window;
  std::string rule = "schreier";
  std::string strategy = "auto";
  std::string families = "coordinate";
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool csv = false;
};

SequenceSpec load_sequence(const QuantityArgs& a, const Space& space) {
  if (!a.sequence_file.empty()) {
    const TextBlock block = read_text_file(a.sequence_file);
    return explicit_sequence(vectors_from_text(block), space);
  }
  if (a.sequence.empty()) throw Error(ErrorCode::kInvalidArgument, "--sequence or --sequence-file is required");
  return catalog_sequence(a.sequence);
}

int run_quantity(const QuantityArgs& a) {
  if (!a.set.empty()) {
    const SetReport r = set_quantities(catalog_set(a.set));
    if (a.csv) {
      std::cout << set_report_csv(r);
    } else {
      emit(set_report_json(r));
    }
    return r.consistent ? kPass : kCheckFailed;
  }
  const SequenceSpec spec = [&] {
    const Space fallback = a.space.empty() ? Space::sup() : Space::parse_name(a.space);
    return load_sequence(a, fallback);
  }();
  const Space space = a.space.empty() ? spec.traits().home : Space::parse_name(a.space);
  SmOptions sm;
  sm.rule = a.rule == "full" ? Admissibility::kFull : Admissibility::kSchreier;
  if (a.strategy == "exhaustive") sm.strategy = SetStrategy::kExhaustive;
  if (a.strategy == "maximal") sm.strategy = SetStrategy::kMaximal;
  if (a.strategy == "spreading") sm.strategy = SetStrategy::kSpreading;
  const std::string& q = a.name;
  if (q == "ca" || q == "cca" || q == "profile") {
    const QuantityEstimate e = q == "cca" ? cca_estimate(space, spec, a.horizon) : ca_estimate(space, spec, a.horizon);
    if (q == "profile" || a.csv) {
      std::cout << profile_csv(*e.profile);
    } else {
      emit(estimate_json(e));
    }
    return kPass;
  }
  if (q == "wca") return emit(estimate_json(wca_upper(space, spec, a.horizon))), kPass;
  if (q == "tcca") return emit(estimate_json(tcca_upper(space, spec, a.horizon))), kPass;
  if (q == "asep") {
    const std::uint64_t b = a.max_block ? a.max_block : a.horizon / 2;
    if (a.samples) return emit(estimate_json(asep_sampled(space, spec, a.horizon, b, a.samples, a.seed))), kPass;
    return emit(estimate_json(asep_upper(space, spec, a.horizon, b))), kPass;
  }
  if (q == "sm") {
    IndexSet w = a.window.empty() ? parse_window("1.." + std::to_string(a.horizon)) : parse_window(a.window);
    if (!a.delta.empty()) {
      const SmCheck c = sm_delta_check(space, spec, Number(parse_rational(a.delta)), a.horizon, sm);
      emit(sm_check_json(c));
      return c.pass ? kPass : kCheckFailed;
    }
    emit(sm_json(sm_delta_upper(space, spec, w, sm)));
    return kPass;
  }
  if (q == "wu" || q == "twu") {
    WuOptions o;
    o.families = split(a.families);
    const FiniteVector limit = spec.traits().weak_limit;
    emit(estimate_json(q == "wu" ? wu_lower(space, spec, limit, a.horizon, o) : twu_estimate(space, spec, limit, a.horizon, o)));
    return kPass;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown quantity '" + q + "' (ca, cca, wca, tcca, asep, sm, wu, twu, profile)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-horizon estimators for Banach-Saks type quantities of sequences and sets"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "key = value file with horizons, caps and tolerances");

  auto* catalog = app.add_subcommand("catalog", "list or show catalog sequences and sets");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "list generators and set records");
  std::string show_id;
  auto* cat_show = catalog->add_subcommand("show", "show one generator or set record");
  cat_show->add_option("id", show_id)->required();

  QuantityArgs qa;
  auto* quantity = app.add_subcommand("quantity", "estimate one quantity");
  quantity->add_option("name", qa.name, "ca, cca, wca, tcca, asep, sm, wu, twu, profile");
  quantity->add_option("--space", qa.space, "l1, sup, c0, c, schreier, omega, lp:P, weighted:A");
  quantity->add_option("--sequence", qa.sequence, "catalog sequence, e.g. schreier-basis|k^3");
  quantity->add_option("--sequence-file", qa.sequence_file, "explicit vectors in the text format");
  quantity->add_option("--set", qa.set, "catalog set record; runs the set report");
  quantity->add_option("--horizon", qa.horizon, "N");
  quantity->add_option("--max-block", qa.max_block, "asep block cap (default N/2)");
  quantity->add_option("--delta", qa.delta, "sm: check the delta-spreading inequality up to N");
  quantity->add_option("--window", qa.window, "sm window, a..b or a,b,c");
  quantity->add_option("--rule", qa.rule, "schreier or full")->check(CLI::IsMember({"schreier", "full"}));
  quantity->add_option("--strategy", qa.strategy, "auto, exhaustive, maximal, spreading")
      ->check(CLI::IsMember({"auto", "exhaustive", "maximal", "spreading"}));
  quantity->add_option("--families", qa.families, "wu functional families, comma separated");
  quantity->add_option("--samples", qa.samples, "asep: sampled search with this many pairs");
  quantity->add_option("--seed", qa.seed, "asep sampling seed");
  quantity->add_flag("--csv", qa.csv, "CSV table instead of JSON");

  std::string sm_space, sm_vectors, sm_mode = "auto";
  std::uint64_t sm_grid = 0;
  auto* smmin = app.add_subcommand("sm-min", "minimize ||sum a_i v_i|| over sum |a_i| = 1");
  smmin->add_option("--space", sm_space)->required();
  smmin->add_option("--vectors", sm_vectors, "vector list file")->required();
  smmin->add_option("--mode", sm_mode)->check(CLI::IsMember({"auto", "exact", "heuristic"}));
  smmin->add_option("--grid", sm_grid, "also run the grid oracle with step 1/K");

  auto* ramsey = app.add_subcommand("ramsey", "hereditary dichotomy and Ramsey extraction");
  ramsey->require_subcommand(1);
  std::string family = "schreier";
  std::uint64_t rn = 18, rm = 5, rd = 2, rt = 3;
  std::string coloring = "parity-sum";
  auto* dich = ramsey->add_subcommand("dichotomy", "search for a case (a) or case (b) certificate");
  dich->add_option("--family", family, "schreier, cardinality-cap:D, empty-only");
  dich->add_option("--n", rn);
  dich->add_option("--m", rm);
  auto* extract = ramsey->add_subcommand("extract", "lexicographically first monochromatic set");
  extract->add_option("--d", rd);
  extract->add_option("--n", rn);
  extract->add_option("--t", rt);
  extract->add_option("--coloring", coloring, "file, constant:C, parity-sum or pentagon");

  std::string dist_space = "schreier", dist_sequence = "schreier-basis", dist_omega = "1/5";
  auto* dist = app.add_subcommand("distortion", "block sequence with a 1 - omega spreading constant");
  dist->add_option("--space", dist_space);
  dist->add_option("--sequence", dist_sequence);
  dist->add_option("--omega", dist_omega);

  auto* verify = app.add_subcommand("verify", "regression suite");
  verify->require_subcommand(1);
  std::string report_path, csv_path, only;
  bool timings = false;
  auto* paper = verify->add_subcommand("paper", "run every registered check");
  paper->add_option("--report", report_path, "write the JSON report here");
  paper->add_option("--csv", csv_path, "write a CSV summary here");
  paper->add_option("--only", only, "comma separated check ids");
  paper->add_flag("--timings", timings, "include runtimes (reports are otherwise byte-reproducible)");
  auto* list_checks = verify->add_subcommand("list", "list check ids");
  auto* print_config = verify->add_subcommand("config", "print the default config file");

  FuzzOptions fo;
  std::string fuzz_report;
  bool fuzz_set_trials = false;
  auto* fuzz = app.add_subcommand("fuzz", "random instances against the estimator invariants");
  fuzz->add_option("--seed", fo.seed);
  fuzz->add_option("--trials", fo.trials)->each([&](const std::string&) { fuzz_set_trials = true; });
  fuzz->add_option("--dims", fo.dims);
  fuzz->add_option("--horizon", fo.horizon);
  fuzz->add_option("--first-trial", fo.first_trial);
  fuzz->add_option("--report", fuzz_report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInfrastructure;
  }

  try {
    SuiteConfig config;
    if (!config_path.empty()) config = load_suite_config(config_path);

    if (cat_list->parsed()) {
      json gens = json::array();
      for (const auto& g : catalog_generators()) {
        gens.push_back({{"id", g.id}, {"params", g.params}, {"summary", g.summary}, {"citation", g.citation}});
      }
      emit({{"generators", gens}, {"sets", catalog_set_ids()}});
      return kPass;
    }
    if (cat_show->parsed()) {
      for (const auto& g : catalog_generators()) {
        if (g.id == show_id) {
          emit({{"id", g.id}, {"params", g.params}, {"summary", g.summary}, {"citation", g.citation}});
          return kPass;
        }
      }
      const CatalogSetRecord r = catalog_set(show_id);
      json members = json::array();
      for (const auto& m : r.members) members.push_back(m.name());
      json analytic = json::array();
      for (const auto& a : r.analytic) {
        analytic.push_back({{"quantity", a.quantity}, {"value", to_string(a.value)}, {"kind", bound_kind_name(a.kind)},
                            {"citation", a.citation}});
      }
      emit({{"id", r.id}, {"summary", r.summary}, {"space", r.space.name()}, {"members", members}, {"analytic", analytic}});
      return kPass;
    }
    if (quantity->parsed()) {
      if (qa.name.empty() && qa.set.empty()) throw Error(ErrorCode::kInvalidArgument, "quantity name or --set required");
      return run_quantity(qa);
    }
    if (smmin->parsed()) {
      const Space space = Space::parse_name(sm_space);
      const auto vectors = vectors_from_text(read_text_file(sm_vectors));
      CrosspolytopeOptions o;
      o.mode = sm_mode == "exact" ? MinMode::kExact : sm_mode == "heuristic" ? MinMode::kHeuristic : MinMode::kAuto;
      json out = minimization_json(crosspolytope_min(space, vectors, o));
      if (sm_grid) out["grid"] = minimization_json(grid_oracle(space, vectors, Rational(1, static_cast<long long>(sm_grid))));
      emit(out);
      return kPass;
    }
    if (dich->parsed()) {
      const HereditaryFamily f = HereditaryFamily::parse(family, rn);
      const DichotomyResult r = dichotomy_search(f, rm);
      const VerifyOutcome v = verify_dichotomy(f, r);
      json out = dichotomy_json(r, v);
      out["family"] = f.name();
      emit(out);
      return r.which == DichotomyCase::kUndetermined || v.ok ? kPass : kCheckFailed;
    }
    if (extract->parsed()) {
      Coloring c;
      if (std::ifstream(coloring).good()) {
        c = coloring_from_text(read_text_file(coloring));
      } else {
        c = coloring_by_name(coloring, rd, rn);
      }
      const RamseyResult r = ramsey_extract(c, rt);
      json out = ramsey_json(r, rt);
      out["coloring"] = c.name;
      if (r.set) out["verified"] = verify_monochromatic(c, *r.set).ok;
      emit(out);
      return kPass;
    }
    if (dist->parsed()) {
      DistortionOptions o;
      o.omega = parse_rational(dist_omega);
      const Space space = Space::parse_name(dist_space);
      const DistortionResult r = distortion_blocks(space, catalog_sequence(dist_sequence), o);
      const SmCheck c = sm_delta_check(space, r.spec, Number(1 - o.omega), o.norm_horizon);
      json out = distortion_json(r);
      out["check"] = sm_check_json(c);
      emit(out);
      return c.pass ? kPass : kCheckFailed;
    }
    if (list_checks->parsed()) {
      for (const auto& id : paper_check_ids()) std::cout << id << '\n';
      return kPass;
    }
    if (print_config->parsed()) {
      std::cout << default_config_text();
      return kPass;
    }
    if (paper->parsed()) {
      if (timings) config.timings = true;
      const VerificationReport r = run_paper_suite(config, split(only));
      const json j = report_json(r);
      if (!report_path.empty()) write_file(report_path, j.dump(2) + "\n");
      if (!csv_path.empty()) write_file(csv_path, report_csv(r));
      for (const auto& c : r.checks) {
        std::cout << (c.pass ? "PASS " : "FAIL ") << c.id << '\n';
        if (!c.pass) std::cout << "  reproduce: " << c.reproduce << '\n';
      }
      return r.pass() ? kPass : kCheckFailed;
    }
    if (fuzz->parsed()) {
      if (!fuzz_set_trials) fo.trials = config.fuzz_trials;
      fo.trial_cap = config.fuzz_trial_cap;
      const VerificationReport r = fuzz_invariants(fo);
      const json j = report_json(r);
      if (!fuzz_report.empty()) write_file(fuzz_report, j.dump(2) + "\n");
      emit(j);
      return r.pass() ? kPass : kCheckFailed;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfrastructure;
  }
  return kInfrastructure;
}
