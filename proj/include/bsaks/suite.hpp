#ifndef BSAKS_SUITE_HPP
#define BSAKS_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bsaks/report.hpp"

namespace bsaks {

/// Horizons, caps and tolerances of the regression suite and the fuzzer.
/// Loaded from a key = value file; unknown keys are rejected.
struct SuiteConfig {
  std::uint64_t omega_max = 30;
  std::uint64_t signflip_horizon = 1000;
  std::uint64_t ell1_horizon = 400;
  std::uint64_t sm_window = 10;
  std::uint64_t grid_steps = 12;  // grid oracle step 1/grid_steps
  std::uint64_t asep_horizon = 10;
  std::uint64_t asep_block = 5;
  std::uint64_t tcca_horizon = 500;
  std::uint64_t growth_small = 10;
  std::uint64_t growth_large = 20;
  Rational distortion_omega{1, 5};
  std::uint64_t distortion_horizon = 50;
  std::uint64_t ramsey_ground = 18;
  std::uint64_t fuzz_seed = 0;
  std::uint64_t fuzz_trials = 200;
  std::uint64_t fuzz_dims = 8;
  std::uint64_t fuzz_horizon = 16;
  std::uint64_t fuzz_trial_cap = 100000;
  double float_tolerance = 1e-9;
  bool timings = false;
};

SuiteConfig load_suite_config(const std::string& path);
void apply_config_value(SuiteConfig& config, const std::string& key, const std::string& value);
/// The documented keys, with defaults, as a config file.
std::string default_config_text();

std::vector<std::string> paper_check_ids();
CheckRecord run_paper_check(const std::string& id, const SuiteConfig& config);
/// Every registered check (or those in `only`), ordered by id.
VerificationReport run_paper_suite(const SuiteConfig& config, const std::vector<std::string>& only = {});

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::uint64_t trials = 10;
  std::uint64_t dims = 4;
  std::uint64_t horizon = 8;
  std::uint64_t first_trial = 0;
  std::uint64_t trial_cap = 100000;
};

/// Random eventually-constant rational sequences in l1 / sup / Schreier,
/// checked against the estimator invariants. One record per invariant.
VerificationReport fuzz_invariants(const FuzzOptions& options);

}  // namespace bsaks

#endif  // BSAKS_SUITE_HPP
