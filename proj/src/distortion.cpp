#include "bsaks/distortion.hpp"

#include <numeric>

#include "bsaks/error.hpp"
#include "bsaks/estimators.hpp"
#include "bsaks/norm.hpp"

namespace bsaks {

Rational distortion_eta(const Rational& omega) {
  if (omega <= 0 || omega >= 1) throw Error(ErrorCode::kInvalidArgument, "omega must lie in (0, 1)");
  const Rational target = 1 - omega;
  for (std::int64_t j = 2; j < 1'000'000; ++j) {
    const Rational eta(1, j);
    if ((1 - eta) / ((1 + eta) * (1 + eta)) > target) return eta;
  }
  throw Error(ErrorCode::kInvalidArgument, "omega too small for the eta search");
}

namespace {

MinimizationResult window_minimum(const Space& space, const SequenceSpec& u, std::uint64_t a,
                                  const CrosspolytopeOptions& options) {
  std::vector<FiniteVector> vs;
  for (std::uint64_t k = a; k <= 2 * a - 1; ++k) vs.push_back(generate(u, k));
  return crosspolytope_min(space, vs, options);
}

}  // namespace

DistortionResult distortion_blocks(const Space& space, const SequenceSpec& u, const DistortionOptions& options) {
  for (std::uint64_t k = 1; k <= options.norm_horizon; ++k) {
    if (norm(space, generate(u, k)) != Number(1)) {
      throw Error(ErrorCode::kPreconditionViolation, "input is not normalized at k = " + std::to_string(k));
    }
  }
  IndexSet window(options.precondition_window);
  std::iota(window.begin(), window.end(), 1);
  SmOptions sm;
  sm.keep_sets = false;
  sm.minimizer = options.minimizer;
  const Number sm_lower = sm_delta_upper(space, u, window, sm).estimate.value;
  if (!(sm_lower > Number(0))) {
    throw Error(ErrorCode::kPreconditionViolation, "no positive spreading constant on the working window");
  }

  const MinimizationResult small = window_minimum(space, u, options.beta_window_small, options.minimizer);
  const MinimizationResult large = window_minimum(space, u, options.beta_window_large, options.minimizer);
  const Number spread = abs(small.value - large.value);
  if (spread > Number(options.beta_tolerance) * max(small.value, large.value)) {
    throw Error(ErrorCode::kBetaEstimateUnstable,
                "window estimates " + small.value.to_string() + " and " + large.value.to_string() + " differ by more than " +
                    to_string(options.beta_tolerance));
  }
  if (!large.value.is_exact()) {
    throw Error(ErrorCode::kNonPolyhedralNorm, "block scale needs an exact beta estimate");
  }

  DistortionResult r(u);
  r.eta = options.eta ? *options.eta : distortion_eta(options.omega);
  r.beta_small = small.value;
  r.beta_large = large.value;
  r.beta = large.value;
  r.m0 = options.m0;
  r.sm_lower = sm_lower;
  const Rational beta = large.value.exact();
  if (beta <= 0) throw Error(ErrorCode::kPreconditionViolation, "beta estimate is zero");
  r.scale = 1 / ((1 + r.eta) * (1 + r.eta) * beta);

  std::vector<Rational> alpha = options.alpha ? *options.alpha : small.alpha;
  while (!alpha.empty() && alpha.front() == 0) alpha.erase(alpha.begin());
  while (!alpha.empty() && alpha.back() == 0) alpha.pop_back();
  Rational l1 = 0;
  for (const auto& a : alpha) l1 += abs(a);
  if (alpha.empty() || l1 != 1) throw Error(ErrorCode::kPreconditionViolation, "alpha must satisfy sum |alpha_i| = 1");

  // certificate on the first block: ||sum alpha_i u_{m0+n+i}|| < (1 + eta) beta
  const std::uint64_t n = alpha.size();
  FiniteVector first;
  for (std::uint64_t i = 0; i < n; ++i) first += alpha[i] * generate(u, options.m0 + n + i + 1);
  if (!(norm(space, first) < Number((1 + r.eta) * beta))) {
    throw Error(ErrorCode::kPreconditionViolation, "alpha certificate fails: block norm is not below (1 + eta) beta");
  }
  r.alpha = alpha;
  r.spec = blocks_sequence(u, alpha, options.m0, r.scale);

  r.max_norm = Number(0);
  for (std::uint64_t k = 1; k <= options.norm_horizon; ++k) r.max_norm = max(r.max_norm, norm(space, generate(r.spec, k)));
  if (r.max_norm > Number(1)) {
    throw Error(ErrorCode::kPreconditionViolation, "block norm " + r.max_norm.to_string() + " exceeds 1");
  }
  return r;
}

}  // namespace bsaks
