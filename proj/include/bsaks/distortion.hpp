#ifndef BSAKS_DISTORTION_HPP
#define BSAKS_DISTORTION_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bsaks/crosspolytope.hpp"
#include "bsaks/sequence.hpp"
#include "bsaks/space.hpp"

namespace bsaks {

struct DistortionOptions {
  Rational omega{1, 5};
  std::optional<Rational> eta;          // default: largest 1/j with (1-eta)/(1+eta)^2 > 1 - omega
  std::optional<std::vector<Rational>> alpha;  // default: witness of the smaller beta window
  std::uint64_t m0 = 16;
  std::uint64_t beta_window_small = 4;  // windows {a, ..., 2a - 1}
  std::uint64_t beta_window_large = 8;
  Rational beta_tolerance{1, 10};
  std::uint64_t precondition_window = 16;
  std::uint64_t norm_horizon = 50;
  CrosspolytopeOptions minimizer;
};

struct DistortionResult {
  explicit DistortionResult(SequenceSpec s) : spec(std::move(s)) {}

  SequenceSpec spec;
  Rational eta;
  Number beta;
  Number beta_small;
  Number beta_large;
  Rational scale;  // 1 / ((1 + eta)^2 beta)
  std::vector<Rational> alpha;
  std::uint64_t m0 = 0;
  Number sm_lower;  // sm_delta_upper on the precondition window
  Number max_norm;  // max ||y_k||, k <= norm_horizon
};

/// Largest 1/j (j >= 2) with (1 - eta)/(1 + eta)^2 > 1 - omega.
Rational distortion_eta(const Rational& omega);

/// y_k = scale * sum_i alpha_i u_{m0 + k n + i}.
DistortionResult distortion_blocks(const Space& space, const SequenceSpec& u, const DistortionOptions& options = {});

}  // namespace bsaks

#endif  // BSAKS_DISTORTION_HPP
