#ifndef BSAKS_CROSSPOLYTOPE_HPP
#define BSAKS_CROSSPOLYTOPE_HPP

#include <cstddef>
#include <vector>

#include "bsaks/finite_vector.hpp"
#include "bsaks/norm.hpp"
#include "bsaks/space.hpp"

namespace bsaks {

enum class MinMethod { kFaceLpExact, kSubgradientHeuristic, kGridOracle };
const char* min_method_name(MinMethod m);

/// min ||sum_i alpha_i v_i|| over sum_i |alpha_i| = 1.
struct MinimizationResult {
  Number value;
  std::vector<Rational> alpha;  // sum |alpha_i| = 1 exactly
  MinMethod method = MinMethod::kFaceLpExact;
  std::vector<int> face;  // sign pattern of the optimal orthant (+1 / -1)
};

enum class MinMode { kExact, kHeuristic, kAuto };

struct CrosspolytopeOptions {
  MinMode mode = MinMode::kAuto;
  std::size_t face_cap = 12;
  int iterations = 200;
  std::size_t max_starts = 256;
};

/// Exact mode solves one cutting-plane LP per orthant (sigma_1 = +1); a single
/// orthant suffices for disjointly supported vectors under an unconditional
/// norm. Auto mode falls back to the heuristic for non-polyhedral norms and
/// beyond the face cap; exact mode throws there.
MinimizationResult crosspolytope_min(const Space& space, const std::vector<FiniteVector>& vectors,
                                     const CrosspolytopeOptions& options = {});

/// Projected subgradient descent from each orthant barycenter.
MinimizationResult crosspolytope_heuristic(const Space& space, const std::vector<FiniteVector>& vectors,
                                           const CrosspolytopeOptions& options = {});

/// Exhaustive evaluation on the grid {alpha : alpha_i in step*Z, sum |alpha_i| = 1}.
/// d <= 4 and at most 5e6 grid points.
MinimizationResult grid_oracle(const Space& space, const std::vector<FiniteVector>& vectors, const Rational& step);

/// ||sum_i alpha_i v_i||.
Number combination_norm(const Space& space, const std::vector<FiniteVector>& vectors,
                        const std::vector<Rational>& alpha);

bool disjoint_supports(const std::vector<FiniteVector>& vectors);

/// Lexicographic order on coefficient vectors.
bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace bsaks

#endif  // BSAKS_CROSSPOLYTOPE_HPP
