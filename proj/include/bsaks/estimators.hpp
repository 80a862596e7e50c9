#ifndef BSAKS_ESTIMATORS_HPP
#define BSAKS_ESTIMATORS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsaks/catalog.hpp"
#include "bsaks/crosspolytope.hpp"
#include "bsaks/functional.hpp"
#include "bsaks/sequence.hpp"
#include "bsaks/space.hpp"

namespace bsaks {

using IndexSet = std::vector<std::uint64_t>;

std::string index_set_string(const IndexSet& s);  // "{1,2,3}"

/// D(m, N) = max{||x_k - x_l|| : m <= k, l <= N}, m = 1..N.
struct WindowProfile {
  std::uint64_t horizon = 0;
  std::vector<Number> values;  // values[m - 1] = D(m, N)
  std::vector<std::pair<std::uint64_t, std::uint64_t>> argmax;  // attaining pair, (0, 0) when D = 0

  const Number& at(std::uint64_t m) const { return values.at(m - 1); }
};

struct QuantityEstimate {
  std::string quantity;
  Number value;
  BoundKind bound_kind = BoundKind::kHeuristic;
  std::uint64_t horizon = 0;
  std::vector<std::pair<std::string, std::string>> params;

  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness_pair;
  std::optional<std::pair<IndexSet, IndexSet>> witness_blocks;  // (F, H)
  std::optional<IndexSet> witness_set;                          // F, with alpha
  std::vector<Rational> witness_alpha;
  std::optional<Functional> witness_functional;
  std::uint64_t witness_count = 0;

  std::optional<WindowProfile> profile;
};

WindowProfile window_profile(const Space& space, const SequenceSpec& spec, std::uint64_t horizon);
WindowProfile window_profile(const Space& space, const std::vector<FiniteVector>& prefix);

struct CaOptions {
  Rational head_fraction{1, 20};  // m* = max(1, ceil(N * head_fraction))
  bool keep_profile = true;
};

std::uint64_t head_index(std::uint64_t horizon, const Rational& fraction);

QuantityEstimate ca_estimate(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                             const CaOptions& options = {});
QuantityEstimate cca_estimate(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                              const CaOptions& options = {});

/// ||y_m - y_n|| for the Cesaro means y of spec.
Number cesaro_distance(const Space& space, const SequenceSpec& spec, std::uint64_t n, std::uint64_t m);

struct DiagonalOptions {
  Rational epsilon{1, 10};
  std::uint64_t scan_limit = 100000;  // largest index examined
};

/// Diagonal extraction against the declared pointwise limit x: k_1 = 1,
/// p_n = 1 + largest coordinate where some x_{k_j}, j <= n, has |.| >= eps,
/// k_{n+1} = least k > k_n with |x_k(i) - x(i)| < eps for all i <= p_n.
/// Returns up to `length` indices (fewer when the scan limit is hit).
std::vector<std::uint64_t> diagonal_indices(const SequenceSpec& spec, std::uint64_t length,
                                            const DiagonalOptions& options = {});

struct SubsequenceFamilyOptions {
  bool use_powers = true;     // k^2, k^3
  bool use_diagonal = true;   // needs a declared pointwise limit
  std::size_t budget = 15'000'000;  // N * (n_N + 1) dense entries per map
  CaOptions ca;
  DiagonalOptions diagonal;
};

/// Infimum over the registered index maps {id, k^2, k^3, diagonal}; upper bounds.
QuantityEstimate wca_upper(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                           const SubsequenceFamilyOptions& options = {});
QuantityEstimate tcca_upper(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                            const SubsequenceFamilyOptions& options = {});

struct AsepOptions {
  std::uint64_t pair_cap = 10'000'000;
};

/// min over F < H, #F = #H <= max_block of ||(sum_F x - sum_H x) / #F||.
QuantityEstimate asep_upper(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                            std::uint64_t max_block, const AsepOptions& options = {});
QuantityEstimate asep_upper(const Space& space, const std::vector<FiniteVector>& prefix, std::uint64_t max_block,
                            const AsepOptions& options = {});
/// Same objective over `samples` random pairs (deterministic in seed).
QuantityEstimate asep_sampled(const Space& space, const SequenceSpec& spec, std::uint64_t horizon,
                              std::uint64_t max_block, std::uint64_t samples, std::uint64_t seed);

enum class Admissibility { kSchreier, kFull };
enum class SetStrategy { kAuto, kExhaustive, kMaximal, kSpreading };
const char* set_strategy_name(SetStrategy s);

struct SmOptions {
  Admissibility rule = Admissibility::kSchreier;
  SetStrategy strategy = SetStrategy::kAuto;
  std::size_t set_budget = 20000;
  CrosspolytopeOptions minimizer;
  bool keep_sets = true;
};

struct SetWitness {
  IndexSet set;
  MinimizationResult result;
};

/// Candidate sets of a window under a rule; strategy kAuto resolves to the
/// first of exhaustive / maximal / spreading that fits the budget (spreading
/// needs a right-spreading certificate). Sets come in a canonical order.
struct CandidateSets {
  SetStrategy strategy = SetStrategy::kExhaustive;
  std::vector<IndexSet> sets;
};
CandidateSets candidate_sets(const IndexSet& window, Admissibility rule, SetStrategy strategy, std::size_t budget,
                             bool spreading_certified);

struct SmResult {
  QuantityEstimate estimate;
  SetStrategy strategy = SetStrategy::kExhaustive;
  std::vector<SetWitness> sets;
};

/// min over candidate F of crosspolytope_min({x_i - x : i in F}), x the declared weak limit.
SmResult sm_delta_upper(const Space& space, const SequenceSpec& spec, const IndexSet& window,
                        const SmOptions& options = {});

struct SmCheck {
  bool pass = true;
  bool certified = true;  // every set solved exactly
  SetStrategy strategy = SetStrategy::kExhaustive;
  std::size_t sets_checked = 0;
  std::vector<SetWitness> violations;
};

SmCheck sm_delta_check(const Space& space, const SequenceSpec& spec, const Number& delta, std::uint64_t horizon,
                       const SmOptions& options = {});

/// Registered functional families: coordinate, l1-sign, normalized-sign,
/// admissible-interval-sign.
std::vector<std::string> functional_families();
bool family_registered(const std::string& family, const Space& space);

struct WuOptions {
  std::vector<std::string> families{"coordinate"};
  std::vector<Rational> epsilons;  // default {j/20 * bound : 1 <= j <= 40}
};

/// Lower evidence for wu relative to the searched family: the largest grid eps
/// with a member f whose count #{k <= N : |f(x_k - x)| > eps} is >= 2 and
/// exceeds its count at N/2.
QuantityEstimate wu_lower(const Space& space, const SequenceSpec& spec, const FiniteVector& limit,
                          std::uint64_t horizon, const WuOptions& options = {});
std::uint64_t functional_count(const Functional& f, const std::vector<FiniteVector>& differences,
                               const Rational& epsilon);
QuantityEstimate twu_estimate(const Space& space, const SequenceSpec& spec, const FiniteVector& limit,
                              std::uint64_t horizon, const WuOptions& options = {});

struct SetQuantityOptions {
  std::uint64_t cesaro_horizon = 400;
  std::uint64_t cesaro_head = 0;  // 0: m* from head fraction
  std::uint64_t tcca_horizon = 400;
  std::uint64_t asep_horizon = 10;
  std::uint64_t asep_block = 5;
  std::uint64_t sm_window = 10;
  Rational slack{1, 50};
};

struct EvidenceItem {
  std::string quantity;  // set-level quantity the item speaks to
  std::string member;
  std::string source;  // estimator and parameters
  Number value;
  BoundKind kind = BoundKind::kHeuristic;
  bool checked = false;     // compared with an analytic value
  bool consistent = true;
  std::string relation;
};

struct SetReport {
  CatalogSetRecord record;
  std::vector<EvidenceItem> evidence;
  bool consistent = true;
};

SetReport set_quantities(const CatalogSetRecord& record, const SetQuantityOptions& options = {});

}  // namespace bsaks

#endif  // BSAKS_ESTIMATORS_HPP
