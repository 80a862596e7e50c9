#ifndef BSAKS_RAMSEY_HPP
#define BSAKS_RAMSEY_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bsaks/estimators.hpp"

namespace bsaks {

/// Subsets of {1..64} as bit masks, bit i-1 for element i.
using SetMask = std::uint64_t;
SetMask mask_of(const IndexSet& s);
IndexSet set_of(SetMask m);

enum class FamilyRule { kExplicit, kSchreier, kCardinalityCap, kCustom };

class HereditaryFamily {
 public:
  /// Throws invalid-argument unless every listed set lies in {1..n}.
  static HereditaryFamily explicit_list(std::uint64_t n, const std::vector<IndexSet>& sets);
  static HereditaryFamily schreier(std::uint64_t n);
  static HereditaryFamily cardinality_cap(std::uint64_t n, std::uint64_t d);
  /// Registered predicate ids: "empty-only", or any id added with register_predicate.
  static HereditaryFamily custom(std::uint64_t n, const std::string& id);
  /// "schreier", "cardinality-cap:D", "empty-only", other registered ids.
  static HereditaryFamily parse(const std::string& name, std::uint64_t n);

  static void register_predicate(const std::string& id, std::function<bool(SetMask)> pred);

  std::uint64_t ground() const { return n_; }
  FamilyRule rule() const { return rule_; }
  std::string name() const;
  bool contains(SetMask s) const;
  bool contains(const IndexSet& s) const { return contains(mask_of(s)); }

  const std::vector<SetMask>& listed() const { return listed_; }

 private:
  std::uint64_t n_ = 0;
  FamilyRule rule_ = FamilyRule::kSchreier;
  std::uint64_t cap_ = 0;
  std::string id_;
  std::vector<SetMask> listed_;  // sorted
  std::function<bool(SetMask)> pred_;
};

/// (A, B): A in the family, B = A minus one element, B not in the family.
/// Explicit lists use one-element removal; rule families are enumerated for n <= 20.
std::optional<std::pair<IndexSet, IndexSet>> hereditary_counterexample(const HereditaryFamily& family);

enum class DichotomyCase { kA, kB, kUndetermined };
const char* dichotomy_case_name(DichotomyCase c);

struct DichotomyResult {
  DichotomyCase which = DichotomyCase::kUndetermined;
  IndexSet m;                  // M
  std::uint64_t d = 0;         // case a
  std::vector<std::uint64_t> f;  // case b, f[i] = f(M[i])
  std::uint64_t candidates = 0;  // sets M examined
};

struct DichotomyOptions {
  std::uint64_t max_m = 20;
  double work_cap = 2e9;  // subset evaluations
};

/// First M (lex order) of size m with F & P(M) = [M]^{<=d} (case a) or
/// {F in M : #F <= f(min F)} in the family for the clamped greedy f (case b).
DichotomyResult dichotomy_search(const HereditaryFamily& family, std::uint64_t m, const DichotomyOptions& options = {});

struct VerifyOutcome {
  bool ok = true;
  std::string message;
};

/// Independent re-check of a certificate by full enumeration of P(M).
VerifyOutcome verify_dichotomy(const HereditaryFamily& family, const DichotomyResult& result);

/// 2-coloring of the d-subsets of {1..n}.
struct Coloring {
  std::uint64_t d = 2;
  std::uint64_t n = 0;
  std::string name;
  std::function<int(const IndexSet&)> color;
};

Coloring constant_coloring(std::uint64_t d, std::uint64_t n, int c = 0);
Coloring parity_sum_coloring(std::uint64_t d, std::uint64_t n);
/// d = 2, n = 5: pairs at cyclic distance 1 get color 1.
Coloring pentagon_coloring();
/// Text form: d = D, n = N, default = C, then `subset { set = 1,2 color = 1 }` blocks.
Coloring coloring_from_text(const TextBlock& block);
/// "constant:C", "parity-sum", "pentagon".
Coloring coloring_by_name(const std::string& name, std::uint64_t d, std::uint64_t n);

struct RamseyResult {
  std::optional<IndexSet> set;  // lexicographically first monochromatic set
  int color = 0;
};

RamseyResult ramsey_extract(const Coloring& coloring, std::uint64_t t);
VerifyOutcome verify_monochromatic(const Coloring& coloring, const IndexSet& m);

}  // namespace bsaks

#endif  // BSAKS_RAMSEY_HPP
