#ifndef BSAKS_SPACE_HPP
#define BSAKS_SPACE_HPP

#include <memory>
#include <string>

#include "bsaks/finite_vector.hpp"
#include "bsaks/rational.hpp"
#include "bsaks/text_format.hpp"

namespace bsaks {

enum class SpaceKind { kLp, kSup, kC, kWeightedAlpha, kSchreier, kL1Sum, kSupSum };

class Space;

/// Block rule of an l1-sum: every block is `inner` (uniform), or block n is
/// WeightedAlpha(min(1, scale/n)) (harmonic).
struct BlockRule {
  enum class Kind { kUniform, kHarmonicAlpha };
  Kind kind = Kind::kUniform;
  std::shared_ptr<const Space> inner;
  Rational scale{1};
};

class Space {
 public:
  /// p is +infinity for l_inf; p = 1 and p = inf are exact.
  static Space lp(double p);
  static Space sup();
  static Space c();
  static Space weighted_alpha(const Rational& alpha);
  static Space schreier();
  static Space l1_sum(const Space& block);
  static Space l1_sum_harmonic(const Rational& scale = Rational(1));
  static Space sup_sum(const Space& first, const Space& second);

  SpaceKind kind() const { return kind_; }
  double p() const { return p_; }
  const Rational& alpha() const { return alpha_; }
  const BlockRule& block_rule() const { return rule_; }
  const Space& first() const { return *first_; }
  const Space& second() const { return *second_; }

  /// Space of block n (l1-sum) or component n in {1, 2} (sup-sum).
  Space block(std::uint64_t n) const;

  /// Finite dual description exists, so norms are exact rationals.
  bool is_polyhedral() const;
  /// Norm depends only on the absolute values of the coordinates.
  bool is_unconditional() const { return kind_ != SpaceKind::kC; }
  bool allows_tail() const { return kind_ == SpaceKind::kC; }

  /// Throws shape-mismatch or nonrepresentable.
  void validate(const FiniteVector& v) const;
  void validate_index(const CoordIndex& idx) const;

  std::string name() const;
  TextBlock to_text() const;
  static Space from_text(const TextBlock& block);
  /// Shorthand names: l1, linf, sup, c0, c, schreier, lp:P, weighted:A,
  /// omega (= l1-sum of |.|_{1/n}), omega:C, schreier+l1.
  static Space parse_name(const std::string& name);

  friend bool operator==(const Space& a, const Space& b);

 private:
  SpaceKind kind_ = SpaceKind::kSup;
  double p_ = 1.0;
  Rational alpha_{1};
  BlockRule rule_;
  std::shared_ptr<const Space> first_;
  std::shared_ptr<const Space> second_;
};

}  // namespace bsaks

#endif  // BSAKS_SPACE_HPP
