#ifndef BSAKS_FUNCTIONAL_HPP
#define BSAKS_FUNCTIONAL_HPP

#include <string>

#include "bsaks/finite_vector.hpp"
#include "bsaks/rational.hpp"
#include "bsaks/space.hpp"

namespace bsaks {

enum class FunctionalKind { kCoordinate, kSignCombination };

/// Linear functional with finitely many listed coefficients. The coefficient
/// tail (constant value on unlisted coordinates) models bounded dual elements
/// of l1; `limit` is the coefficient of x -> lim x on c.
class Functional {
 public:
  static Functional coordinate(const CoordIndex& at);
  static Functional sign_combination(FiniteVector coefficients, Rational limit = Rational(0),
                                     Rational budget = Rational(1));

  FunctionalKind kind() const { return kind_; }
  const FiniteVector& coefficients() const { return coefficients_; }
  const Rational& limit() const { return limit_; }
  const Rational& budget() const { return budget_; }

  std::string to_string() const;

 private:
  FunctionalKind kind_ = FunctionalKind::kCoordinate;
  FiniteVector coefficients_;
  Rational limit_{0};
  Rational budget_{1};
};

/// Exact f(v). Throws undefined-pairing when both f and v have nonzero tails.
Rational pair(const Functional& f, const FiniteVector& v);

/// Upper bound for the dual norm of f on `space` (exact for l1, sup, c, and
/// single coordinates). +inf when f is unbounded there.
Number dual_norm_bound(const Space& space, const Functional& f);

/// dual_norm_bound(space, f) <= f.budget().
bool within_budget(const Space& space, const Functional& f);

}  // namespace bsaks

#endif  // BSAKS_FUNCTIONAL_HPP
