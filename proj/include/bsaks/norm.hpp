#ifndef BSAKS_NORM_HPP
#define BSAKS_NORM_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "bsaks/finite_vector.hpp"
#include "bsaks/rational.hpp"
#include "bsaks/space.hpp"

namespace bsaks {

/// Norming functional found while evaluating a norm: one coefficient per plan
/// column plus a coefficient of the limit functional (C spaces only).
template <class Coef>
struct DualCoefficients {
  std::vector<Coef> columns;
  Coef tail{0};
};

/// Norm evaluator for vectors laid out densely over a fixed, sorted column
/// list. Built once, evaluated many times (window profiles, LP cuts, grids).
class NormPlan {
 public:
  NormPlan(const Space& space, std::vector<CoordIndex> columns, bool with_tail);

  const Space& space() const { return space_; }
  const std::vector<CoordIndex>& columns() const { return columns_; }
  bool with_tail() const { return with_tail_; }

  /// Integer rows give the norm of the integer vector itself.
  Number evaluate(const std::int64_t* values, std::int64_t tail) const;
  Number evaluate(const Rational* values, const Rational& tail) const;
  Number evaluate(const double* values, double tail) const;

  Number evaluate_dual(const Rational* values, const Rational& tail, DualCoefficients<Rational>& dual) const;
  Number evaluate_dual(const double* values, double tail, DualCoefficients<double>& dual) const;

  struct Node;

 private:
  Space space_;
  std::vector<CoordIndex> columns_;
  bool with_tail_;
  std::shared_ptr<const Node> root_;
};

/// Union of supports, sorted; `tail` is set when some vector has a nonzero tail.
std::vector<CoordIndex> union_columns(const std::vector<FiniteVector>& vectors, bool* tail = nullptr);

/// Values of v over the plan columns.
std::vector<Rational> dense_row(const FiniteVector& v, const std::vector<CoordIndex>& columns);

Number norm(const Space& space, const FiniteVector& v);

/// Norm together with a norming functional (coefficients keyed by index, plus
/// the limit coefficient). Requires a polyhedral space.
Number norm_with_functional(const Space& space, const FiniteVector& v, FiniteVector& functional,
                            Rational& limit_coefficient);

}  // namespace bsaks

#endif  // BSAKS_NORM_HPP
