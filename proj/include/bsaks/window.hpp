#ifndef BSAKS_WINDOW_HPP
#define BSAKS_WINDOW_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "bsaks/finite_vector.hpp"
#include "bsaks/norm.hpp"
#include "bsaks/space.hpp"

namespace bsaks {

/// A finite family of vectors laid out over their union support. Rows are kept
/// as int64 numerators over a per-row denominator when they fit, so pairwise
/// distances and block sums run in machine integers; otherwise exact rationals.
class DenseBlock {
 public:
  static constexpr std::size_t kDefaultBudget = 15'000'000;  // stored entries

  DenseBlock(const Space& space, const std::vector<FiniteVector>& vectors, std::size_t budget = kDefaultBudget);

  std::size_t size() const { return vectors_.size(); }
  std::size_t columns() const { return plan_->columns().size(); }
  const FiniteVector& vector(std::size_t i) const { return vectors_[i]; }

  /// ||x_k - x_l|| (0-based).
  Number distance(std::size_t k, std::size_t l) const;

  /// ||sum_i c_i x_i|| for integer coefficients c_i; the result is divided by `divisor`.
  Number combination(const std::vector<std::pair<std::size_t, std::int64_t>>& terms, std::int64_t divisor) const;

  /// True when every row shares one int64 denominator (see common_row).
  bool has_common_denominator() const { return common_; }
  std::int64_t common_denominator() const { return common_den_; }
  /// Numerators of x_i over the common denominator, then the tail numerator.
  const std::int64_t* common_row(std::size_t i) const { return common_rows_.row(static_cast<Eigen::Index>(i)).data(); }
  std::int64_t common_max_abs() const { return common_max_; }
  const NormPlan& plan() const { return *plan_; }

 private:
  using RowMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  Number rational_distance(std::size_t k, std::size_t l) const;

  Space space_;
  std::vector<FiniteVector> vectors_;
  std::unique_ptr<NormPlan> plan_;
  bool integer_ = false;
  RowMatrix rows_;  // columns plus one tail column
  std::vector<std::int64_t> den_;
  std::vector<std::int64_t> max_abs_;
  bool common_ = false;
  std::int64_t common_den_ = 1;
  std::int64_t common_max_ = 0;
  RowMatrix common_rows_;
};

}  // namespace bsaks

#endif  // BSAKS_WINDOW_HPP
