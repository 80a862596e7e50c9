#include "bsaks/window.hpp"

#include <numeric>

#include "bsaks/error.hpp"

namespace bsaks {

namespace {

constexpr std::int64_t kLimit = std::int64_t{1} << 61;

Integer lcm_int(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}  // namespace

DenseBlock::DenseBlock(const Space& space, const std::vector<FiniteVector>& vectors, std::size_t budget)
    : space_(space), vectors_(vectors) {
  for (const auto& v : vectors_) space_.validate(v);
  bool tail = false;
  auto cols = union_columns(vectors_, &tail);
  const std::size_t width = cols.size() + 1;
  if (static_cast<double>(width) * static_cast<double>(vectors_.size()) > static_cast<double>(budget)) {
    throw Error(ErrorCode::kSearchBudgetExceeded, "dense window of " + std::to_string(vectors_.size()) + " x " +
                                                      std::to_string(width) + " exceeds the entry budget");
  }
  plan_ = std::make_unique<NormPlan>(space_, cols, tail);

  const std::size_t n = vectors_.size();
  std::vector<Integer> dens(n, Integer(1));
  integer_ = true;
  for (std::size_t i = 0; i < n && integer_; ++i) {
    Integer d = denominator(vectors_[i].tail());
    for (const auto& e : vectors_[i].entries()) d = lcm_int(d, denominator(e.second));
    if (d > kLimit) integer_ = false;
    dens[i] = d;
  }
  if (!integer_) return;
  rows_ = RowMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(width));
  den_.resize(n);
  max_abs_.assign(n, 0);
  for (std::size_t i = 0; i < n && integer_; ++i) {
    den_[i] = dens[i].convert_to<std::int64_t>();
    auto row = dense_row(vectors_[i], cols);
    row.push_back(vectors_[i].tail());
    for (std::size_t j = 0; j < width; ++j) {
      const Rational scaled = row[j] * Rational(dens[i]);
      const Integer num = numerator(scaled);
      if (num > kLimit || -num > kLimit) {
        integer_ = false;
        break;
      }
      const auto v = num.convert_to<std::int64_t>();
      rows_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      max_abs_[i] = std::max(max_abs_[i], v < 0 ? -v : v);
    }
  }
  if (!integer_) return;

  Integer common(1);
  for (const auto& d : dens) {
    common = lcm_int(common, d);
    if (common > (std::int64_t{1} << 40)) return;
  }
  common_den_ = common.convert_to<std::int64_t>();
  common_rows_ = rows_;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t f = common_den_ / den_[i];
    if (static_cast<__int128>(max_abs_[i]) * f > (std::int64_t{1} << 40)) return;
    common_rows_.row(static_cast<Eigen::Index>(i)) *= f;
    common_max_ = std::max(common_max_, max_abs_[i] * f);
  }
  common_ = true;
}

Number DenseBlock::rational_distance(std::size_t k, std::size_t l) const {
  const auto& cols = plan_->columns();
  auto a = dense_row(vectors_[k], cols);
  auto b = dense_row(vectors_[l], cols);
  for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
  return plan_->evaluate(a.data(), Rational(vectors_[k].tail() - vectors_[l].tail()));
}

Number DenseBlock::distance(std::size_t k, std::size_t l) const {
  if (!integer_) return rational_distance(k, l);
  const std::int64_t g = std::gcd(den_[k], den_[l]);
  const std::int64_t fk = den_[l] / g;
  const std::int64_t fl = den_[k] / g;
  if (static_cast<__int128>(max_abs_[k]) * fk + static_cast<__int128>(max_abs_[l]) * fl >= kLimit) {
    return rational_distance(k, l);
  }
  const auto width = rows_.cols();
  std::vector<std::int64_t> diff(static_cast<std::size_t>(width));
  const std::int64_t* a = rows_.row(static_cast<Eigen::Index>(k)).data();
  const std::int64_t* b = rows_.row(static_cast<Eigen::Index>(l)).data();
  for (Eigen::Index j = 0; j < width; ++j) diff[static_cast<std::size_t>(j)] = a[j] * fk - b[j] * fl;
  Number raw = plan_->evaluate(diff.data(), diff.back());
  return raw / Number(Rational(Integer(den_[k]) * Integer(fk)));
}

Number DenseBlock::combination(const std::vector<std::pair<std::size_t, std::int64_t>>& terms,
                               std::int64_t divisor) const {
  if (divisor == 0) throw Error(ErrorCode::kInvalidArgument, "zero divisor");
  __int128 weight = 0;
  for (const auto& t : terms) weight += t.second < 0 ? -static_cast<__int128>(t.second) : t.second;
  if (common_ && weight * common_max_ < kLimit) {
    const auto width = common_rows_.cols();
    std::vector<std::int64_t> sum(static_cast<std::size_t>(width), 0);
    for (const auto& [i, c] : terms) {
      const std::int64_t* r = common_rows_.row(static_cast<Eigen::Index>(i)).data();
      for (Eigen::Index j = 0; j < width; ++j) sum[static_cast<std::size_t>(j)] += c * r[j];
    }
    Number raw = plan_->evaluate(sum.data(), sum.back());
    return raw / Number(Rational(Integer(common_den_) * Integer(divisor)));
  }
  FiniteVector w;
  for (const auto& [i, c] : terms) w += Rational(c) * vectors_[i];
  return norm(space_, w) / Number(Rational(divisor));
}

}  // namespace bsaks
