#include "bsaks/norm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

#include "bsaks/error.hpp"

namespace bsaks {

struct NormPlan::Node {
  SpaceKind kind = SpaceKind::kSup;
  double p = 1.0;
  Rational alpha{1};
  std::size_t begin = 0;
  std::size_t end = 0;
  bool tail = false;
  std::vector<std::uint64_t> index;  // index values at this level (schreier)
  std::vector<std::shared_ptr<const Node>> children;
};

namespace {

using Node = NormPlan::Node;

template <class S>
struct Tr;

template <>
struct Tr<std::int64_t> {
  using Acc = __int128;
  static Acc mag(std::int64_t v) { return v < 0 ? -static_cast<Acc>(v) : static_cast<Acc>(v); }
  static Number num(const Acc& a) { return Number(from_int128(a)); }
  static double dbl(std::int64_t v) { return static_cast<double>(v); }
  static int sign(std::int64_t v) { return (v > 0) - (v < 0); }
};

template <>
struct Tr<Rational> {
  using Acc = Rational;
  static Acc mag(const Rational& v) { return v < 0 ? Rational(-v) : v; }
  static Number num(const Acc& a) { return Number(a); }
  static double dbl(const Rational& v) { return to_double(v); }
  static int sign(const Rational& v) { return v.sign(); }
};

template <>
struct Tr<double> {
  using Acc = double;
  static Acc mag(double v) { return std::fabs(v); }
  static Number num(const Acc& a) { return Number::floating(a); }
  static double dbl(double v) { return v; }
  static int sign(double v) { return (v > 0) - (v < 0); }
};

template <class Coef>
Coef coef_of(const Rational& q) {
  if constexpr (std::is_same_v<Coef, double>) {
    return to_double(q);
  } else {
    return q;
  }
}

std::shared_ptr<const Node> build(const Space& space, const std::vector<CoordIndex>& cols, std::size_t begin,
                                  std::size_t end, std::size_t level, bool tail) {
  auto node = std::make_shared<Node>();
  node->kind = space.kind();
  node->begin = begin;
  node->end = end;
  node->tail = tail;
  switch (space.kind()) {
    case SpaceKind::kLp: node->p = space.p(); break;
    case SpaceKind::kWeightedAlpha: node->alpha = space.alpha(); break;
    case SpaceKind::kSchreier:
      node->index.reserve(end - begin);
      for (std::size_t i = begin; i < end; ++i) node->index.push_back(cols[i][level]);
      break;
    case SpaceKind::kL1Sum:
    case SpaceKind::kSupSum: {
      std::size_t i = begin;
      while (i < end) {
        const std::uint64_t head = cols[i][level];
        std::size_t j = i;
        while (j < end && cols[j][level] == head) ++j;
        node->children.push_back(build(space.block(head), cols, i, j, level + 1, false));
        i = j;
      }
      break;
    }
    default: break;
  }
  return node;
}

template <class S, class Coef>
Number eval(const Node& n, const S* v, const S& tail, DualCoefficients<Coef>* dual);

template <class S, class Coef>
Number eval_max(const Node& n, const S* v, const S& tail, DualCoefficients<Coef>* dual) {
  using T = Tr<S>;
  typename T::Acc best{0};
  std::ptrdiff_t arg = -1;
  for (std::size_t i = n.begin; i < n.end; ++i) {
    auto m = T::mag(v[i]);
    if (m > best) {
      best = m;
      arg = static_cast<std::ptrdiff_t>(i);
    }
  }
  bool at_tail = false;
  if (n.tail) {
    auto m = T::mag(tail);
    if (m > best) {
      best = m;
      at_tail = true;
    }
  }
  if (dual) {
    if (at_tail) {
      dual->tail = Coef(T::sign(tail));
    } else if (arg >= 0) {
      dual->columns[static_cast<std::size_t>(arg)] = Coef(T::sign(v[arg]));
    }
  }
  return T::num(best);
}

template <class S, class Coef>
Number eval_l1(const Node& n, const S* v, DualCoefficients<Coef>* dual) {
  using T = Tr<S>;
  typename T::Acc sum{0};
  for (std::size_t i = n.begin; i < n.end; ++i) {
    sum += T::mag(v[i]);
    if (dual) dual->columns[i] = Coef(T::sign(v[i]));
  }
  return T::num(sum);
}

template <class S, class Coef>
Number eval_lp(const Node& n, const S* v, DualCoefficients<Coef>* dual) {
  using T = Tr<S>;
  double sum = 0;
  for (std::size_t i = n.begin; i < n.end; ++i) sum += std::pow(std::fabs(T::dbl(v[i])), n.p);
  const double value = std::pow(sum, 1.0 / n.p);
  if (dual) {
    if constexpr (std::is_same_v<Coef, double>) {
      if (value > 0) {
        for (std::size_t i = n.begin; i < n.end; ++i) {
          const double x = T::dbl(v[i]);
          dual->columns[i] = T::sign(v[i]) * std::pow(std::fabs(x) / value, n.p - 1.0);
        }
      }
    } else {
      throw Error(ErrorCode::kNonPolyhedralNorm, "no exact norming functional for lp:" + std::to_string(n.p));
    }
  }
  return Number::floating(value);
}

template <class S, class Coef>
Number eval_weighted(const Node& n, const S* v, DualCoefficients<Coef>* dual) {
  using T = Tr<S>;
  typename T::Acc sum{0};
  typename T::Acc best{0};
  std::ptrdiff_t arg = -1;
  for (std::size_t i = n.begin; i < n.end; ++i) {
    auto m = T::mag(v[i]);
    sum += m;
    if (m > best) {
      best = m;
      arg = static_cast<std::ptrdiff_t>(i);
    }
  }
  Number scaled;
  if constexpr (std::is_same_v<S, double>) {
    scaled = Number::floating(to_double(n.alpha) * sum);
  } else {
    scaled = Number(n.alpha) * T::num(sum);
  }
  const Number peak = T::num(best);
  const bool use_sum = !(scaled < peak);
  if (dual) {
    if (use_sum) {
      const Coef a = coef_of<Coef>(n.alpha);
      for (std::size_t i = n.begin; i < n.end; ++i) dual->columns[i] = a * Coef(T::sign(v[i]));
    } else if (arg >= 0) {
      dual->columns[static_cast<std::size_t>(arg)] = Coef(T::sign(v[arg]));
    }
  }
  return use_sum ? scaled : peak;
}

// sup over F with #F <= min F of sum_{i in F} |v_i|: for each candidate minimum
// q, add the largest (index(q) - 1) magnitudes to its right.
template <class S, class Coef>
Number eval_schreier(const Node& n, const S* v, DualCoefficients<Coef>* dual) {
  using T = Tr<S>;
  using Acc = typename T::Acc;
  const std::size_t len = n.end - n.begin;
  if (len == 0) return T::num(Acc{0});
  std::priority_queue<Acc, std::vector<Acc>, std::greater<Acc>> heap;
  Acc heap_sum{0};
  Acc best{0};
  std::size_t best_q = len;
  for (std::size_t r = len; r-- > 0;) {
    if (r + 1 < len) {
      auto m = T::mag(v[n.begin + r + 1]);
      heap.push(m);
      heap_sum += m;
    }
    const std::uint64_t cap = n.index[r] - 1;
    while (heap.size() > cap) {
      heap_sum -= heap.top();
      heap.pop();
    }
    Acc candidate = T::mag(v[n.begin + r]) + heap_sum;
    if (candidate > best || best_q == len) {
      best = candidate;
      best_q = r;
    }
  }
  if (dual && best > Acc{0}) {
    std::vector<std::size_t> rest;
    for (std::size_t r = best_q + 1; r < len; ++r) rest.push_back(r);
    std::stable_sort(rest.begin(), rest.end(),
                     [&](std::size_t a, std::size_t b) { return T::mag(v[n.begin + a]) > T::mag(v[n.begin + b]); });
    const std::size_t cap = std::min<std::size_t>(rest.size(), n.index[best_q] - 1);
    dual->columns[n.begin + best_q] = Coef(T::sign(v[n.begin + best_q]));
    for (std::size_t j = 0; j < cap; ++j) {
      dual->columns[n.begin + rest[j]] = Coef(T::sign(v[n.begin + rest[j]]));
    }
  }
  return T::num(best);
}

template <class S, class Coef>
Number eval(const Node& n, const S* v, const S& tail, DualCoefficients<Coef>* dual) {
  switch (n.kind) {
    case SpaceKind::kLp:
      if (n.p == 1.0) return eval_l1(n, v, dual);
      if (std::isinf(n.p)) return eval_max(n, v, tail, dual);
      return eval_lp(n, v, dual);
    case SpaceKind::kSup:
    case SpaceKind::kC: return eval_max(n, v, tail, dual);
    case SpaceKind::kWeightedAlpha: return eval_weighted(n, v, dual);
    case SpaceKind::kSchreier: return eval_schreier(n, v, dual);
    case SpaceKind::kL1Sum: {
      Number total(0);
      if constexpr (std::is_same_v<S, double>) total = Number::floating(0.0);
      for (const auto& child : n.children) total = total + eval(*child, v, tail, dual);
      return total;
    }
    case SpaceKind::kSupSum: {
      Number best(0);
      if constexpr (std::is_same_v<S, double>) best = Number::floating(0.0);
      std::size_t arg = n.children.size();
      for (std::size_t c = 0; c < n.children.size(); ++c) {
        Number value = eval(*n.children[c], v, tail, dual);
        if (arg == n.children.size() || value > best) {
          best = value;
          arg = c;
        }
      }
      if (dual) {
        for (std::size_t c = 0; c < n.children.size(); ++c) {
          if (c == arg) continue;
          for (std::size_t i = n.children[c]->begin; i < n.children[c]->end; ++i) dual->columns[i] = Coef(0);
        }
      }
      return best;
    }
  }
  return Number(0);
}

}  // namespace

NormPlan::NormPlan(const Space& space, std::vector<CoordIndex> columns, bool with_tail)
    : space_(space), columns_(std::move(columns)), with_tail_(with_tail) {
  if (with_tail_ && !space_.allows_tail()) {
    throw Error(ErrorCode::kNonRepresentable, "nonzero tail in " + space_.name());
  }
  for (const auto& c : columns_) space_.validate_index(c);
  root_ = build(space_, columns_, 0, columns_.size(), 0, with_tail_);
}

Number NormPlan::evaluate(const std::int64_t* values, std::int64_t tail) const {
  return eval<std::int64_t, Rational>(*root_, values, tail, nullptr);
}

Number NormPlan::evaluate(const Rational* values, const Rational& tail) const {
  return eval<Rational, Rational>(*root_, values, tail, nullptr);
}

Number NormPlan::evaluate(const double* values, double tail) const {
  return eval<double, double>(*root_, values, tail, nullptr);
}

Number NormPlan::evaluate_dual(const Rational* values, const Rational& tail, DualCoefficients<Rational>& dual) const {
  dual.columns.assign(columns_.size(), Rational(0));
  dual.tail = 0;
  return eval<Rational, Rational>(*root_, values, tail, &dual);
}

Number NormPlan::evaluate_dual(const double* values, double tail, DualCoefficients<double>& dual) const {
  dual.columns.assign(columns_.size(), 0.0);
  dual.tail = 0.0;
  return eval<double, double>(*root_, values, tail, &dual);
}

std::vector<CoordIndex> union_columns(const std::vector<FiniteVector>& vectors, bool* tail) {
  std::vector<CoordIndex> cols;
  bool any_tail = false;
  for (const auto& v : vectors) {
    for (const auto& e : v.entries()) cols.push_back(e.first);
    any_tail = any_tail || v.tail() != 0;
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  if (tail) *tail = any_tail;
  return cols;
}

std::vector<Rational> dense_row(const FiniteVector& v, const std::vector<CoordIndex>& columns) {
  std::vector<Rational> row(columns.size(), v.tail());
  auto it = columns.begin();
  for (const auto& [idx, value] : v.entries()) {
    it = std::lower_bound(it, columns.end(), idx);
    if (it == columns.end() || !(*it == idx)) {
      throw Error(ErrorCode::kInvalidArgument, "index " + idx.to_string() + " missing from plan columns");
    }
    row[static_cast<std::size_t>(it - columns.begin())] = value;
  }
  return row;
}

Number norm(const Space& space, const FiniteVector& v) {
  space.validate(v);
  std::vector<CoordIndex> cols;
  cols.reserve(v.entries().size());
  for (const auto& e : v.entries()) cols.push_back(e.first);
  NormPlan plan(space, cols, v.tail() != 0);
  std::vector<Rational> row;
  row.reserve(cols.size());
  for (const auto& e : v.entries()) row.push_back(e.second);
  return plan.evaluate(row.data(), v.tail());
}

Number norm_with_functional(const Space& space, const FiniteVector& v, FiniteVector& functional,
                            Rational& limit_coefficient) {
  if (!space.is_polyhedral()) {
    throw Error(ErrorCode::kNonPolyhedralNorm, space.name() + " has no finite dual description");
  }
  space.validate(v);
  std::vector<CoordIndex> cols;
  std::vector<Rational> row;
  for (const auto& e : v.entries()) {
    cols.push_back(e.first);
    row.push_back(e.second);
  }
  NormPlan plan(space, cols, v.tail() != 0);
  DualCoefficients<Rational> dual;
  Number value = plan.evaluate_dual(row.data(), v.tail(), dual);
  std::vector<FiniteVector::Entry> entries;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (dual.columns[i] != 0) entries.emplace_back(cols[i], dual.columns[i]);
  }
  functional = FiniteVector(std::move(entries));
  limit_coefficient = dual.tail;
  return value;
}

}  // namespace bsaks
