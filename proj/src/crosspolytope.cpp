#include "bsaks/crosspolytope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <boost/multiprecision/eigen.hpp>

#include "bsaks/error.hpp"
#include "bsaks/simplex.hpp"

namespace bsaks {

namespace {

using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RowQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

struct Bundle {
  std::vector<CoordIndex> cols;
  bool tail = false;
  std::unique_ptr<NormPlan> plan;
  MatrixQ V;      // one row per vector
  VectorQ tails;  // tail of each vector

  Bundle(const Space& space, const std::vector<FiniteVector>& vectors) {
    if (vectors.empty()) throw Error(ErrorCode::kInvalidArgument, "no vectors to combine");
    for (const auto& v : vectors) space.validate(v);
    cols = union_columns(vectors, &tail);
    plan = std::make_unique<NormPlan>(space, cols, tail);
    const auto d = static_cast<Eigen::Index>(vectors.size());
    V.resize(d, static_cast<Eigen::Index>(cols.size()));
    tails.resize(d);
    for (Eigen::Index i = 0; i < d; ++i) {
      auto row = dense_row(vectors[static_cast<std::size_t>(i)], cols);
      for (std::size_t j = 0; j < row.size(); ++j) V(i, static_cast<Eigen::Index>(j)) = row[j];
      tails(i) = vectors[static_cast<std::size_t>(i)].tail();
    }
  }

  std::size_t dim() const { return static_cast<std::size_t>(V.rows()); }

  Number evaluate(const std::vector<Rational>& alpha, DualCoefficients<Rational>* dual = nullptr) const {
    RowQ w = RowQ::Zero(V.cols());
    Rational t{0};
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      w += alpha[i] * V.row(static_cast<Eigen::Index>(i));
      t += alpha[i] * tails(static_cast<Eigen::Index>(i));
    }
    if (dual) return plan->evaluate_dual(w.data(), t, *dual);
    return plan->evaluate(w.data(), t);
  }

  // g(v_i) for every i
  VectorQ apply(const DualCoefficients<Rational>& g) const {
    VectorQ gc(V.cols());
    for (Eigen::Index j = 0; j < V.cols(); ++j) gc(j) = g.columns[static_cast<std::size_t>(j)];
    VectorQ out = V * gc;
    if (g.tail != 0) out += g.tail * tails;
    return out;
  }
};

struct OrthantSolution {
  Rational value;
  std::vector<Rational> alpha;
};

OrthantSolution solve_orthant(const Bundle& b, const std::vector<int>& sigma) {
  const std::size_t d = b.dim();
  std::vector<VectorQ> cuts;
  auto add_cut = [&](const std::vector<Rational>& alpha) {
    DualCoefficients<Rational> g;
    b.evaluate(alpha, &g);
    VectorQ c = b.apply(g);
    for (std::size_t i = 0; i < d; ++i) c(static_cast<Eigen::Index>(i)) *= sigma[i];
    cuts.push_back(std::move(c));
  };
  {
    std::vector<Rational> bary(d);
    for (std::size_t i = 0; i < d; ++i) bary[i] = Rational(sigma[i]) / Rational(static_cast<long>(d));
    add_cut(bary);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> vertex(d, Rational(0));
      vertex[i] = sigma[i];
      add_cut(vertex);
    }
  }
  const auto n = static_cast<Eigen::Index>(d + 1);
  VectorQ obj = VectorQ::Zero(n);
  obj(n - 1) = -1;
  for (int iteration = 0; iteration < 100000; ++iteration) {
    const auto m = static_cast<Eigen::Index>(2 + cuts.size());
    MatrixQ A = MatrixQ::Zero(m, n);
    VectorQ rhs = VectorQ::Zero(m);
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
      A(0, j) = 1;
      A(1, j) = -1;
    }
    rhs(0) = 1;
    rhs(1) = -1;
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      const auto r = static_cast<Eigen::Index>(2 + k);
      A.row(r).head(n - 1) = cuts[k].transpose();
      A(r, n - 1) = -1;
    }
    LpResult<Rational> lp = lp_maximize<Rational>(A, rhs, obj);
    if (lp.status != LpStatus::kOptimal) {
      throw Error(ErrorCode::kInvalidArgument, "orthant LP did not reach an optimum");
    }
    const Rational s = lp.x(n - 1);
    std::vector<Rational> alpha(d);
    for (std::size_t i = 0; i < d; ++i) alpha[i] = sigma[i] * lp.x(static_cast<Eigen::Index>(i));
    DualCoefficients<Rational> g;
    const Number phi = b.evaluate(alpha, &g);
    if (!(phi.exact() > s)) return {phi.exact(), std::move(alpha)};
    VectorQ c = b.apply(g);
    for (std::size_t i = 0; i < d; ++i) c(static_cast<Eigen::Index>(i)) *= sigma[i];
    cuts.push_back(std::move(c));
  }
  throw Error(ErrorCode::kInvalidArgument, "cutting-plane iteration limit reached");
}

std::vector<double> project_simplex(const std::vector<double>& y) {
  std::vector<double> u = y;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cumulative = 0;
  double theta = 0;
  for (std::size_t j = 0; j < u.size(); ++j) {
    cumulative += u[j];
    const double t = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0) theta = t;
  }
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = std::max(0.0, y[i] - theta);
  return out;
}

bool single_orthant(const Space& space, const std::vector<FiniteVector>& vectors) {
  if (!space.is_unconditional()) return false;
  for (const auto& v : vectors) {
    if (v.tail() != 0) return false;
  }
  return disjoint_supports(vectors);
}

std::vector<int> sign_pattern(std::size_t d, std::uint64_t code) {
  std::vector<int> sigma(d, 1);
  for (std::size_t i = 1; i < d; ++i) sigma[i] = (code >> (i - 1)) & 1u ? -1 : 1;
  return sigma;
}

bool better(const Number& value, const std::vector<Rational>& alpha, const Number& best,
            const std::vector<Rational>& best_alpha, bool have_best) {
  if (!have_best) return true;
  if (value < best) return true;
  if (best < value) return false;
  return lex_less(alpha, best_alpha);
}

}  // namespace

const char* min_method_name(MinMethod m) {
  switch (m) {
    case MinMethod::kFaceLpExact: return "face-LP-exact";
    case MinMethod::kSubgradientHeuristic: return "subgradient-heuristic";
    case MinMethod::kGridOracle: return "grid-oracle";
  }
  return "?";
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool disjoint_supports(const std::vector<FiniteVector>& vectors) {
  std::vector<CoordIndex> all;
  for (const auto& v : vectors) {
    for (const auto& e : v.entries()) all.push_back(e.first);
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

Number combination_norm(const Space& space, const std::vector<FiniteVector>& vectors,
                        const std::vector<Rational>& alpha) {
  if (alpha.size() != vectors.size()) throw Error(ErrorCode::kShapeMismatch, "coefficient count differs from vector count");
  FiniteVector w;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (alpha[i] != 0) w += alpha[i] * vectors[i];
  }
  return norm(space, w);
}

MinimizationResult crosspolytope_min(const Space& space, const std::vector<FiniteVector>& vectors,
                                     const CrosspolytopeOptions& options) {
  const std::size_t d = vectors.size();
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "no vectors to combine");
  if (!space.is_polyhedral()) {
    if (options.mode == MinMode::kExact) {
      throw Error(ErrorCode::kNonPolyhedralNorm, space.name() + " has no finite dual description");
    }
    return crosspolytope_heuristic(space, vectors, options);
  }
  if (options.mode == MinMode::kHeuristic) return crosspolytope_heuristic(space, vectors, options);
  const bool one = single_orthant(space, vectors);
  if (!one && d > options.face_cap) {
    if (options.mode == MinMode::kExact) {
      throw Error(ErrorCode::kCapExceeded,
                  std::to_string(d) + " vectors exceed the face cap " + std::to_string(options.face_cap));
    }
    return crosspolytope_heuristic(space, vectors, options);
  }
  Bundle bundle(space, vectors);
  const std::uint64_t orthants = one ? 1 : (std::uint64_t{1} << (d - 1));
  MinimizationResult best;
  best.method = MinMethod::kFaceLpExact;
  bool have = false;
  for (std::uint64_t code = 0; code < orthants; ++code) {
    std::vector<int> sigma = sign_pattern(d, code);
    OrthantSolution sol = solve_orthant(bundle, sigma);
    Number value(sol.value);
    if (better(value, sol.alpha, best.value, best.alpha, have)) {
      best.value = value;
      best.alpha = std::move(sol.alpha);
      best.face = sigma;
      have = true;
    }
  }
  return best;
}

MinimizationResult crosspolytope_heuristic(const Space& space, const std::vector<FiniteVector>& vectors,
                                           const CrosspolytopeOptions& options) {
  const std::size_t d = vectors.size();
  if (d == 0) throw Error(ErrorCode::kInvalidArgument, "no vectors to combine");
  for (const auto& v : vectors) space.validate(v);
  bool tail = false;
  auto cols = union_columns(vectors, &tail);
  NormPlan plan(space, cols, tail);
  Eigen::MatrixXd V(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(cols.size()));
  Eigen::VectorXd tails(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    auto row = dense_row(vectors[i], cols);
    for (std::size_t j = 0; j < row.size(); ++j) V(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = to_double(row[j]);
    tails(static_cast<Eigen::Index>(i)) = to_double(vectors[i].tail());
  }
  auto eval = [&](const std::vector<double>& alpha, DualCoefficients<double>* dual) {
    Eigen::RowVectorXd w = Eigen::RowVectorXd::Zero(V.cols());
    double t = 0;
    for (std::size_t i = 0; i < d; ++i) {
      w += alpha[i] * V.row(static_cast<Eigen::Index>(i));
      t += alpha[i] * tails(static_cast<Eigen::Index>(i));
    }
    if (dual) return plan.evaluate_dual(w.data(), t, *dual).to_double();
    return plan.evaluate(w.data(), t).to_double();
  };
  const std::uint64_t orthants = single_orthant(space, vectors) ? 1 : (d >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << (d - 1));
  const std::uint64_t starts = std::min<std::uint64_t>(orthants, options.max_starts);
  struct Start {
    double value;
    std::vector<double> t;
    std::vector<int> sigma;
  };
  std::vector<Start> finals;
  for (std::uint64_t code = 0; code < starts; ++code) {
    double best_value = std::numeric_limits<double>::infinity();
    std::vector<double> best_t;
    std::vector<int> best_sigma;
    std::vector<int> sigma = sign_pattern(d, code);
    std::vector<double> t(d, 1.0 / static_cast<double>(d));
    for (int iter = 1; iter <= options.iterations; ++iter) {
      std::vector<double> alpha(d);
      for (std::size_t i = 0; i < d; ++i) alpha[i] = sigma[i] * t[i];
      DualCoefficients<double> g;
      const double value = eval(alpha, &g);
      if (value < best_value) {
        best_value = value;
        best_t = t;
        best_sigma = sigma;
      }
      Eigen::VectorXd gc = Eigen::Map<const Eigen::VectorXd>(g.columns.data(), static_cast<Eigen::Index>(g.columns.size()));
      Eigen::VectorXd sg = V * gc + g.tail * tails;
      for (std::size_t i = 0; i < d; ++i) sg(static_cast<Eigen::Index>(i)) *= sigma[i];
      const double len = sg.norm();
      if (len == 0) break;
      const double step = 1.0 / std::sqrt(static_cast<double>(iter));
      std::vector<double> y(d);
      for (std::size_t i = 0; i < d; ++i) y[i] = t[i] - step * sg(static_cast<Eigen::Index>(i)) / len;
      t = project_simplex(y);
    }
    finals.push_back({best_value, std::move(best_t), std::move(best_sigma)});
  }
  std::stable_sort(finals.begin(), finals.end(), [](const Start& a, const Start& b) { return a.value < b.value; });
  if (finals.size() > 4) finals.resize(4);
  // polish: exact-convex line search along e_i - e_j inside the orthant
  auto value_at = [&](const std::vector<double>& t, const std::vector<int>& sigma) {
    std::vector<double> alpha(d);
    for (std::size_t i = 0; i < d; ++i) alpha[i] = sigma[i] * t[i];
    return eval(alpha, nullptr);
  };
  for (auto& st : finals) {
    for (int sweep = 0; sweep < 20 && d > 1; ++sweep) {
      const double before = st.value;
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (i == j || st.t[j] <= 0) continue;
          double lo = 0, hi = st.t[j];
          auto at = [&](double lambda) {
            std::vector<double> t = st.t;
            t[i] += lambda;
            t[j] -= lambda;
            return value_at(t, st.sigma);
          };
          for (int it = 0; it < 60; ++it) {
            const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
            if (at(m1) <= at(m2)) {
              hi = m2;
            } else {
              lo = m1;
            }
          }
          const double lambda = (lo + hi) / 2;
          const double v = at(lambda);
          if (v < st.value) {
            st.t[i] += lambda;
            st.t[j] -= lambda;
            st.value = v;
          }
        }
      }
      if (before - st.value < 1e-12) break;
    }
  }
  std::stable_sort(finals.begin(), finals.end(), [](const Start& a, const Start& b) { return a.value < b.value; });
  const std::vector<double>& best_t = finals.front().t;
  const std::vector<int>& best_sigma = finals.front().sigma;
  // exact coefficients with sum |alpha_i| = 1
  std::vector<Integer> q(d);
  Integer total = 0;
  for (std::size_t i = 0; i < d; ++i) {
    q[i] = Integer(static_cast<long long>(std::llround(best_t[i] * 1e6)));
    total += q[i];
  }
  if (total == 0) {
    q[0] = 1;
    total = 1;
  }
  MinimizationResult out;
  out.method = MinMethod::kSubgradientHeuristic;
  out.face = best_sigma;
  out.alpha.resize(d);
  for (std::size_t i = 0; i < d; ++i) out.alpha[i] = Rational(q[i] * best_sigma[i], total);
  out.value = combination_norm(space, vectors, out.alpha);
  return out;
}

MinimizationResult grid_oracle(const Space& space, const std::vector<FiniteVector>& vectors, const Rational& step) {
  const std::size_t d = vectors.size();
  if (d == 0 || d > 4) throw Error(ErrorCode::kCapExceeded, "grid oracle supports 1 to 4 vectors");
  if (step <= 0 || numerator(step) != 1) throw Error(ErrorCode::kInvalidArgument, "grid step must be 1/K");
  const std::uint64_t K = denominator(step).convert_to<std::uint64_t>();
  double points = 1;
  for (std::size_t i = 1; i < d; ++i) points *= static_cast<double>(K + i) / static_cast<double>(i) * 2.0;
  if (points > 5e6) throw Error(ErrorCode::kCapExceeded, "grid too fine for the oracle");
  Bundle bundle(space, vectors);
  MinimizationResult best;
  best.method = MinMethod::kGridOracle;
  bool have = false;
  std::vector<std::uint64_t> parts(d, 0);
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) {
    if (i + 1 == d) {
      parts[i] = left;
      std::vector<std::size_t> nz;
      for (std::size_t j = 0; j < d; ++j) {
        if (parts[j]) nz.push_back(j);
      }
      const std::uint64_t patterns = std::uint64_t{1} << (nz.size() - 1);
      for (std::uint64_t code = 0; code < patterns; ++code) {
        std::vector<Rational> alpha(d, Rational(0));
        std::vector<int> face(d, 1);
        for (std::size_t k = 0; k < nz.size(); ++k) {
          const int sign = k > 0 && ((code >> (k - 1)) & 1u) ? -1 : 1;
          face[nz[k]] = sign;
          alpha[nz[k]] = Rational(Integer(sign) * Integer(parts[nz[k]]), Integer(K));
        }
        Number value = bundle.evaluate(alpha);
        if (better(value, alpha, best.value, best.alpha, have)) {
          best.value = value;
          best.alpha = alpha;
          best.face = face;
          have = true;
        }
      }
      return;
    }
    for (std::uint64_t c = 0; c <= left; ++c) {
      parts[i] = c;
      rec(i + 1, left - c);
    }
  };
  rec(0, K);
  return best;
}

}  // namespace bsaks
