#ifndef BSAKS_SIMPLEX_HPP
#define BSAKS_SIMPLEX_HPP

#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace bsaks {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

template <class T>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  T value{0};
  Eigen::Matrix<T, Eigen::Dynamic, 1> x;
};

/// Dense tableau simplex for  max c^T x  s.t.  A x <= b,  x >= 0.
/// Negative entries of b are handled by a single artificial column (phase 1).
/// Entering and leaving variables follow Bland's rule, so exact scalar types
/// terminate without cycling.
template <class T>
class TableauSimplex {
 public:
  using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<T, Eigen::Dynamic, 1>;

  TableauSimplex(const Matrix& A, const Vector& b, const Vector& c)
      : m_(static_cast<int>(b.size())), n_(static_cast<int>(c.size())), N_(n_ + 1), B_(m_), D_(m_ + 2, n_ + 2) {
    D_.setZero();
    D_.topLeftCorner(m_, n_) = A;
    for (int i = 0; i < m_; ++i) {
      B_[i] = n_ + i;
      D_(i, n_) = T(-1);
      D_(i, n_ + 1) = b(i);
    }
    for (int j = 0; j < n_; ++j) {
      N_[j] = j;
      D_(m_, j) = -c(j);
    }
    N_[n_] = -1;
    D_(m_ + 1, n_) = T(1);
  }

  LpResult<T> solve() {
    LpResult<T> out;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (D_(i, n_ + 1) < D_(r, n_ + 1)) r = i;
    }
    if (m_ > 0 && D_(r, n_ + 1) < T(0)) {
      pivot(r, n_);
      if (!run(2) || D_(m_ + 1, n_ + 1) < T(0)) {
        out.status = LpStatus::kInfeasible;
        return out;
      }
      for (int i = 0; i < m_; ++i) {
        if (B_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
          if (D_(i, j) != T(0) && (s == -1 || N_[j] < N_[s])) s = j;
        }
        if (s != -1) pivot(i, s);
      }
    }
    const bool bounded = run(1);
    out.x = Vector::Zero(n_);
    for (int i = 0; i < m_; ++i) {
      if (B_[i] >= 0 && B_[i] < n_) out.x(B_[i]) = D_(i, n_ + 1);
    }
    out.status = bounded ? LpStatus::kOptimal : LpStatus::kUnbounded;
    out.value = D_(m_, n_ + 1);
    return out;
  }

 private:
  void pivot(int r, int s) {
    const T inv = T(1) / D_(r, s);
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || D_(i, s) == T(0)) continue;
      const T f = D_(i, s) * inv;
      for (int j = 0; j < n_ + 2; ++j) {
        if (D_(r, j) != T(0)) D_(i, j) -= D_(r, j) * f;
      }
      D_(i, s) = D_(r, s) * f;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) D_(r, j) *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) D_(i, s) *= -inv;
    }
    D_(r, s) = inv;
    std::swap(B_[r], N_[s]);
  }

  bool run(int phase) {
    const int x = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (N_[j] == -phase) continue;
        if (D_(x, j) < T(0) && (s == -1 || N_[j] < N_[s])) s = j;
      }
      if (s == -1) return true;
      int r = -1;
      T best{0};
      for (int i = 0; i < m_; ++i) {
        if (!(D_(i, s) > T(0))) continue;
        T ratio = D_(i, n_ + 1) / D_(i, s);
        if (r == -1 || ratio < best || (ratio == best && B_[i] < B_[r])) {
          r = i;
          best = ratio;
        }
      }
      if (r == -1) return false;
      pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> N_;
  std::vector<int> B_;
  Matrix D_;
};

template <class T>
LpResult<T> lp_maximize(const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& A,
                        const Eigen::Matrix<T, Eigen::Dynamic, 1>& b, const Eigen::Matrix<T, Eigen::Dynamic, 1>& c) {
  return TableauSimplex<T>(A, b, c).solve();
}

}  // namespace bsaks

#endif  // BSAKS_SIMPLEX_HPP
