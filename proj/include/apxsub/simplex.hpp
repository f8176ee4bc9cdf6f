// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense two-phase simplex for
//
//   maximize c'x  subject to  A x <= b,  x >= 0.
//
// Compact tableau: one column per nonbasic variable plus an auxiliary column
// for phase one and the right-hand side. Entering column by largest
// improvement, switching to Bland's smallest-index rule during long runs of
// degenerate pivots. The leaving row is the largest pivot element among rows
// whose ratio is within a small tolerance of the minimum.
//
// Every few hundred pivots, and whenever the tableau claims optimality, it is
// rebuilt from A, b, c and the current basis. Only the structural part of
// the basis needs a factorization, so the LU is at most (columns + 1) square.
// Sized for a few thousand rows and a few hundred columns.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace apxsub::lp {

enum class Status { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

struct Result {
  Status status = Status::kIterationLimit;
  double value = 0.0;
  std::vector<double> x;  // primal, one per column of A
  std::vector<double> y;  // dual, one per row of A (>= 0)
  std::int64_t pivots = 0;
};

class DenseSimplex {
 public:
  using Matrix = std::vector<std::vector<double>>;

  DenseSimplex(const Matrix& a, const std::vector<double>& b,
               const std::vector<double>& c, double eps = 1e-9)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        eps_(eps),
        a_(a),
        b_(b),
        c_(c),
        nonbasic_(static_cast<std::size_t>(n_ + 1)),
        basic_(static_cast<std::size_t>(m_)),
        d_(static_cast<std::size_t>(m_ + 2),
           std::vector<double>(static_cast<std::size_t>(n_ + 2), 0.0)) {
    if (static_cast<int>(a.size()) != m_) {
      throw std::invalid_argument("row count of A does not match b");
    }
    for (int i = 0; i < m_; ++i) {
      if (static_cast<int>(a[i].size()) != n_) {
        throw std::invalid_argument("column count of A does not match c");
      }
      for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
      basic_[i] = n_ + i;
      d_[i][n_] = -1.0;
      d_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1.0;
  }

  Result solve(std::int64_t max_pivots = 1'000'000) {
    max_pivots_ = max_pivots;
    Result result;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1] < -eps_) {
      pivot(r, n_);
      const Status phase1 = run(2);
      if (phase1 == Status::kIterationLimit) return finish(result, phase1);
      if (phase1 != Status::kOptimal || d_[m_ + 1][n_ + 1] < -eps_) {
        return finish(result, Status::kInfeasible);
      }
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j) {
          if (better_entering(d_[i], j, s)) s = j;
        }
        pivot(i, s);
      }
    }
    return finish(result, run(1));
  }

 private:
  bool better_entering(const std::vector<double>& row, int j, int s) const {
    return row[j] < row[s] || (row[j] == row[s] && nonbasic_[j] < nonbasic_[s]);
  }

  void pivot(int r, int s) {
    ++pivots_;
    ++since_reinversion_;
    std::vector<double>& pr = d_[r];
    const double inv = 1.0 / pr[s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(d_[i][s]) <= eps_) continue;
      std::vector<double>& row = d_[i];
      const double factor = row[s] * inv;
      for (int j = 0; j < n_ + 2; ++j) row[j] -= pr[j] * factor;
      row[s] = pr[s] * factor;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) pr[j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) d_[i][s] *= -inv;
    }
    pr[s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Coefficient of variable v (structural, slack n+k, or -1 for the
  // auxiliary) in constraint row k.
  double column_entry(int v, int k) const {
    if (v == -1) return -1.0;
    if (v < n_) return a_[k][v];
    return v - n_ == k ? 1.0 : 0.0;
  }

  double cost(int v, int phase) const {
    if (phase == 1) return v >= 0 && v < n_ ? c_[v] : 0.0;
    return v == -1 ? -1.0 : 0.0;
  }

  // Rebuilds every tableau entry from the original data. Returns false and
  // leaves the tableau untouched when the basis is numerically singular.
  bool reinvert() {
    std::vector<int> structural;  // tableau rows holding a non-slack basic
    std::vector<int> slack_row(static_cast<std::size_t>(m_), -1);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < n_) {
        structural.push_back(i);
      } else {
        slack_row[basic_[i] - n_] = i;
      }
    }
    std::vector<int> tight;  // constraint rows whose slack is nonbasic
    for (int k = 0; k < m_; ++k) {
      if (slack_row[k] == -1) tight.push_back(k);
    }
    const int k_size = static_cast<int>(structural.size());
    if (static_cast<int>(tight.size()) != k_size) return false;
    const int cols = n_ + 2;

    Eigen::MatrixXd rhs(m_, cols);
    for (int k = 0; k < m_; ++k) {
      for (int j = 0; j <= n_; ++j) rhs(k, j) = column_entry(nonbasic_[j], k);
      rhs(k, n_ + 1) = b_[k];
    }
    Eigen::MatrixXd z(k_size, cols);
    Eigen::MatrixXd basis_cols(m_, k_size);
    for (int q = 0; q < k_size; ++q) {
      const int v = basic_[structural[q]];
      for (int k = 0; k < m_; ++k) basis_cols(k, q) = column_entry(v, k);
    }
    if (k_size > 0) {
      Eigen::MatrixXd square(k_size, k_size);
      Eigen::MatrixXd square_rhs(k_size, cols);
      for (int p = 0; p < k_size; ++p) {
        square.row(p) = basis_cols.row(tight[p]);
        square_rhs.row(p) = rhs.row(tight[p]);
      }
      const Eigen::PartialPivLU<Eigen::MatrixXd> lu(square);
      if (!(lu.rcond() > 1e-13)) return false;
      z = lu.solve(square_rhs);
    }
    const Eigen::MatrixXd rest = rhs - basis_cols * z;

    for (int q = 0; q < k_size; ++q) {
      for (int j = 0; j < cols; ++j) d_[structural[q]][j] = z(q, j);
    }
    for (int k = 0; k < m_; ++k) {
      if (slack_row[k] == -1) continue;
      for (int j = 0; j < cols; ++j) d_[slack_row[k]][j] = rest(k, j);
    }
    for (int phase = 1; phase <= 2; ++phase) {
      std::vector<double>& row = d_[m_ + phase - 1];
      for (int j = 0; j < cols; ++j) {
        double v = 0.0;
        for (int i = 0; i < m_; ++i) {
          const double cb = cost(basic_[i], phase);
          if (cb != 0.0) v += cb * d_[i][j];
        }
        row[j] = j <= n_ ? v - cost(nonbasic_[j], phase) : v;
      }
    }
    for (int i = 0; i < m_; ++i) {
      if (d_[i][n_ + 1] < 0.0 && d_[i][n_ + 1] > -1e-7) d_[i][n_ + 1] = 0.0;
    }
    since_reinversion_ = 0;
    return true;
  }

  int entering(int phase, bool bland) const {
    const int x = m_ + phase - 1;
    int s = -1;
    for (int j = 0; j <= n_; ++j) {
      if (nonbasic_[j] == -phase) continue;
      if (bland) {
        if (d_[x][j] < -eps_ && (s == -1 || nonbasic_[j] < nonbasic_[s])) s = j;
      } else if (s == -1 || better_entering(d_[x], j, s)) {
        s = j;
      }
    }
    if (s == -1 || d_[x][s] >= -eps_) return -1;
    return s;
  }

  // phase 1 optimizes the objective row; phase 2 (auxiliary) row m+1.
  Status run(int phase) {
    int degenerate_run = 0;
    int final_checks = 0;
    for (;;) {
      if (pivots_ >= max_pivots_) return Status::kIterationLimit;
      if (since_reinversion_ >= kReinversionInterval) reinvert();
      int s = entering(phase, degenerate_run > 50);
      if (s == -1) {
        if (since_reinversion_ == 0 || final_checks >= 5 || !reinvert()) {
          return Status::kOptimal;
        }
        ++final_checks;
        s = entering(phase, false);
        if (s == -1) return Status::kOptimal;
      }
      double theta = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] > eps_) theta = std::min(theta, std::max(0.0, d_[i][n_ + 1]) / d_[i][s]);
      }
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= eps_) continue;
        if (std::max(0.0, d_[i][n_ + 1]) / d_[i][s] > theta + 1e-9) continue;
        if (r == -1 || d_[i][s] > d_[r][s] ||
            (d_[i][s] == d_[r][s] && basic_[i] < basic_[r])) {
          r = i;
        }
      }
      if (r == -1) return Status::kUnbounded;
      const bool degenerate = theta <= eps_;
      degenerate_run = degenerate ? degenerate_run + 1 : 0;
      pivot(r, s);
    }
  }

  Result& finish(Result& result, Status status) {
    result.status = status;
    result.pivots = pivots_;
    result.x.assign(static_cast<std::size_t>(n_), 0.0);
    result.y.assign(static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && basic_[i] < n_) result.x[basic_[i]] = d_[i][n_ + 1];
    }
    for (int j = 0; j <= n_; ++j) {
      if (nonbasic_[j] >= n_) result.y[nonbasic_[j] - n_] = d_[m_][j];
    }
    switch (status) {
      case Status::kOptimal: result.value = d_[m_][n_ + 1]; break;
      case Status::kInfeasible: result.value = -std::numeric_limits<double>::infinity(); break;
      case Status::kUnbounded: result.value = std::numeric_limits<double>::infinity(); break;
      case Status::kIterationLimit: result.value = d_[m_][n_ + 1]; break;
    }
    return result;
  }

  static constexpr int kReinversionInterval = 200;

  int m_;
  int n_;
  double eps_;
  Matrix a_;
  std::vector<double> b_;
  std::vector<double> c_;
  std::int64_t pivots_ = 0;
  std::int64_t since_reinversion_ = 0;
  std::int64_t max_pivots_ = 0;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  Matrix d_;
};

inline Result maximize(const DenseSimplex::Matrix& a, const std::vector<double>& b,
                       const std::vector<double>& c, double eps = 1e-9,
                       std::int64_t max_pivots = 1'000'000) {
  return DenseSimplex(a, b, c, eps).solve(max_pivots);
}

}  // namespace apxsub::lp
