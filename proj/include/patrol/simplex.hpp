// Copyright 2026 The Patrol Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense two-phase tableau simplex. Dantzig pricing, falling back to Bland's
// anti-cycling rule for the rest of a phase after a run of degenerate pivots.
//
// The solver is templated on the scalar so the same code runs on exact
// rationals (the default everywhere in this library) and on doubles for
// quick experiments. Every comparison goes through ScalarOps so that the
// floating-point instantiation can use a tolerance while the rational one
// compares exactly.
//
// Problem form:
//
//    maximize    c^T x
//    subject to  A x <= b,   x >= 0
//
// b may have entries of either sign; rows with b_i < 0 get an artificial
// variable and phase 1 drives them out. The dual solution y >= 0 with
// A^T y >= c and b^T y = c^T x is read off the reduced costs of the slack
// columns in the final tableau.

#ifndef PATROL_SIMPLEX_HPP_
#define PATROL_SIMPLEX_HPP_

#include <type_traits>
#include <vector>

#include "patrol/error.hpp"
#include "patrol/rational.hpp"

namespace patrol {

template <typename Scalar>
struct ScalarOps {
  static constexpr bool kExact = !std::is_floating_point_v<Scalar>;
  static Scalar eps() {
    if constexpr (kExact) {
      return Scalar(0);
    } else {
      return Scalar(1e-11);
    }
  }
  static bool is_zero(const Scalar& x) {
    if constexpr (kExact) {
      return x == 0;
    } else {
      return x <= eps() && x >= -eps();
    }
  }
  static bool is_positive(const Scalar& x) { return x > eps(); }
  static bool is_negative(const Scalar& x) { return x < -eps(); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

template <typename Scalar>
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Scalar objective{0};
  Vector<Scalar> primal;  // x, one entry per column of A
  Vector<Scalar> dual;    // y, one entry per row of A
  int pivots = 0;
};

namespace internal {

template <typename Scalar>
class Tableau {
 public:
  using Ops = ScalarOps<Scalar>;

  Tableau(const Matrix<Scalar>& a, const Vector<Scalar>& b)
      : rows_(static_cast<int>(a.rows())),
        vars_(static_cast<int>(a.cols())) {
    for (int i = 0; i < rows_; ++i) {
      if (Ops::is_negative(b(i))) artificial_rows_.push_back(i);
    }
    artificials_ = static_cast<int>(artificial_rows_.size());
    cols_ = vars_ + rows_ + artificials_;
    table_ = Matrix<Scalar>::Zero(rows_ + 1, cols_ + 1);
    basis_.assign(rows_, -1);
    blocked_.assign(cols_, false);

    int next_artificial = vars_ + rows_;
    for (int i = 0; i < rows_; ++i) {
      const bool negate = Ops::is_negative(b(i));
      const Scalar sign = negate ? Scalar(-1) : Scalar(1);
      for (int j = 0; j < vars_; ++j) {
        if (!Ops::is_zero(a(i, j))) table_(i, j) = sign * a(i, j);
      }
      table_(i, vars_ + i) = sign;
      table_(i, cols_) = sign * b(i);
      if (negate) {
        table_(i, next_artificial) = Scalar(1);
        basis_[i] = next_artificial++;
      } else {
        basis_[i] = vars_ + i;
      }
    }
  }

  // Phase 1: maximize -(sum of artificials). Returns false if infeasible.
  bool phase_one() {
    if (artificials_ == 0) return true;
    Vector<Scalar> cost = Vector<Scalar>::Zero(cols_);
    for (int j = vars_ + rows_; j < cols_; ++j) cost(j) = Scalar(-1);
    load_objective(cost);
    run();  // bounded above by zero
    if (Ops::is_negative(table_(rows_, cols_))) return false;

    for (int j = vars_ + rows_; j < cols_; ++j) blocked_[j] = true;
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_ + rows_) continue;
      for (int j = 0; j < vars_ + rows_; ++j) {
        if (!Ops::is_zero(table_(i, j))) {
          pivot(i, j);
          break;
        }
      }
      // A row with no usable column is redundant; its artificial stays
      // basic at level zero and never re-enters the ratio test.
    }
    return true;
  }

  // Phase 2 on the caller's objective. Returns false if unbounded.
  bool phase_two(const Vector<Scalar>& c) {
    Vector<Scalar> cost = Vector<Scalar>::Zero(cols_);
    cost.head(vars_) = c;
    load_objective(cost);
    return run();
  }

  LpSolution<Scalar> extract() const {
    LpSolution<Scalar> out;
    out.status = LpStatus::kOptimal;
    out.objective = table_(rows_, cols_);
    out.primal = Vector<Scalar>::Zero(vars_);
    for (int i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) out.primal(basis_[i]) = table_(i, cols_);
    }
    out.dual = Vector<Scalar>::Zero(rows_);
    for (int i = 0; i < rows_; ++i) out.dual(i) = table_(rows_, vars_ + i);
    out.pivots = pivots_;
    return out;
  }

  int pivots() const { return pivots_; }

 private:
  // Objective row holds reduced costs z_j - c_j and the current value.
  void load_objective(const Vector<Scalar>& cost) {
    for (int j = 0; j <= cols_; ++j) {
      Scalar acc = (j < cols_) ? Scalar(-cost(j)) : Scalar(0);
      for (int i = 0; i < rows_; ++i) {
        const Scalar& cb = cost(basis_[i]);
        if (!Ops::is_zero(cb) && !Ops::is_zero(table_(i, j))) {
          acc += cb * table_(i, j);
        }
      }
      table_(rows_, j) = acc;
    }
  }

  bool run() {
    bool bland = false;
    int degenerate = 0;
    while (true) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (blocked_[j] || !Ops::is_negative(table_(rows_, j))) continue;
        if (enter < 0 || (!bland && table_(rows_, j) < table_(rows_, enter))) {
          enter = j;
          if (bland) break;
        }
      }
      if (enter < 0) return true;

      // Min-ratio test; ties go to the basic variable of lowest index.
      int leave = -1;
      Scalar best_ratio{0};
      for (int i = 0; i < rows_; ++i) {
        if (!Ops::is_positive(table_(i, enter))) continue;
        Scalar ratio = table_(i, cols_) / table_(i, enter);
        bool take = leave < 0;
        if (!take) {
          const Scalar diff = ratio - best_ratio;
          take = Ops::is_negative(diff) ||
                 (Ops::is_zero(diff) && basis_[i] < basis_[leave]);
        }
        if (take) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;
      if (Ops::is_zero(best_ratio)) {
        bland = bland || ++degenerate > kDegenerateLimit;
      } else {
        degenerate = 0;
      }
      pivot(leave, enter);
    }
  }

  void pivot(int row, int col) {
    ++pivots_;
    const Scalar inv = Scalar(1) / table_(row, col);
    nonzero_.clear();
    for (int j = 0; j <= cols_; ++j) {
      if (!Ops::is_zero(table_(row, j))) {
        table_(row, j) *= inv;
        nonzero_.push_back(j);
      } else if constexpr (!Ops::kExact) {
        table_(row, j) = Scalar(0);
      }
    }
    for (int i = 0; i <= rows_; ++i) {
      if (i == row) continue;
      const Scalar factor = table_(i, col);
      if (Ops::is_zero(factor)) continue;
      for (int j : nonzero_) table_(i, j) -= factor * table_(row, j);
      table_(i, col) = Scalar(0);
    }
    basis_[row] = col;
  }

  static constexpr int kDegenerateLimit = 50;

  int rows_;
  int vars_;
  int artificials_ = 0;
  int cols_ = 0;
  int pivots_ = 0;
  Matrix<Scalar> table_;
  std::vector<int> basis_;
  std::vector<int> artificial_rows_;
  std::vector<bool> blocked_;
  std::vector<int> nonzero_;
};

}  // namespace internal

// maximize c^T x s.t. A x <= b, x >= 0.
template <typename Scalar>
LpSolution<Scalar> solve_lp(const Matrix<Scalar>& a, const Vector<Scalar>& b,
                            const Vector<Scalar>& c) {
  PATROL_REQUIRE(a.rows() == b.size() && a.cols() == c.size(),
                 ErrorCategory::kInvalidArgument,
                 "solve_lp: dimension mismatch");
  internal::Tableau<Scalar> tableau(a, b);
  LpSolution<Scalar> out;
  if (!tableau.phase_one()) {
    out.status = LpStatus::kInfeasible;
    out.pivots = tableau.pivots();
    return out;
  }
  if (!tableau.phase_two(c)) {
    out.status = LpStatus::kUnbounded;
    out.pivots = tableau.pivots();
    return out;
  }
  return tableau.extract();
}

}  // namespace patrol

#endif  // PATROL_SIMPLEX_HPP_
