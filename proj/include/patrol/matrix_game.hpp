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

#ifndef PATROL_MATRIX_GAME_HPP_
#define PATROL_MATRIX_GAME_HPP_

#include <string>

#include "patrol/error.hpp"
#include "patrol/rational.hpp"
#include "patrol/simplex.hpp"

namespace patrol {

// Zero-sum game; the row player maximizes.
template <typename Scalar>
struct GameSolution {
  Scalar value{0};
  Vector<Scalar> row_strategy;
  Vector<Scalar> col_strategy;
  // Certificate: row_strategy^T M (one entry per column) and M col_strategy
  // (one entry per row).
  Vector<Scalar> row_guarantees;
  Vector<Scalar> col_guarantees;
};

// True when min(row_guarantees) == value == max(col_guarantees) and both
// strategies are probability vectors.
template <typename Scalar>
bool certificate_holds(const Matrix<Scalar>& payoff,
                       const GameSolution<Scalar>& sol) {
  using Ops = ScalarOps<Scalar>;
  auto is_distribution = [](const Vector<Scalar>& v) {
    Scalar total{0};
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (Ops::is_negative(v(i))) return false;
      total += v(i);
    }
    return Ops::is_zero(Scalar(total - Scalar(1)));
  };
  if (!is_distribution(sol.row_strategy) || !is_distribution(sol.col_strategy))
    return false;
  const Vector<Scalar> by_col = payoff.transpose() * sol.row_strategy;
  const Vector<Scalar> by_row = payoff * sol.col_strategy;
  return Ops::is_zero(Scalar(by_col.minCoeff() - sol.value)) &&
         Ops::is_zero(Scalar(by_row.maxCoeff() - sol.value));
}

// Solves max_p min_q p^T M q by the value-variable LP after shifting the
// payoffs to be at least one. The LP is posed with one constraint per pure
// strategy of whichever player has fewer of them, so the tableau stays
// narrow when one side is enumerated walks.
template <typename Scalar>
GameSolution<Scalar> solve_matrix_game(const Matrix<Scalar>& payoff) {
  const Eigen::Index rows = payoff.rows();
  const Eigen::Index cols = payoff.cols();
  PATROL_REQUIRE(rows > 0 && cols > 0, ErrorCategory::kInvalidArgument,
                 "matrix game needs at least one row and one column");

  const Scalar shift = Scalar(1) - payoff.minCoeff();
  Matrix<Scalar> shifted = payoff;
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) shifted(i, j) += shift;

  Vector<Scalar> y;  // unnormalized row strategy, sum = 1 / shifted value
  Vector<Scalar> z;  // unnormalized column strategy, same sum
  if (rows > cols) {
    // max -1^T y  s.t. -M'^T y <= -1.  Duals give z with M' z <= 1.
    const Matrix<Scalar> a = -shifted.transpose();
    const Vector<Scalar> b = Vector<Scalar>::Constant(cols, Scalar(-1));
    const Vector<Scalar> c = Vector<Scalar>::Constant(rows, Scalar(-1));
    LpSolution<Scalar> lp = solve_lp<Scalar>(a, b, c);
    PATROL_REQUIRE(lp.status == LpStatus::kOptimal, ErrorCategory::kInfeasible,
                   "matrix game LP did not reach an optimum");
    y = lp.primal;
    z = lp.dual;
  } else {
    // max 1^T z  s.t. M' z <= 1.  Duals give y with M'^T y >= 1.
    const Vector<Scalar> b = Vector<Scalar>::Constant(rows, Scalar(1));
    const Vector<Scalar> c = Vector<Scalar>::Constant(cols, Scalar(1));
    LpSolution<Scalar> lp = solve_lp<Scalar>(shifted, b, c);
    PATROL_REQUIRE(lp.status == LpStatus::kOptimal, ErrorCategory::kInfeasible,
                   "matrix game LP did not reach an optimum");
    z = lp.primal;
    y = lp.dual;
  }

  const Scalar total = y.sum();
  GameSolution<Scalar> sol;
  sol.value = Scalar(1) / total - shift;
  sol.row_strategy = y / total;
  sol.col_strategy = z / Scalar(z.sum());
  sol.row_guarantees = payoff.transpose() * sol.row_strategy;
  sol.col_guarantees = payoff * sol.col_strategy;
  PATROL_REQUIRE(certificate_holds(payoff, sol), ErrorCategory::kInfeasible,
                 "matrix game certificate failed");
  return sol;
}

}  // namespace patrol

#endif  // PATROL_MATRIX_GAME_HPP_
