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

// Closed-form solution of the m = 2 patrolling game on the line L_n.
//
//   case 1  T even, n even               V = 2/n
//   case 2  T even, n odd                V = 2/(n+1)
//   case 3  T odd,  n even               V = (2T-1)/(nT)
//   case 4  T odd,  n odd,  n > 2T-1     V = (2T-1)/(nT)
//   case 5  T odd,  n odd,  n <= 2T-1    V = 2/(n+1)
//
// At n = 2T-1 both odd-odd formulas agree; the boundary is labelled case 5.
//
// Strategy constructors return fully expanded mixtures of pure walks on
// L_n (node index i-1 for label i), so every construction can be checked
// by patroller_guarantee() against the enumerated attacks.

#ifndef PATROL_LINE_SOLVER_HPP_
#define PATROL_LINE_SOLVER_HPP_

#include <iosfwd>
#include <optional>
#include <vector>

#include "patrol/game.hpp"
#include "patrol/graph.hpp"
#include "patrol/rational.hpp"

namespace patrol {

struct LineCase {
  int case_id = 0;
  int n = 0;
  int period = 0;
  Rational value;
  bool boundary = false;  // n == 2T-1, where cases 4 and 5 coincide
};

LineCase classify_case(int n, int period);
Rational line_value(int n, int period);
// Value of the non-periodic game, the T -> infinity limit: 1/ceil(n/2).
Rational limit_value(int n);

enum class Direction { kLeft, kRight };

// Oscillation on edge (i, i+1), i given as the 1-based left label.
//
// Right p-biased, odd T = 2q+1: with probability p the right node is held
// for two consecutive steps (q+1 visits), otherwise the left one; the
// position of the repeat is uniform over the T cyclic positions. A left
// p-biased oscillation is the right (1-p)-biased one. For even T only the
// unbiased p = 1/2 case exists and it is the plain alternation.
struct OscillationSpec {
  int edge = 1;
  Direction direction = Direction::kRight;
  Rational bias{1, 2};
};

PatrolStrategy expand_oscillation(const OscillationSpec& spec, int period);

// Oscillation between arbitrary adjacent nodes; `favoured` is repeated
// with probability p (odd T) and leads the alternation (even T).
PatrolStrategy oscillation_on(int other, int favoured, const Rational& p,
                              int period);

// (1,2),(3,4),... and, for odd n, (n-1,n) as 0-based edges.
std::vector<Edge> canonical_line_cover(int n);

// Equiprobable edge of `cover`, plain alternation. T even.
PatrolStrategy unbiased_covering_strategy(const Graph& g, int period,
                                          std::optional<std::vector<Edge>>
                                              cover = std::nullopt);
// Equiprobable edge of `cover`, unbiased oscillation with one repeat. T odd.
PatrolStrategy biased_covering_strategy(const Graph& g, int period,
                                        std::optional<std::vector<Edge>>
                                            cover = std::nullopt);

// Uniform row j of the D_j family, uniform edge in the row; A_j edges get
// left p-biased and B_j edges right p-biased oscillations.
PatrolStrategy row_family_strategy(int n, int period, const Rational& p);
// Edges of row D_j, 1 <= j <= (n+1)/2, with the orientation each uses.
std::vector<std::pair<Edge, Direction>> row_edges(int n, int j);

Rational case4_bias(int n, int period);  // (2T+n-1)/(2n)
PatrolStrategy case4_strategy(int n, int period);
PatrolStrategy case5_strategy(int n, int period);

struct DecomposeBound {
  Rational value;  // v1 v2 / (v1 + v2)
  Rational p1;     // v2 / (v1 + v2)
  Rational p2;     // v1 / (v1 + v2)
};
DecomposeBound decompose_bound(const Rational& v1, const Rational& v2);

// Case-5 strategy on 1..2T-1 mixed with the biased covering strategy on
// 2T..n; never crosses edge (2T-1, 2T). T, n odd, n > 2T-1.
PatrolStrategy decomposed_case4_strategy(int n, int period);

struct Decomposition {
  NodeSet left_nodes;
  NodeSet right_nodes;
  Rational p1;
  Rational p2;
  Rational v1;
  Rational v2;
};

struct DecomposabilityResult {
  bool decomposable = false;
  std::optional<Decomposition> witness;
  // Case 5 only: V - bound for the split L_{2j} + L_{n-2j}, j = 1..(n-1)/2.
  std::vector<Rational> gaps;
};

DecomposabilityResult is_decomposable(int n, int period);
// Patroller strategy realizing the witness split; never crosses it.
PatrolStrategy decomposition_strategy(int n, int period);

// Optimal strategies for each case.
PatrolStrategy line_patroller_strategy(int n, int period);
AttackStrategy line_attacker_strategy(int n, int period);

// Period 2(n-1) tour 1,2,...,n,...,2 started `phase` steps in.
PeriodicWalk boustrophedon_tour(int n, int phase);
// Tour with uniformly random phase (weight `tour_weight`) plus plain
// oscillations on (1,2) and (n-1,n) sharing the rest. Period 2(n-1).
PatrolStrategy tour_mixture_strategy(int n, const Rational& tour_weight);

// Relabel every walk position by adding `offset`.
PatrolStrategy shift_strategy(const PatrolStrategy& strategy, int offset);

// CSV rows n,T,case,value,boundary[,value_decimal].
void write_casemap_csv(std::ostream& out, int n_from, int n_to, int t_from,
                       int t_to, bool decimal);
// CSV rows n,2/(n+1),(2T-1)/(nT)[,decimals].
void write_curves_csv(std::ostream& out, int period, int n_from, int n_to,
                      bool decimal);

}  // namespace patrol

#endif  // PATROL_LINE_SOLVER_HPP_
