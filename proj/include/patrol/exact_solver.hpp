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

// Ground-truth solvers for the single-patroller game.
//
// solve_exact() enumerates every periodic walk and solves the full matrix
// game. solve_column_generation() grows a restricted set of walks, adding
// the best response to the current attack mixture until it no longer beats
// the master value. For m = 2 the best response is a cyclic dynamic
// program: attack (i, {t, t+1}) is intercepted iff i is w(t) or w(t+1), so
// the payoff splits into per-step gains on consecutive position pairs.

#ifndef PATROL_EXACT_SOLVER_HPP_
#define PATROL_EXACT_SOLVER_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "patrol/game.hpp"
#include "patrol/rational.hpp"

namespace patrol {

inline constexpr long kDefaultWalkCap = 200000;

// PATROL_WALK_CAP when set, kDefaultWalkCap otherwise.
long default_walk_cap();

// trace((A + I)^T): the number of periodic walks of period T.
BigInt walk_count(const Graph& g, int period);

// Every periodic walk in lexicographic order. Throws kCapExceeded when
// walk_count exceeds `cap`.
std::vector<PeriodicWalk> enumerate_walks(const GameSpec& spec,
                                          long cap = default_walk_cap());

struct PatrolSolution {
  Rational value;
  PatrolStrategy patroller;
  AttackStrategy attacker;
  std::string method;
  long walks_considered = 0;  // rows of the (final) master game
  int iterations = 1;
};

// Full enumeration; k = 1.
PatrolSolution solve_exact(const GameSpec& spec, long cap = default_walk_cap());

struct BestResponse {
  PeriodicWalk walk;
  Rational value;
};

// Walk maximizing the interception probability against `attacks`, ties
// broken towards the lexicographically smallest walk. Uses the cyclic DP
// for m = 2 and exhaustive search (within `cap`) otherwise.
BestResponse best_response_walk(const GameSpec& spec,
                                const AttackStrategy& attacks,
                                long cap = default_walk_cap());

// Same, with the attack mixture given as a dense vector indexed by
// attack_index(). m = 2 only.
BestResponse best_response_walk(const GameSpec& spec,
                                const std::vector<Rational>& attack_weights);

// m = 2, k = 1.
PatrolSolution solve_column_generation(const GameSpec& spec);

// Interception probability of every attack, indexed by attack_index().
std::vector<Rational> interception_vector(const GameSpec& spec,
                                          const PatrolStrategy& strategy);

// min over attacks of the interception probability.
Rational patroller_guarantee(const GameSpec& spec,
                             const PatrolStrategy& strategy);

// Per node, the minimum over start times of the interception probability.
std::vector<Rational> node_guarantees(const GameSpec& spec,
                                      const PatrolStrategy& strategy);

// Value of the best response walk: an upper bound on the game value.
Rational attacker_guarantee(const GameSpec& spec,
                            const AttackStrategy& attacks);

// 0/1 payoff matrix, one row per walk, one column per attack.
void write_payoff_csv(std::ostream& out, const GameSpec& spec,
                      const std::vector<PeriodicWalk>& walks);

// Indices of walks whose coverage is not strictly contained in another's,
// keeping the first walk of each distinct coverage.
std::vector<int> undominated_rows(const std::vector<CoverageMask>& masks);

}  // namespace patrol

#endif  // PATROL_EXACT_SOLVER_HPP_
