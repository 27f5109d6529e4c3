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

// The k-patroller game: an attack is intercepted when any of the k walks
// intercepts it.

#ifndef PATROL_MULTI_PATROL_HPP_
#define PATROL_MULTI_PATROL_HPP_

#include <compare>
#include <vector>

#include "patrol/exact_solver.hpp"
#include "patrol/game.hpp"
#include "patrol/rational.hpp"

namespace patrol {

inline constexpr long kDefaultTeamCap = 500000;

// Unordered team of walks; kept sorted so equal teams compare equal.
struct PatrolTeam {
  std::vector<PeriodicWalk> walks;

  PatrolTeam() = default;
  explicit PatrolTeam(std::vector<PeriodicWalk> members);

  int size() const { return static_cast<int>(walks.size()); }
  auto operator<=>(const PatrolTeam&) const = default;
};

using TeamStrategy = MixedStrategy<PatrolTeam>;

bool team_intercepts(const PatrolTeam& team, const Attack& attack);
CoverageMask team_coverage(const GameSpec& spec, const PatrolTeam& team);

// min(k v, 1).
Rational k_upper_bound(const Rational& v, int k);

// The single-patroller optimal row structure on L_n with the k patrollers
// on a uniformly random k-subset of the row's edges. k <= n/2, m = 2.
TeamStrategy lift_strategy(int n, int period, int k);

// L_7, T = 3, k = 4: one patroller stationary at node 2j-1 of row j, the
// other three on 4/7-biased oscillations favouring the even node.
TeamStrategy table4_strategy();

// Teams drawn independently per patroller from the given strategies.
TeamStrategy product_team(const std::vector<PatrolStrategy>& members);

std::vector<Rational> team_interception_vector(const GameSpec& spec,
                                               const TeamStrategy& strategy);
Rational team_guarantee(const GameSpec& spec, const TeamStrategy& strategy);
std::vector<Rational> team_node_guarantees(const GameSpec& spec,
                                           const TeamStrategy& strategy);

struct TeamResponse {
  PatrolTeam team;
  Rational value;
  long leaves = 0;  // complete teams evaluated by the exhaustive search
};

// Exact best team of spec.patrollers() walks against attack weights
// indexed by attack_index(). Branch and bound over undominated walks; throws
// kCapExceeded when more than `team_cap` complete teams are evaluated.
TeamResponse best_response_team(const GameSpec& spec,
                                const std::vector<Rational>& weights,
                                long walk_cap = default_walk_cap(),
                                long team_cap = kDefaultTeamCap);

// Value of the best team against the attack mixture.
Rational team_attacker_guarantee(const GameSpec& spec,
                                 const AttackStrategy& attacks,
                                 long walk_cap = default_walk_cap(),
                                 long team_cap = kDefaultTeamCap);

struct TeamSolution {
  Rational value;
  TeamStrategy patrollers;
  AttackStrategy attacker;
  int iterations = 0;
  long teams_considered = 0;
};

// Team column generation; each round tries a greedy team first and falls
// back to the exhaustive search before declaring the master optimal. m = 2.
TeamSolution solve_k_exact(const GameSpec& spec,
                           long walk_cap = default_walk_cap(),
                           long team_cap = kDefaultTeamCap);

}  // namespace patrol

#endif  // PATROL_MULTI_PATROL_HPP_
