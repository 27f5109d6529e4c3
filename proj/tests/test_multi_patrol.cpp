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

#include <doctest.h>

#include "patrol/exact_solver.hpp"
#include "patrol/line_solver.hpp"
#include "patrol/matrix_game.hpp"
#include "patrol/multi_patrol.hpp"

namespace patrol {
namespace {

// Value over every unordered pair of walks, solved as one matrix game.
Rational pair_game_value(const GameSpec& s) {
  const std::vector<PeriodicWalk> walks = enumerate_walks(s.with_patrollers(1));
  std::vector<CoverageMask> rows;
  for (std::size_t a = 0; a < walks.size(); ++a)
    for (std::size_t b = a; b < walks.size(); ++b)
      rows.push_back(coverage(s, walks[a]) | coverage(s, walks[b]));
  std::vector<CoverageMask> kept;
  for (int idx : undominated_rows(rows)) kept.push_back(rows[idx]);
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(kept.size()),
                                          s.num_attacks());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (int j = 0; j < s.num_attacks(); ++j)
      if (kept[i].test(j)) m(static_cast<Eigen::Index>(i), j) = 1;
  return solve_matrix_game<Rational>(m).value;
}

TEST_CASE("teams are unordered") {
  const PeriodicWalk a{{0, 1, 0}}, b{{2, 2, 2}};
  CHECK(PatrolTeam({a, b}) == PatrolTeam({b, a}));
  const GameSpec s(line_graph(3), 3, 2, 2);
  const PatrolTeam t({a, b});
  CHECK(team_intercepts(t, Attack{2, 1, 2}));
  CHECK(team_coverage(s, t).count() == 8);  // 3 + 2 at the pair, 3 at node 3
}

TEST_CASE("upper bound min(kV, 1)") {
  CHECK(k_upper_bound(Rational(5, 21), 4) == Rational(20, 21));
  CHECK(k_upper_bound(Rational(5, 21), 6) == 1);
  CHECK_THROWS_AS(k_upper_bound(Rational(1, 2), 0), PatrolError);
}

TEST_CASE("product teams multiply probabilities") {
  const PatrolStrategy x = oscillation_on(0, 1, Rational(2, 3), 3);
  const PatrolStrategy y = PatrolStrategy::pure(PeriodicWalk{{2, 2, 2}});
  const TeamStrategy t = product_team({x, y});
  CHECK(t.size() == x.size());
  for (const auto& [team, p] : t.support()) CHECK(team.size() == 2);
}

TEST_CASE("lifted strategies multiply the value") {
  for (int n = 4; n <= 7; ++n)
    for (int period : {2, 3, 4, 5, 12}) {
      if (period == 12 && n != 7) continue;
      for (int k = 1; 2 * k <= n; ++k) {
        CAPTURE(n);
        CAPTURE(period);
        CAPTURE(k);
        const GameSpec s(line_graph(n), period, 2, k);
        CHECK(team_guarantee(s, lift_strategy(n, period, k)) ==
              line_value(n, period) * k);
      }
    }
  CHECK_THROWS_AS(lift_strategy(7, 3, 4), PatrolError);
}

TEST_CASE("four-patroller construction on L_7, T = 3") {
  const GameSpec s(line_graph(7), 3, 2, 4);
  const TeamStrategy t = table4_strategy();
  for (const Rational& g : team_node_guarantees(s, t)) CHECK(g == Rational(6, 7));
  CHECK(team_guarantee(s, t) == Rational(6, 7));
  CHECK(team_guarantee(s, t) < k_upper_bound(line_value(7, 3), 4));
}

TEST_CASE("team interception vector validates team size") {
  const GameSpec s(line_graph(7), 3, 2, 3);
  CHECK_THROWS_AS(team_guarantee(s, table4_strategy()), PatrolError);
}

TEST_CASE("team best response against an independent search") {
  const GameSpec s(line_graph(4), 3, 2, 2);
  const std::vector<PeriodicWalk> walks = enumerate_walks(s.with_patrollers(1));
  const std::vector<Rational> weights = [&] {
    std::vector<Rational> w;
    for (int i = 0; i < s.num_attacks(); ++i) w.emplace_back((i * 7) % 5 + 1, 30);
    return w;
  }();
  Rational best = 0;
  for (const auto& a : walks)
    for (const auto& b : walks) {
      const CoverageMask m = coverage(s, a) | coverage(s, b);
      Rational v = 0;
      for (int j = 0; j < s.num_attacks(); ++j)
        if (m.test(j)) v += weights[j];
      best = std::max(best, v);
    }
  const TeamResponse r = best_response_team(s, weights);
  CHECK(r.value == best);
  CHECK(r.team.size() == 2);
  Rational check = 0;
  const CoverageMask m = team_coverage(s, r.team);
  for (int j = 0; j < s.num_attacks(); ++j)
    if (m.test(j)) check += weights[j];
  CHECK(check == best);
}

TEST_CASE("team solver matches the enumerated pair game") {
  for (int n = 3; n <= 5; ++n)
    for (int period = 2; period <= 4; ++period) {
      CAPTURE(n);
      CAPTURE(period);
      const GameSpec s(line_graph(n), period, 2, 2);
      const TeamSolution sol = solve_k_exact(s);
      CHECK(sol.value == pair_game_value(s));
      CHECK(team_guarantee(s, sol.patrollers) == sol.value);
      CHECK(team_attacker_guarantee(s, sol.attacker) == sol.value);
      CHECK(sol.value <= k_upper_bound(line_value(n, period), 2));
    }
}

TEST_CASE("team solver reproduces kV for k <= n/2") {
  const GameSpec s(line_graph(7), 3, 2, 2);
  CHECK(solve_k_exact(s).value == Rational(10, 21));
  CHECK(solve_k_exact(s.with_patrollers(3)).value == Rational(5, 7));
  CHECK(solve_k_exact(GameSpec(line_graph(6), 3, 2, 3)).value == Rational(5, 6));
}

TEST_CASE("even period with k at least the covering number wins surely") {
  CHECK(solve_k_exact(GameSpec(line_graph(5), 4, 2, 3)).value == 1);
  CHECK(solve_k_exact(GameSpec(line_graph(4), 2, 2, 2)).value == 1);
}

TEST_CASE("team search cap") {
  const GameSpec s(line_graph(7), 3, 2, 4);
  std::vector<Rational> uniform(s.num_attacks(), Rational(1, s.num_attacks()));
  CHECK_THROWS_AS(best_response_team(s, uniform, kDefaultWalkCap, 1),
                  PatrolError);
}

}  // namespace
}  // namespace patrol
