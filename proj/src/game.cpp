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

#include "patrol/game.hpp"

#include <algorithm>
#include <string>

namespace patrol {

GameSpec::GameSpec(Graph graph, int period, int duration, int patrollers)
    : graph_(std::move(graph)),
      period_(period),
      duration_(duration),
      patrollers_(patrollers) {
  PATROL_REQUIRE(graph_.num_nodes() >= 1, ErrorCategory::kInvalidArgument,
                 "graph has no nodes");
  PATROL_REQUIRE(period_ >= 2, ErrorCategory::kInvalidArgument,
                 "period must be at least 2");
  PATROL_REQUIRE(duration_ >= 1 && duration_ <= period_,
                 ErrorCategory::kInvalidArgument,
                 "attack duration must lie in 1..T");
  PATROL_REQUIRE(patrollers_ >= 1, ErrorCategory::kInvalidArgument,
                 "need at least one patroller");
}

int PeriodicWalk::at(int t) const {
  const int period = this->period();
  const int idx = ((t - 1) % period + period) % period;
  return positions[idx];
}

void validate_walk(const GameSpec& spec, const PeriodicWalk& walk) {
  PATROL_REQUIRE(walk.period() == spec.period(), ErrorCategory::kInvalidWalk,
                 "walk has length " + std::to_string(walk.period()) +
                     ", expected period " + std::to_string(spec.period()));
  const int n = spec.num_nodes();
  for (int t = 0; t < walk.period(); ++t) {
    const int here = walk.positions[t];
    PATROL_REQUIRE(here >= 0 && here < n, ErrorCategory::kInvalidWalk,
                   "walk position " + std::to_string(t + 1) +
                       " is not a node");
  }
  for (int t = 0; t < walk.period(); ++t) {
    const int here = walk.positions[t];
    const int next = walk.positions[(t + 1) % walk.period()];
    PATROL_REQUIRE(spec.graph().can_step(here, next),
                   ErrorCategory::kInvalidWalk,
                   "walk step " + std::to_string(t + 1) + " -> " +
                       std::to_string((t + 1) % walk.period() + 1) +
                       " joins non-adjacent nodes " +
                       spec.graph().label(here) + " and " +
                       spec.graph().label(next));
  }
}

bool is_valid_walk(const GameSpec& spec, const PeriodicWalk& walk) {
  try {
    validate_walk(spec, walk);
    return true;
  } catch (const PatrolError&) {
    return false;
  }
}

std::vector<int> Attack::interval(int period) const {
  std::vector<int> times;
  for (int k = 0; k < duration; ++k)
    times.push_back((start - 1 + k) % period + 1);
  return times;
}

bool intercepts(const PeriodicWalk& walk, const Attack& attack) {
  for (int k = 0; k < attack.duration; ++k)
    if (walk.at(attack.start + k) == attack.node) return true;
  return false;
}

std::vector<Attack> enumerate_attacks(const GameSpec& spec) {
  std::vector<Attack> attacks;
  attacks.reserve(spec.num_attacks());
  for (int node = 0; node < spec.num_nodes(); ++node)
    for (int t = 1; t <= spec.period(); ++t)
      attacks.push_back({node, t, spec.duration()});
  return attacks;
}

int attack_index(const GameSpec& spec, const Attack& attack) {
  return attack.node * spec.period() + (attack.start - 1);
}

CoverageMask coverage(const GameSpec& spec, const PeriodicWalk& walk) {
  const int period = spec.period();
  CoverageMask mask(spec.num_attacks());
  // The walk at time s intercepts attacks starting at s-m+1..s.
  for (int s = 1; s <= period; ++s) {
    const int node = walk.positions[s - 1];
    for (int back = 0; back < spec.duration(); ++back) {
      const int start = ((s - 1 - back) % period + period) % period;
      mask.set(node * period + start);
    }
  }
  return mask;
}

AttackStrategy uniform_attack(const GameSpec& spec) {
  return AttackStrategy::uniform(enumerate_attacks(spec));
}

AttackStrategy independent_attack(const GameSpec& spec, int start) {
  PATROL_REQUIRE(spec.duration() == 2, ErrorCategory::kInvalidArgument,
                 "independent attack is defined for attack duration 2");
  PATROL_REQUIRE(start >= 1 && start <= spec.period(),
                 ErrorCategory::kInvalidArgument,
                 "attack start must lie in 1..T");
  const IndependentResult ind = independence_number(spec.graph());
  std::vector<Attack> attacks;
  for (int node : ind.witness) attacks.push_back({node, start, 2});
  return AttackStrategy::uniform(attacks);
}

Rational interception_probability(const PatrolStrategy& strategy,
                                  const Attack& attack) {
  Rational total = 0;
  for (const auto& [walk, prob] : strategy.support())
    if (intercepts(walk, attack)) total += prob;
  return total;
}

ValueBounds value_bounds(const GameSpec& spec) {
  PATROL_REQUIRE(spec.duration() == 2 && spec.patrollers() == 1,
                 ErrorCategory::kInvalidArgument,
                 "analytic bounds hold for m = 2 and a single patroller");
  const Graph& g = spec.graph();
  const long n = g.num_nodes();
  const long period = spec.period();
  const bool odd = period % 2 == 1;
  const bool bipartite = bipartition(g).has_value();

  ValueBounds out;
  auto add = [&](Rational value, std::string rule, bool upper) {
    out.provenance.push_back({std::move(value), std::move(rule), upper});
  };

  add(Rational(1, n), "stationary_uniform", false);
  add(Rational(1, independence_number(g).size), "independent_attack",
      true);
  add(Rational(2, n), "uniform_attack", true);
  if (odd && bipartite)
    add(Rational(2 * period - 1, n * period),
        "uniform_attack_odd_bipartite", true);

  if (!g.has_isolated_node()) {
    const long cover = covering_number(g).size;
    if (!odd) {
      add(Rational(1, cover), "unbiased_covering", false);
      const Rational frac = Rational(1) / fractional_weightings(g).total;
      add(frac, "fractional_even_period", false);
      add(frac, "fractional_even_period", true);
    } else {
      add(Rational(2 * period - 1, 2 * period * cover),
          "biased_covering", false);
      if (bipartite && 2 * cover == n)
        add(Rational(2 * period - 1, n * period),
            "odd_period_perfect_cover", false);
    }
  }

  out.lower = 0;
  out.upper = 1;
  for (const BoundEntry& e : out.provenance) {
    if (e.upper) {
      out.upper = std::min(out.upper, e.value);
    } else {
      out.lower = std::max(out.lower, e.value);
    }
  }
  PATROL_REQUIRE(out.lower <= out.upper, ErrorCategory::kInfeasible,
                 "inconsistent analytic bounds");
  return out;
}

}  // namespace patrol
