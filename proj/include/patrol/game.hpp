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

// Pure and mixed strategies of the periodic patrolling game.
//
// Time runs on the circle 1..T with T+1 identified with 1. A Patroller pure
// strategy is a walk w(1..T) whose consecutive positions, including the wrap
// from w(T) back to w(1), are equal or adjacent. An Attacker pure strategy
// is a node and a start time; the attack occupies m consecutive times. The
// payoff is 1 when the walk visits the node during the attack.

#ifndef PATROL_GAME_HPP_
#define PATROL_GAME_HPP_

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "patrol/error.hpp"
#include "patrol/graph.hpp"
#include "patrol/rational.hpp"

namespace patrol {

class GameSpec {
 public:
  GameSpec(Graph graph, int period, int duration = 2, int patrollers = 1);

  const Graph& graph() const { return graph_; }
  int period() const { return period_; }
  int duration() const { return duration_; }
  int patrollers() const { return patrollers_; }
  int num_nodes() const { return graph_.num_nodes(); }
  int num_attacks() const { return graph_.num_nodes() * period_; }

  GameSpec with_patrollers(int k) const {
    return GameSpec(graph_, period_, duration_, k);
  }

 private:
  Graph graph_;
  int period_;
  int duration_;
  int patrollers_;
};

struct PeriodicWalk {
  std::vector<int> positions;  // w(1..T) stored at indices 0..T-1

  int period() const { return static_cast<int>(positions.size()); }
  // Position at time t in 1..T, or any integer reduced onto the circle.
  int at(int t) const;

  auto operator<=>(const PeriodicWalk&) const = default;
};

// Throws PatrolError{kInvalidWalk} naming the first offending time index.
void validate_walk(const GameSpec& spec, const PeriodicWalk& walk);
bool is_valid_walk(const GameSpec& spec, const PeriodicWalk& walk);

struct Attack {
  int node = 0;
  int start = 1;  // 1..T
  int duration = 2;

  // Times t, t+1, ..., t+m-1 reduced into 1..T.
  std::vector<int> interval(int period) const;

  auto operator<=>(const Attack&) const = default;
};

// Finitely supported distribution with exact probabilities. Entries are
// kept in insertion order; probabilities are positive and sum to one.
template <typename Pure>
class MixedStrategy {
 public:
  using Entry = std::pair<Pure, Rational>;

  MixedStrategy() = default;

  // Throws kInvalidArgument unless probabilities are positive, sum exactly
  // to one and the support has no repeated pure strategy.
  explicit MixedStrategy(std::vector<Entry> support)
      : support_(std::move(support)) {
    Rational total = 0;
    std::map<Pure, int> seen;
    for (const auto& [pure, prob] : support_) {
      PATROL_REQUIRE(prob > 0, ErrorCategory::kInvalidArgument,
                     "mixed strategy probability must be positive");
      PATROL_REQUIRE(seen.emplace(pure, 0).second,
                     ErrorCategory::kInvalidArgument,
                     "mixed strategy support has a repeated entry");
      total += prob;
    }
    PATROL_REQUIRE(total == 1, ErrorCategory::kInvalidArgument,
                   "mixed strategy probabilities sum to " + to_string(total));
  }

  // Merges repeated pure strategies and drops zero weights; the weights
  // must then sum to one. Order follows first appearance.
  static MixedStrategy from_weights(const std::vector<Entry>& weighted) {
    std::map<Pure, std::size_t> slot;
    std::vector<Entry> merged;
    for (const auto& [pure, prob] : weighted) {
      auto [it, inserted] = slot.emplace(pure, merged.size());
      if (inserted) {
        merged.emplace_back(pure, prob);
      } else {
        merged[it->second].second += prob;
      }
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    return MixedStrategy(std::move(merged));
  }

  static MixedStrategy uniform(const std::vector<Pure>& pures) {
    PATROL_REQUIRE(!pures.empty(), ErrorCategory::kInvalidArgument,
                   "uniform strategy over an empty set");
    const Rational p(1, static_cast<long>(pures.size()));
    std::vector<Entry> weighted;
    for (const Pure& pure : pures) weighted.emplace_back(pure, p);
    return from_weights(weighted);
  }

  static MixedStrategy pure(const Pure& p) {
    return MixedStrategy({{p, Rational(1)}});
  }

  // Sum of weight_i * strategy_i; weights must sum to one.
  static MixedStrategy mixture(
      const std::vector<std::pair<MixedStrategy, Rational>>& parts) {
    std::vector<Entry> weighted;
    for (const auto& [strategy, weight] : parts)
      for (const auto& [pure, prob] : strategy.support())
        weighted.emplace_back(pure, weight * prob);
    return from_weights(weighted);
  }

  const std::vector<Entry>& support() const { return support_; }
  std::size_t size() const { return support_.size(); }

  Rational probability_of(const Pure& p) const {
    for (const auto& [pure, prob] : support_)
      if (pure == p) return prob;
    return 0;
  }

 private:
  std::vector<Entry> support_;
};

using PatrolStrategy = MixedStrategy<PeriodicWalk>;
using AttackStrategy = MixedStrategy<Attack>;

// One bit per attack, indexed by attack_index().
using CoverageMask = boost::dynamic_bitset<>;

bool intercepts(const PeriodicWalk& walk, const Attack& attack);

// All n*T attacks, node-major then start time.
std::vector<Attack> enumerate_attacks(const GameSpec& spec);
int attack_index(const GameSpec& spec, const Attack& attack);
CoverageMask coverage(const GameSpec& spec, const PeriodicWalk& walk);

AttackStrategy uniform_attack(const GameSpec& spec);
// Equiprobable simultaneous attacks on a maximum independent set. m = 2.
AttackStrategy independent_attack(const GameSpec& spec, int start = 1);

Rational interception_probability(const PatrolStrategy& strategy,
                                  const Attack& attack);

struct BoundEntry {
  Rational value;
  std::string rule;
  bool upper = true;
};

struct ValueBounds {
  Rational lower;
  Rational upper;
  std::vector<BoundEntry> provenance;
};

// Every analytic bound that applies to the instance, combined into the
// tightest interval. Requires m = 2 and k = 1.
ValueBounds value_bounds(const GameSpec& spec);

}  // namespace patrol

#endif  // PATROL_GAME_HPP_
