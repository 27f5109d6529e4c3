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

#include "patrol/multi_patrol.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "patrol/line_solver.hpp"
#include "patrol/matrix_game.hpp"

namespace patrol {

PatrolTeam::PatrolTeam(std::vector<PeriodicWalk> members)
    : walks(std::move(members)) {
  std::sort(walks.begin(), walks.end());
}

bool team_intercepts(const PatrolTeam& team, const Attack& attack) {
  return std::any_of(team.walks.begin(), team.walks.end(),
                     [&](const PeriodicWalk& w) { return intercepts(w, attack); });
}

CoverageMask team_coverage(const GameSpec& spec, const PatrolTeam& team) {
  CoverageMask mask(spec.num_attacks());
  for (const PeriodicWalk& w : team.walks) {
    validate_walk(spec, w);
    mask |= coverage(spec, w);
  }
  return mask;
}

Rational k_upper_bound(const Rational& v, int k) {
  PATROL_REQUIRE(k >= 1, ErrorCategory::kInvalidArgument,
                 "team size must be at least 1");
  const Rational kv = v * k;
  return kv < 1 ? kv : Rational(1);
}

TeamStrategy product_team(const std::vector<PatrolStrategy>& members) {
  PATROL_REQUIRE(!members.empty(), ErrorCategory::kInvalidArgument,
                 "team needs at least one patroller");
  std::vector<std::pair<std::vector<PeriodicWalk>, Rational>> partial = {
      {{}, Rational(1)}};
  for (const PatrolStrategy& s : members) {
    std::vector<std::pair<std::vector<PeriodicWalk>, Rational>> next;
    next.reserve(partial.size() * s.size());
    for (const auto& [walks, prob] : partial) {
      for (const auto& [w, q] : s.support()) {
        std::vector<PeriodicWalk> extended = walks;
        extended.push_back(w);
        next.emplace_back(std::move(extended), prob * q);
      }
    }
    partial = std::move(next);
  }
  std::vector<TeamStrategy::Entry> entries;
  entries.reserve(partial.size());
  for (auto& [walks, prob] : partial)
    entries.emplace_back(PatrolTeam(std::move(walks)), prob);
  return TeamStrategy::from_weights(entries);
}

namespace {

// All k-subsets of {0..size-1} in lexicographic order.
std::vector<std::vector<int>> subsets(int size, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == size - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

// Uniform row, uniform k-subset of its per-patroller strategies.
TeamStrategy lift_rows(const std::vector<std::vector<PatrolStrategy>>& rows,
                       int k) {
  std::vector<std::pair<TeamStrategy, Rational>> parts;
  for (const auto& row : rows) {
    PATROL_REQUIRE(static_cast<int>(row.size()) >= k,
                   ErrorCategory::kInvalidArgument,
                   "row has fewer edges than patrollers");
    const auto picks = subsets(static_cast<int>(row.size()), k);
    const Rational weight(1, static_cast<long>(rows.size() * picks.size()));
    for (const auto& pick : picks) {
      std::vector<PatrolStrategy> members;
      for (int idx : pick) members.push_back(row[idx]);
      parts.emplace_back(product_team(members), weight);
    }
  }
  return TeamStrategy::mixture(parts);
}

}  // namespace

TeamStrategy lift_strategy(int n, int period, int k) {
  PATROL_REQUIRE(k >= 1 && 2 * k <= n, ErrorCategory::kInvalidArgument,
                 "lifted strategy needs 1 <= k <= n/2");
  const LineCase lc = classify_case(n, period);
  std::vector<std::vector<PatrolStrategy>> rows;
  if (lc.case_id == 4 || lc.case_id == 5) {
    const Rational p = lc.case_id == 4 ? case4_bias(n, period) : Rational(1);
    for (int j = 1; j <= (n + 1) / 2; ++j) {
      std::vector<PatrolStrategy> row;
      for (const auto& [e, dir] : row_edges(n, j))
        row.push_back(dir == Direction::kLeft
                          ? oscillation_on(e.v, e.u, p, period)
                          : oscillation_on(e.u, e.v, p, period));
      rows.push_back(std::move(row));
    }
  } else {
    std::vector<PatrolStrategy> row;
    for (const Edge& e : canonical_line_cover(n))
      row.push_back(oscillation_on(e.v, e.u, Rational(1, 2), period));
    rows.push_back(std::move(row));
  }
  return lift_rows(rows, k);
}

TeamStrategy table4_strategy() {
  constexpr int kNodes = 7;
  constexpr int kPeriod = 3;
  const Rational p(4, 7);
  std::vector<std::pair<TeamStrategy, Rational>> parts;
  for (int j = 1; j <= 4; ++j) {
    std::vector<PatrolStrategy> members;
    members.push_back(PatrolStrategy::pure(
        PeriodicWalk{std::vector<int>(kPeriod, 2 * j - 2)}));
    // Labels (2i-1, 2i) for i < j and (2i, 2i+1) for i >= j; the even
    // label 2i (index 2i-1) is favoured.
    for (int i = 1; i < j; ++i)
      members.push_back(oscillation_on(2 * i - 2, 2 * i - 1, p, kPeriod));
    for (int i = j; 2 * i + 1 <= kNodes; ++i)
      members.push_back(oscillation_on(2 * i, 2 * i - 1, p, kPeriod));
    parts.emplace_back(product_team(members), Rational(1, 4));
  }
  return TeamStrategy::mixture(parts);
}

std::vector<Rational> team_interception_vector(const GameSpec& spec,
                                               const TeamStrategy& strategy) {
  std::vector<Rational> out(spec.num_attacks(), Rational(0));
  for (const auto& [team, prob] : strategy.support()) {
    PATROL_REQUIRE(team.size() == spec.patrollers(),
                   ErrorCategory::kInvalidArgument,
                   "team has " + std::to_string(team.size()) +
                       " walks but the game has " +
                       std::to_string(spec.patrollers()) + " patrollers");
    const CoverageMask mask = team_coverage(spec, team);
    for (auto b = mask.find_first(); b != CoverageMask::npos;
         b = mask.find_next(b))
      out[b] += prob;
  }
  return out;
}

Rational team_guarantee(const GameSpec& spec, const TeamStrategy& strategy) {
  const std::vector<Rational> v = team_interception_vector(spec, strategy);
  return *std::min_element(v.begin(), v.end());
}

std::vector<Rational> team_node_guarantees(const GameSpec& spec,
                                           const TeamStrategy& strategy) {
  const std::vector<Rational> v = team_interception_vector(spec, strategy);
  std::vector<Rational> out;
  for (int node = 0; node < spec.num_nodes(); ++node) {
    auto first = v.begin() + node * spec.period();
    out.push_back(*std::min_element(first, first + spec.period()));
  }
  return out;
}

namespace {

// Branch and bound for the heaviest union of `k` masks. Weights are
// integers (int64 or BigInt) after scaling by a common denominator.
template <typename W>
class TeamSearch {
 public:
  TeamSearch(const std::vector<CoverageMask>& masks, std::vector<W> weights,
             int k, long cap)
      : masks_(masks), weights_(std::move(weights)), k_(k), cap_(cap) {}

  W mask_weight(const CoverageMask& m) const {
    W total{0};
    for (auto b = m.find_first(); b != CoverageMask::npos; b = m.find_next(b))
      total += weights_[b];
    return total;
  }

  // Greedy: add the largest marginal gain, lowest index on ties.
  std::vector<int> greedy(W& value) const {
    CoverageMask covered(weights_.size());
    std::vector<int> picked;
    value = W{0};
    const int steps = std::min<int>(k_, static_cast<int>(masks_.size()));
    for (int s = 0; s < steps; ++s) {
      int arg = -1;
      W best{0};
      for (int j = 0; j < static_cast<int>(masks_.size()); ++j) {
        if (std::find(picked.begin(), picked.end(), j) != picked.end())
          continue;
        const W gain = mask_weight(masks_[j] - covered);
        if (arg < 0 || gain > best) {
          arg = j;
          best = gain;
        }
      }
      picked.push_back(arg);
      covered |= masks_[arg];
      value += best;
    }
    return picked;
  }

  // Exhaustive search seeded with a known team.
  std::vector<int> exhaustive(std::vector<int> seed, W seed_value, W& value) {
    best_ = std::move(seed);
    best_value_ = seed_value;
    leaves_ = 0;
    chosen_.clear();
    CoverageMask covered(weights_.size());
    order_.resize(masks_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<W> totals;
    for (const auto& m : masks_) totals.push_back(mask_weight(m));
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return totals[a] > totals[b]; });
    recurse(0, covered, W{0});
    value = best_value_;
    return best_;
  }

  long leaves() const { return leaves_; }

 private:
  void recurse(std::size_t start, const CoverageMask& covered, W value) {
    const int remaining = k_ - static_cast<int>(chosen_.size());
    if (remaining == 0 || start == order_.size()) {
      ++leaves_;
      PATROL_REQUIRE(leaves_ <= cap_, ErrorCategory::kCapExceeded,
                     "exhaustive team search evaluated more than " +
                         std::to_string(cap_) + " teams");
      if (value > best_value_) {
        best_value_ = value;
        best_ = chosen_;
      }
      return;
    }
    std::vector<W> gains(order_.size() - start);
    for (std::size_t i = start; i < order_.size(); ++i)
      gains[i - start] = mask_weight(masks_[order_[i]] - covered);
    std::vector<W> top = gains;
    const auto r = std::min<std::size_t>(remaining, top.size());
    std::partial_sort(top.begin(), top.begin() + r, top.end(),
                      [](const W& a, const W& b) { return a > b; });
    W bound = value;
    for (std::size_t i = 0; i < r; ++i) bound += top[i];
    if (!(bound > best_value_)) return;

    for (std::size_t i = start; i < order_.size(); ++i) {
      const W& gain = gains[i - start];
      chosen_.push_back(order_[i]);
      recurse(i + 1, covered | masks_[order_[i]], value + gain);
      chosen_.pop_back();
    }
  }

  const std::vector<CoverageMask>& masks_;
  std::vector<W> weights_;
  int k_;
  long cap_;
  std::vector<int> order_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  W best_value_{0};
  long leaves_ = 0;
};

struct WalkUniverse {
  std::vector<PeriodicWalk> walks;
  std::vector<CoverageMask> masks;
};

WalkUniverse undominated_walks(const GameSpec& spec, long walk_cap) {
  const std::vector<PeriodicWalk> all = enumerate_walks(spec, walk_cap);
  std::vector<CoverageMask> masks;
  for (const PeriodicWalk& w : all) masks.push_back(coverage(spec, w));
  WalkUniverse u;
  for (int idx : undominated_rows(masks)) {
    u.walks.push_back(all[idx]);
    u.masks.push_back(masks[idx]);
  }
  return u;
}

PatrolTeam make_team(const WalkUniverse& u, const std::vector<int>& picked,
                     int k) {
  std::vector<PeriodicWalk> walks;
  for (int idx : picked) walks.push_back(u.walks[idx]);
  // Fewer undominated walks than patrollers: extra patrollers duplicate.
  while (static_cast<int>(walks.size()) < k) walks.push_back(walks.front());
  return PatrolTeam(std::move(walks));
}

struct ScaledWeights {
  BigInt denominator{1};
  std::vector<BigInt> numerators;
};

ScaledWeights scale(const std::vector<Rational>& weights) {
  ScaledWeights out;
  for (const Rational& w : weights)
    out.denominator = boost::multiprecision::lcm(
        out.denominator, boost::multiprecision::denominator(w));
  for (const Rational& w : weights)
    out.numerators.push_back(boost::multiprecision::numerator(w) *
                             (out.denominator /
                              boost::multiprecision::denominator(w)));
  return out;
}

class TeamOracle {
 public:
  TeamOracle(const GameSpec& spec, long walk_cap, long team_cap)
      : universe_(undominated_walks(spec, walk_cap)),
        k_(spec.patrollers()),
        team_cap_(team_cap) {}

  // Greedy team and, when `exhaustive`, the exact optimum.
  TeamResponse respond(const std::vector<Rational>& weights, bool exhaustive,
                       const std::optional<Rational>& beat = std::nullopt) {
    const ScaledWeights s = scale(weights);
    BigInt total = 0;
    for (const BigInt& x : s.numerators) total += x;
    if (total <= std::numeric_limits<std::int64_t>::max() / 2) {
      std::vector<std::int64_t> w;
      for (const BigInt& x : s.numerators) w.push_back(x.convert_to<std::int64_t>());
      return run<std::int64_t>(std::move(w), s.denominator, exhaustive, beat);
    }
    return run<BigInt>(s.numerators, s.denominator, exhaustive, beat);
  }

  const WalkUniverse& universe() const { return universe_; }

 private:
  template <typename W>
  TeamResponse run(std::vector<W> w, const BigInt& denominator,
                   bool exhaustive, const std::optional<Rational>& beat) {
    TeamSearch<W> search(universe_.masks, std::move(w), k_, team_cap_);
    W value{0};
    std::vector<int> picked = search.greedy(value);
    TeamResponse out;
    out.value = Rational(BigInt(value), denominator);
    if (exhaustive && !(beat && out.value > *beat)) {
      picked = search.exhaustive(picked, value, value);
      out.value = Rational(BigInt(value), denominator);
      out.leaves = search.leaves();
    }
    out.team = make_team(universe_, picked, k_);
    return out;
  }

  WalkUniverse universe_;
  int k_;
  long team_cap_;
};

RationalMatrix team_payoff(const std::vector<CoverageMask>& rows,
                           int num_attacks) {
  RationalMatrix m = RationalMatrix::Zero(
      static_cast<Eigen::Index>(rows.size()), num_attacks);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto b = rows[i].find_first(); b != CoverageMask::npos;
         b = rows[i].find_next(b))
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(b)) = 1;
  return m;
}

void require_pairwise(const GameSpec& spec) {
  PATROL_REQUIRE(spec.duration() == 2, ErrorCategory::kInvalidArgument,
                 "the team solver handles m = 2");
}

}  // namespace

TeamResponse best_response_team(const GameSpec& spec,
                                const std::vector<Rational>& weights,
                                long walk_cap, long team_cap) {
  require_pairwise(spec);
  PATROL_REQUIRE(static_cast<int>(weights.size()) == spec.num_attacks(),
                 ErrorCategory::kInvalidArgument,
                 "attack weight vector has the wrong size");
  TeamOracle oracle(spec, walk_cap, team_cap);
  return oracle.respond(weights, true);
}

Rational team_attacker_guarantee(const GameSpec& spec,
                                 const AttackStrategy& attacks, long walk_cap,
                                 long team_cap) {
  std::vector<Rational> weights(spec.num_attacks(), Rational(0));
  for (const auto& [attack, prob] : attacks.support()) {
    PATROL_REQUIRE(attack.node >= 0 && attack.node < spec.num_nodes() &&
                       attack.start >= 1 && attack.start <= spec.period() &&
                       attack.duration == spec.duration(),
                   ErrorCategory::kInvalidArgument,
                   "attack does not belong to this game");
    weights[attack_index(spec, attack)] += prob;
  }
  return best_response_team(spec, weights, walk_cap, team_cap).value;
}

TeamSolution solve_k_exact(const GameSpec& spec, long walk_cap,
                           long team_cap) {
  require_pairwise(spec);
  TeamOracle oracle(spec, walk_cap, team_cap);
  const int attacks = spec.num_attacks();

  std::vector<PatrolTeam> teams;
  std::vector<CoverageMask> rows;
  auto add = [&](const PatrolTeam& team) {
    rows.push_back(team_coverage(spec, team));
    teams.push_back(team);
  };
  add(oracle.respond(std::vector<Rational>(attacks, Rational(1, attacks)),
                     false)
          .team);

  TeamSolution out;
  while (true) {
    ++out.iterations;
    const GameSolution<Rational> master =
        solve_matrix_game<Rational>(team_payoff(rows, attacks));
    const std::vector<Rational> weights(master.col_strategy.begin(),
                                        master.col_strategy.end());
    TeamResponse response = oracle.respond(weights, true, master.value);
    out.teams_considered += response.leaves;
    if (!(response.value > master.value)) {
      std::vector<TeamStrategy::Entry> team_entries;
      for (std::size_t i = 0; i < teams.size(); ++i) {
        const Rational& p = master.row_strategy(static_cast<Eigen::Index>(i));
        if (p > 0) team_entries.emplace_back(teams[i], p);
      }
      const std::vector<Attack> all = enumerate_attacks(spec);
      std::vector<AttackStrategy::Entry> attack_entries;
      for (std::size_t j = 0; j < all.size(); ++j)
        if (weights[j] > 0) attack_entries.emplace_back(all[j], weights[j]);
      out.value = master.value;
      out.patrollers = TeamStrategy::from_weights(team_entries);
      out.attacker = AttackStrategy(std::move(attack_entries));
      return out;
    }
    PATROL_REQUIRE(std::find(teams.begin(), teams.end(), response.team) ==
                       teams.end(),
                   ErrorCategory::kInfeasible, "team column generation stalled");
    add(response.team);
  }
}

}  // namespace patrol
