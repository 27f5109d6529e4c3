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

#include "patrol/exact_solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <string>

#include "patrol/matrix_game.hpp"

namespace patrol {

long default_walk_cap() {
  if (const char* env = std::getenv("PATROL_WALK_CAP")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap > 0) return cap;
  }
  return kDefaultWalkCap;
}

BigInt walk_count(const Graph& g, int period) {
  const int n = g.num_nodes();
  const Matrix<int> adjacency = g.adjacency_matrix();
  Matrix<BigInt> step(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      step(i, j) = BigInt(adjacency(i, j) + (i == j ? 1 : 0));

  Matrix<BigInt> result = Matrix<BigInt>::Identity(n, n);
  Matrix<BigInt> base = step;
  for (int e = period; e > 0; e >>= 1) {
    if (e & 1) result = (result * base).eval();
    if (e > 1) base = (base * base).eval();
  }
  return result.trace();
}

namespace {

class WalkEnumerator {
 public:
  explicit WalkEnumerator(const GameSpec& spec) : spec_(spec) {
    const Graph& g = spec.graph();
    for (int u = 0; u < g.num_nodes(); ++u) {
      std::vector<int> moves = g.neighbors(u);
      moves.push_back(u);
      std::sort(moves.begin(), moves.end());
      moves_.push_back(std::move(moves));
    }
  }

  std::vector<PeriodicWalk> run() {
    current_.positions.resize(spec_.period());
    for (int s = 0; s < spec_.num_nodes(); ++s) {
      current_.positions[0] = s;
      extend(1);
    }
    return std::move(out_);
  }

 private:
  void extend(int t) {
    const int prev = current_.positions[t - 1];
    if (t == spec_.period()) {
      if (spec_.graph().can_step(prev, current_.positions[0]))
        out_.push_back(current_);
      return;
    }
    for (int v : moves_[prev]) {
      current_.positions[t] = v;
      extend(t + 1);
    }
  }

  const GameSpec& spec_;
  std::vector<std::vector<int>> moves_;
  PeriodicWalk current_;
  std::vector<PeriodicWalk> out_;
};

RationalMatrix payoff_matrix(const std::vector<CoverageMask>& rows,
                             int num_attacks) {
  RationalMatrix m = RationalMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                          num_attacks);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (auto b = rows[i].find_first(); b != CoverageMask::npos;
         b = rows[i].find_next(b))
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(b)) = 1;
  return m;
}

PatrolSolution to_patrol_solution(const GameSpec& spec,
                                  const std::vector<PeriodicWalk>& walks,
                                  const GameSolution<Rational>& game) {
  const std::vector<Attack> attacks = enumerate_attacks(spec);
  std::vector<PatrolStrategy::Entry> walk_entries;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const Rational& p = game.row_strategy(static_cast<Eigen::Index>(i));
    if (p > 0) walk_entries.emplace_back(walks[i], p);
  }
  std::vector<AttackStrategy::Entry> attack_entries;
  for (std::size_t j = 0; j < attacks.size(); ++j) {
    const Rational& q = game.col_strategy(static_cast<Eigen::Index>(j));
    if (q > 0) attack_entries.emplace_back(attacks[j], q);
  }
  PatrolSolution out;
  out.value = game.value;
  out.patroller = PatrolStrategy(std::move(walk_entries));
  out.attacker = AttackStrategy(std::move(attack_entries));
  out.walks_considered = static_cast<long>(walks.size());
  return out;
}

std::vector<Rational> dense_weights(const GameSpec& spec,
                                    const AttackStrategy& attacks) {
  std::vector<Rational> weights(spec.num_attacks(), Rational(0));
  for (const auto& [attack, prob] : attacks.support()) {
    PATROL_REQUIRE(attack.node >= 0 && attack.node < spec.num_nodes() &&
                       attack.start >= 1 && attack.start <= spec.period() &&
                       attack.duration == spec.duration(),
                   ErrorCategory::kInvalidArgument,
                   "attack does not belong to this game");
    weights[attack_index(spec, attack)] += prob;
  }
  return weights;
}

Rational walk_payoff(const GameSpec& spec, const PeriodicWalk& walk,
                     const std::vector<Rational>& weights) {
  const CoverageMask mask = coverage(spec, walk);
  Rational total = 0;
  for (auto b = mask.find_first(); b != CoverageMask::npos;
       b = mask.find_next(b))
    total += weights[b];
  return total;
}

// Column generation seeds: stationary walks plus every oscillation on
// every edge (both phases for even T; one repeated endpoint for odd T).
std::vector<PeriodicWalk> seed_walks(const GameSpec& spec) {
  const int period = spec.period();
  std::set<PeriodicWalk> seeds;
  for (int u = 0; u < spec.num_nodes(); ++u)
    seeds.insert(PeriodicWalk{std::vector<int>(period, u)});
  for (const Edge& e : spec.graph().edges()) {
    for (int phase = 0; phase < 2; ++phase) {
      const int first = phase == 0 ? e.u : e.v;
      const int second = phase == 0 ? e.v : e.u;
      if (period % 2 == 0) {
        PeriodicWalk w;
        for (int t = 0; t < period; ++t)
          w.positions.push_back(t % 2 == 0 ? first : second);
        seeds.insert(w);
      } else {
        // `first` held at times r and r+1, alternation elsewhere.
        for (int r = 0; r < period; ++r) {
          PeriodicWalk w;
          w.positions.assign(period, first);
          for (int k = 1; k < period; ++k)
            w.positions[(r + k) % period] = (k % 2 == 1) ? first : second;
          seeds.insert(w);
        }
      }
    }
  }
  return {seeds.begin(), seeds.end()};
}

}  // namespace

std::vector<PeriodicWalk> enumerate_walks(const GameSpec& spec, long cap) {
  const BigInt count = walk_count(spec.graph(), spec.period());
  PATROL_REQUIRE(count <= cap, ErrorCategory::kCapExceeded,
                 "instance has " + count.str() +
                     " periodic walks, above the enumeration cap of " +
                     std::to_string(cap) +
                     "; use column generation (--method colgen)");
  return WalkEnumerator(spec).run();
}

std::vector<int> undominated_rows(const std::vector<CoverageMask>& masks) {
  std::map<CoverageMask, int> first;
  for (int i = 0; i < static_cast<int>(masks.size()); ++i)
    first.emplace(masks[i], i);
  std::vector<int> distinct;
  for (const auto& [mask, idx] : first) distinct.push_back(idx);
  std::stable_sort(distinct.begin(), distinct.end(), [&](int a, int b) {
    return masks[a].count() > masks[b].count();
  });
  std::vector<int> kept;
  for (int idx : distinct) {
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](int k) {
      return masks[idx].is_subset_of(masks[k]);
    });
    if (!dominated) kept.push_back(idx);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

PatrolSolution solve_exact(const GameSpec& spec, long cap) {
  PATROL_REQUIRE(spec.patrollers() == 1, ErrorCategory::kInvalidArgument,
                 "solve_exact handles a single patroller");
  const std::vector<PeriodicWalk> all = enumerate_walks(spec, cap);
  std::vector<CoverageMask> masks;
  masks.reserve(all.size());
  for (const PeriodicWalk& w : all) masks.push_back(coverage(spec, w));

  // Dominated walks never raise the value; dropping them keeps the
  // tableau small without changing the solution's guarantees.
  const std::vector<int> kept = undominated_rows(masks);
  std::vector<PeriodicWalk> walks;
  std::vector<CoverageMask> rows;
  for (int idx : kept) {
    walks.push_back(all[idx]);
    rows.push_back(masks[idx]);
  }
  const GameSolution<Rational> game =
      solve_matrix_game<Rational>(payoff_matrix(rows, spec.num_attacks()));
  PatrolSolution out = to_patrol_solution(spec, walks, game);
  out.method = "exact";
  out.walks_considered = static_cast<long>(all.size());
  return out;
}

BestResponse best_response_walk(const GameSpec& spec,
                                const std::vector<Rational>& weights) {
  PATROL_REQUIRE(spec.duration() == 2, ErrorCategory::kInvalidArgument,
                 "the pairwise best-response DP needs m = 2");
  PATROL_REQUIRE(static_cast<int>(weights.size()) == spec.num_attacks(),
                 ErrorCategory::kInvalidArgument,
                 "attack weight vector has the wrong size");
  const Graph& g = spec.graph();
  const int n = g.num_nodes();
  const int period = spec.period();

  std::vector<std::vector<int>> moves(n);
  for (int u = 0; u < n; ++u) {
    moves[u] = g.neighbors(u);
    moves[u].push_back(u);
    std::sort(moves[u].begin(), moves[u].end());
  }
  // Gain of occupying u at time t and v at time t+1 (t is 0-based here):
  // the attacks starting at t on u, and on v if v differs.
  auto gain = [&](int t, int u, int v) {
    Rational g_uv = weights[u * period + t];
    if (v != u) g_uv += weights[v * period + t];
    return g_uv;
  };

  std::optional<BestResponse> best;
  using Cell = std::optional<Rational>;
  std::vector<std::vector<Cell>> value(period + 1, std::vector<Cell>(n));
  for (int anchor = 0; anchor < n; ++anchor) {
    // value[t][u]: best gain collected from time t (at u) to the return to
    // the anchor at time T (0-based index `period`).
    for (auto& row : value) std::fill(row.begin(), row.end(), Cell{});
    value[period][anchor] = Rational(0);
    for (int t = period - 1; t >= 1; --t) {
      for (int u = 0; u < n; ++u) {
        Cell cell;
        for (int v : moves[u]) {
          if (!value[t + 1][v]) continue;
          Rational candidate = gain(t, u, v) + *value[t + 1][v];
          if (!cell || candidate > *cell) cell = std::move(candidate);
        }
        value[t][u] = std::move(cell);
      }
    }
    Cell total;
    for (int v : moves[anchor]) {
      if (!value[1][v]) continue;
      Rational candidate = gain(0, anchor, v) + *value[1][v];
      if (!total || candidate > *total) total = std::move(candidate);
    }
    if (!total || (best && !(*total > best->value))) continue;

    // Smallest successor among maximizers at each step.
    PeriodicWalk walk;
    walk.positions.assign(period, anchor);
    Rational remaining = *total;
    int here = anchor;
    for (int t = 0; t + 1 < period; ++t) {
      for (int v : moves[here]) {
        if (!value[t + 1][v]) continue;
        const Rational step = gain(t, here, v);
        if (step + *value[t + 1][v] == remaining) {
          remaining -= step;
          walk.positions[t + 1] = v;
          here = v;
          break;
        }
      }
    }
    best = BestResponse{std::move(walk), *total};
  }
  PATROL_REQUIRE(best.has_value(), ErrorCategory::kInfeasible,
                 "no periodic walk exists");
  return *best;
}

BestResponse best_response_walk(const GameSpec& spec,
                                const AttackStrategy& attacks, long cap) {
  const std::vector<Rational> weights = dense_weights(spec, attacks);
  if (spec.duration() == 2) return best_response_walk(spec, weights);

  std::optional<BestResponse> best;
  for (const PeriodicWalk& w : enumerate_walks(spec, cap)) {
    Rational v = walk_payoff(spec, w, weights);
    if (!best || v > best->value) best = BestResponse{w, std::move(v)};
  }
  return *best;
}

PatrolSolution solve_column_generation(const GameSpec& spec) {
  PATROL_REQUIRE(spec.duration() == 2 && spec.patrollers() == 1,
                 ErrorCategory::kInvalidArgument,
                 "column generation handles m = 2 and a single patroller");
  std::vector<PeriodicWalk> walks = seed_walks(spec);
  std::vector<CoverageMask> rows;
  for (const PeriodicWalk& w : walks) rows.push_back(coverage(spec, w));

  int iterations = 0;
  while (true) {
    ++iterations;
    const GameSolution<Rational> master =
        solve_matrix_game<Rational>(payoff_matrix(rows, spec.num_attacks()));
    std::vector<Rational> weights(master.col_strategy.begin(),
                                  master.col_strategy.end());
    BestResponse response = best_response_walk(spec, weights);
    if (!(response.value > master.value)) {
      PatrolSolution out = to_patrol_solution(spec, walks, master);
      out.method = "colgen";
      out.iterations = iterations;
      return out;
    }
    // A strictly improving walk cannot already be in the master.
    PATROL_REQUIRE(
        std::find(walks.begin(), walks.end(), response.walk) == walks.end(),
        ErrorCategory::kInfeasible, "column generation stalled");
    rows.push_back(coverage(spec, response.walk));
    walks.push_back(std::move(response.walk));
  }
}

std::vector<Rational> interception_vector(const GameSpec& spec,
                                          const PatrolStrategy& strategy) {
  std::vector<Rational> out(spec.num_attacks(), Rational(0));
  for (const auto& [walk, prob] : strategy.support()) {
    validate_walk(spec, walk);
    const CoverageMask mask = coverage(spec, walk);
    for (auto b = mask.find_first(); b != CoverageMask::npos;
         b = mask.find_next(b))
      out[b] += prob;
  }
  return out;
}

Rational patroller_guarantee(const GameSpec& spec,
                             const PatrolStrategy& strategy) {
  const std::vector<Rational> v = interception_vector(spec, strategy);
  return *std::min_element(v.begin(), v.end());
}

std::vector<Rational> node_guarantees(const GameSpec& spec,
                                      const PatrolStrategy& strategy) {
  const std::vector<Rational> v = interception_vector(spec, strategy);
  std::vector<Rational> out;
  for (int node = 0; node < spec.num_nodes(); ++node) {
    auto first = v.begin() + node * spec.period();
    out.push_back(*std::min_element(first, first + spec.period()));
  }
  return out;
}

Rational attacker_guarantee(const GameSpec& spec,
                            const AttackStrategy& attacks) {
  return best_response_walk(spec, attacks).value;
}

void write_payoff_csv(std::ostream& out, const GameSpec& spec,
                      const std::vector<PeriodicWalk>& walks) {
  const Graph& g = spec.graph();
  out << "walk";
  for (const Attack& a : enumerate_attacks(spec))
    out << ",\"" << g.label(a.node) << "@" << a.start << "\"";
  out << "\n";
  for (const PeriodicWalk& w : walks) {
    out << '"';
    for (int t = 0; t < w.period(); ++t)
      out << (t ? " " : "") << g.label(w.positions[t]);
    out << '"';
    const CoverageMask mask = coverage(spec, w);
    for (std::size_t b = 0; b < mask.size(); ++b)
      out << ',' << (mask.test(b) ? 1 : 0);
    out << "\n";
  }
}

}  // namespace patrol
