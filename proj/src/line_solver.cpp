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

#include "patrol/line_solver.hpp"

#include <iomanip>
#include <ostream>
#include <string>

namespace patrol {

namespace {

void require_line(int n, int period) {
  PATROL_REQUIRE(n >= 2, ErrorCategory::kInvalidArgument,
                 "line needs at least 2 nodes");
  PATROL_REQUIRE(period >= 2, ErrorCategory::kInvalidArgument,
                 "period must be at least 2");
}

bool odd(int x) { return x % 2 != 0; }

// Value of the game on a line of n >= 1 nodes; a single node is guarded
// with certainty by standing on it.
Rational sub_line_value(int n, int period) {
  return n == 1 ? Rational(1) : line_value(n, period);
}

// Equiprobable edge, unbiased oscillation on it (plain alternation from the
// lower endpoint for even T, one random repeat for odd T).
PatrolStrategy covering_on_edges(const std::vector<Edge>& cover, int period) {
  PATROL_REQUIRE(!cover.empty(), ErrorCategory::kNoCoveringSet,
                 "empty covering set");
  const Rational each(1, static_cast<long>(cover.size()));
  std::vector<std::pair<PatrolStrategy, Rational>> parts;
  for (const Edge& e : cover)
    parts.emplace_back(oscillation_on(e.v, e.u, Rational(1, 2), period), each);
  return PatrolStrategy::mixture(parts);
}

void check_cover(const Graph& g, const std::vector<Edge>& cover) {
  PATROL_REQUIRE(is_edge_cover(g, cover), ErrorCategory::kInvalidArgument,
                 "edges do not form a covering set of the graph");
}

}  // namespace

LineCase classify_case(int n, int period) {
  require_line(n, period);
  LineCase out;
  out.n = n;
  out.period = period;
  const long nn = n;
  const long t = period;
  if (!odd(period) && !odd(n)) {
    out.case_id = 1;
    out.value = Rational(2, nn);
  } else if (!odd(period)) {
    out.case_id = 2;
    out.value = Rational(2, nn + 1);
  } else if (!odd(n)) {
    out.case_id = 3;
    out.value = Rational(2 * t - 1, nn * t);
  } else if (n > 2 * period - 1) {
    out.case_id = 4;
    out.value = Rational(2 * t - 1, nn * t);
  } else {
    out.case_id = 5;
    out.value = Rational(2, nn + 1);
    out.boundary = n == 2 * period - 1;
  }
  return out;
}

Rational line_value(int n, int period) { return classify_case(n, period).value; }

Rational limit_value(int n) {
  PATROL_REQUIRE(n >= 2, ErrorCategory::kInvalidArgument,
                 "line needs at least 2 nodes");
  return Rational(1, (n + 1) / 2);
}

PatrolStrategy oscillation_on(int other, int favoured, const Rational& p,
                              int period) {
  PATROL_REQUIRE(p >= 0 && p <= 1, ErrorCategory::kInvalidArgument,
                 "oscillation bias must lie in [0,1]");
  if (!odd(period)) {
    PATROL_REQUIRE(p == Rational(1, 2), ErrorCategory::kInvalidArgument,
                   "even-period oscillations are unbiased (p = 1/2)");
    PeriodicWalk w;
    for (int t = 0; t < period; ++t)
      w.positions.push_back(t % 2 == 0 ? favoured : other);
    return PatrolStrategy::pure(w);
  }
  // held(x, y, r): x at times r and r+1 (0-based, cyclic), alternating
  // with y elsewhere.
  auto held = [period](int x, int y, int r) {
    PeriodicWalk w;
    w.positions.assign(period, x);
    for (int k = 1; k < period; ++k)
      w.positions[(r + k) % period] = (k % 2 == 1) ? x : y;
    return w;
  };
  const Rational t(period);
  std::vector<PatrolStrategy::Entry> entries;
  for (int r = 0; r < period; ++r) {
    entries.emplace_back(held(favoured, other, r), p / t);
    entries.emplace_back(held(other, favoured, r), (1 - p) / t);
  }
  return PatrolStrategy::from_weights(entries);
}

PatrolStrategy expand_oscillation(const OscillationSpec& spec, int period) {
  PATROL_REQUIRE(spec.edge >= 1, ErrorCategory::kInvalidArgument,
                 "oscillation edge must be (i, i+1) with i >= 1");
  const int left = spec.edge - 1;
  const int right = spec.edge;
  const Rational right_bias =
      spec.direction == Direction::kRight ? spec.bias : Rational(1 - spec.bias);
  if (!odd(period)) {
    PATROL_REQUIRE(spec.bias == Rational(1, 2),
                   ErrorCategory::kInvalidArgument,
                   "even-period oscillations are unbiased (p = 1/2)");
    return oscillation_on(right, left, spec.bias, period);
  }
  return oscillation_on(left, right, right_bias, period);
}

std::vector<Edge> canonical_line_cover(int n) {
  PATROL_REQUIRE(n >= 2, ErrorCategory::kInvalidArgument,
                 "line needs at least 2 nodes");
  std::vector<Edge> cover;
  for (int i = 0; i + 1 < n; i += 2) cover.emplace_back(i, i + 1);
  if (odd(n)) cover.emplace_back(n - 2, n - 1);
  return cover;
}

PatrolStrategy unbiased_covering_strategy(const Graph& g, int period,
                                          std::optional<std::vector<Edge>>
                                              cover) {
  PATROL_REQUIRE(!odd(period), ErrorCategory::kInvalidArgument,
                 "unbiased covering strategy needs an even period");
  if (!cover) cover = covering_number(g).witness;
  check_cover(g, *cover);
  return covering_on_edges(*cover, period);
}

PatrolStrategy biased_covering_strategy(const Graph& g, int period,
                                        std::optional<std::vector<Edge>>
                                            cover) {
  PATROL_REQUIRE(odd(period), ErrorCategory::kInvalidArgument,
                 "biased covering strategy needs an odd period");
  if (!cover) cover = covering_number(g).witness;
  check_cover(g, *cover);
  return covering_on_edges(*cover, period);
}

std::vector<std::pair<Edge, Direction>> row_edges(int n, int j) {
  PATROL_REQUIRE(odd(n) && j >= 1 && j <= (n + 1) / 2,
                 ErrorCategory::kInvalidArgument,
                 "row index must lie in 1..(n+1)/2 for odd n");
  std::vector<std::pair<Edge, Direction>> out;
  // A_j: (2i-1, 2i) for i < j, oriented left.
  for (int i = 1; i < j; ++i)
    out.emplace_back(Edge(2 * i - 2, 2 * i - 1), Direction::kLeft);
  // B_j: (2i, 2i+1) for i >= j, oriented right.
  for (int i = j; 2 * i + 1 <= n; ++i)
    out.emplace_back(Edge(2 * i - 1, 2 * i), Direction::kRight);
  return out;
}

PatrolStrategy row_family_strategy(int n, int period, const Rational& p) {
  require_line(n, period);
  PATROL_REQUIRE(odd(n) && odd(period), ErrorCategory::kInvalidArgument,
                 "row family strategy needs n and T odd");
  PATROL_REQUIRE(n >= 3, ErrorCategory::kInvalidArgument,
                 "row family strategy needs n >= 3");
  const int rows = (n + 1) / 2;
  const int per_row = (n - 1) / 2;
  const Rational weight(1, static_cast<long>(rows) * per_row);
  std::vector<std::pair<PatrolStrategy, Rational>> parts;
  for (int j = 1; j <= rows; ++j) {
    for (const auto& [e, dir] : row_edges(n, j)) {
      // Left-oriented edges favour the left node with probability p.
      const PatrolStrategy osc = dir == Direction::kLeft
                                     ? oscillation_on(e.v, e.u, p, period)
                                     : oscillation_on(e.u, e.v, p, period);
      parts.emplace_back(osc, weight);
    }
  }
  return PatrolStrategy::mixture(parts);
}

Rational case4_bias(int n, int period) {
  return Rational(2L * period + n - 1, 2L * n);
}

PatrolStrategy case4_strategy(int n, int period) {
  require_line(n, period);
  PATROL_REQUIRE(odd(n) && odd(period) && n >= 2 * period - 1,
                 ErrorCategory::kInvalidArgument,
                 "case-4 strategy needs n, T odd and n >= 2T-1");
  return row_family_strategy(n, period, case4_bias(n, period));
}

PatrolStrategy case5_strategy(int n, int period) {
  require_line(n, period);
  PATROL_REQUIRE(odd(n) && odd(period) && n <= 2 * period - 1,
                 ErrorCategory::kInvalidArgument,
                 "case-5 strategy needs n, T odd and n <= 2T-1");
  return row_family_strategy(n, period, Rational(1));
}

DecomposeBound decompose_bound(const Rational& v1, const Rational& v2) {
  PATROL_REQUIRE(v1 > 0 && v2 > 0, ErrorCategory::kInvalidArgument,
                 "decomposition needs positive subgame values");
  const Rational sum = v1 + v2;
  return {v1 * v2 / sum, v2 / sum, v1 / sum};
}

PatrolStrategy decomposed_case4_strategy(int n, int period) {
  require_line(n, period);
  PATROL_REQUIRE(odd(n) && odd(period) && n > 2 * period - 1,
                 ErrorCategory::kInvalidArgument,
                 "decomposed case-4 strategy needs n, T odd and n > 2T-1");
  const int split = 2 * period - 1;
  const int right_n = n - split;
  const DecomposeBound bound = decompose_bound(line_value(split, period),
                                               line_value(right_n, period));
  std::vector<Edge> right_cover;
  for (int i = split; i + 1 < n; i += 2) right_cover.emplace_back(i, i + 1);
  return PatrolStrategy::mixture(
      {{case5_strategy(split, period), bound.p1},
       {covering_on_edges(right_cover, period), bound.p2}});
}

DecomposabilityResult is_decomposable(int n, int period) {
  const LineCase lc = classify_case(n, period);
  DecomposabilityResult out;
  auto nodes = [](int from, int to) {
    NodeSet s;
    for (int i = from; i <= to; ++i) s.push_back(i);
    return s;
  };

  if (lc.case_id == 5) {
    for (int j = 1; 2 * j < n; ++j) {
      const DecomposeBound b = decompose_bound(
          sub_line_value(2 * j, period), sub_line_value(n - 2 * j, period));
      out.gaps.push_back(lc.value - b.value);
    }
    return out;
  }
  // L_2 only splits into single nodes, which guarantee 1/2 < V(L_2).
  if (n == 2) return out;

  const int left_n = lc.case_id == 4 ? 2 * period - 1 : 2;
  const Rational v1 = sub_line_value(left_n, period);
  const Rational v2 = sub_line_value(n - left_n, period);
  const DecomposeBound b = decompose_bound(v1, v2);
  PATROL_REQUIRE(b.value == lc.value, ErrorCategory::kInfeasible,
                 "decomposition witness does not attain the value");
  out.decomposable = true;
  out.witness = Decomposition{nodes(0, left_n - 1), nodes(left_n, n - 1),
                              b.p1,           b.p2,
                              v1,             v2};
  return out;
}

PatrolStrategy line_patroller_strategy(int n, int period) {
  const LineCase lc = classify_case(n, period);
  const Graph g = line_graph(n);
  switch (lc.case_id) {
    case 1:
    case 2:
      return unbiased_covering_strategy(g, period, canonical_line_cover(n));
    case 3:
      return biased_covering_strategy(g, period, canonical_line_cover(n));
    case 4:
      return case4_strategy(n, period);
    default:
      return case5_strategy(n, period);
  }
}

AttackStrategy line_attacker_strategy(int n, int period) {
  const LineCase lc = classify_case(n, period);
  const GameSpec spec(line_graph(n), period);
  if (lc.case_id == 3 || lc.case_id == 4) return uniform_attack(spec);
  return independent_attack(spec, 1);
}

PatrolStrategy shift_strategy(const PatrolStrategy& strategy, int offset) {
  std::vector<PatrolStrategy::Entry> entries;
  for (auto [walk, prob] : strategy.support()) {
    for (int& pos : walk.positions) pos += offset;
    entries.emplace_back(std::move(walk), prob);
  }
  return PatrolStrategy(std::move(entries));
}

PatrolStrategy decomposition_strategy(int n, int period) {
  const DecomposabilityResult d = is_decomposable(n, period);
  PATROL_REQUIRE(d.decomposable, ErrorCategory::kInvalidArgument,
                 "L_" + std::to_string(n) + " with period " +
                     std::to_string(period) + " is not decomposable");
  const Decomposition& w = *d.witness;
  const int left_n = static_cast<int>(w.left_nodes.size());
  const int right_n = static_cast<int>(w.right_nodes.size());
  if (left_n > 2) return decomposed_case4_strategy(n, period);

  const PatrolStrategy left = line_patroller_strategy(2, period);
  const PatrolStrategy right =
      right_n == 1
          ? PatrolStrategy::pure(
                PeriodicWalk{std::vector<int>(period, left_n)})
          : shift_strategy(line_patroller_strategy(right_n, period), left_n);
  return PatrolStrategy::mixture({{left, w.p1}, {right, w.p2}});
}

PeriodicWalk boustrophedon_tour(int n, int phase) {
  PATROL_REQUIRE(n >= 2, ErrorCategory::kInvalidArgument,
                 "tour needs at least 2 nodes");
  const int period = 2 * (n - 1);
  PATROL_REQUIRE(phase >= 0 && phase < period, ErrorCategory::kInvalidArgument,
                 "tour phase must lie in 0..2(n-1)-1");
  PeriodicWalk w;
  for (int t = 0; t < period; ++t) {
    const int k = (phase + t) % period;
    w.positions.push_back(k < n ? k : period - k);
  }
  return w;
}

PatrolStrategy tour_mixture_strategy(int n, const Rational& tour_weight) {
  PATROL_REQUIRE(n >= 3, ErrorCategory::kInvalidArgument,
                 "tour mixture needs at least 3 nodes");
  PATROL_REQUIRE(tour_weight >= 0 && tour_weight <= 1,
                 ErrorCategory::kInvalidArgument,
                 "tour weight must lie in [0,1]");
  const int period = 2 * (n - 1);
  std::vector<PatrolStrategy::Entry> tours;
  for (int phase = 0; phase < period; ++phase)
    tours.emplace_back(boustrophedon_tour(n, phase), Rational(1, period));
  const Rational end_weight = (1 - tour_weight) / 2;
  return PatrolStrategy::mixture(
      {{PatrolStrategy(tours), tour_weight},
       {oscillation_on(1, 0, Rational(1, 2), period), end_weight},
       {oscillation_on(n - 1, n - 2, Rational(1, 2), period), end_weight}});
}

void write_casemap_csv(std::ostream& out, int n_from, int n_to, int t_from,
                       int t_to, bool decimal) {
  PATROL_REQUIRE(n_from >= 2 && t_from >= 2 && n_from <= n_to &&
                     t_from <= t_to,
                 ErrorCategory::kInvalidArgument,
                 "casemap ranges need 2 <= from <= to");
  out << "n,T,case,value,boundary" << (decimal ? ",value_decimal" : "")
      << "\n";
  for (int n = n_from; n <= n_to; ++n) {
    for (int t = t_from; t <= t_to; ++t) {
      const LineCase lc = classify_case(n, t);
      out << n << ',' << t << ',' << lc.case_id << ',' << to_string(lc.value)
          << ',' << (lc.boundary ? 1 : 0);
      if (decimal)
        out << ',' << std::setprecision(12) << to_double(lc.value);
      out << "\n";
    }
  }
}

void write_curves_csv(std::ostream& out, int period, int n_from, int n_to,
                      bool decimal) {
  PATROL_REQUIRE(period >= 2 && n_from >= 2 && n_from <= n_to,
                 ErrorCategory::kInvalidArgument,
                 "curves need T >= 2 and 2 <= n_from <= n_to");
  out << "n,2/(n+1),(2T-1)/(nT)"
      << (decimal ? ",2/(n+1)_decimal,(2T-1)/(nT)_decimal" : "") << "\n";
  const long t = period;
  for (long n = n_from; n <= n_to; ++n) {
    const Rational independent(2, n + 1);
    const Rational uniform(2 * t - 1, n * t);
    out << n << ',' << to_string(independent) << ',' << to_string(uniform);
    if (decimal)
      out << ',' << std::setprecision(12) << to_double(independent) << ','
          << to_double(uniform);
    out << "\n";
  }
}

}  // namespace patrol
