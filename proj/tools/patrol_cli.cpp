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

// patrol: command-line front end.
//
//   patrol value    --line 7 --period 3
//   patrol solve    --graph g.json --period 4 [--method exact|colgen]
//   patrol verify   --line 7 --period 12 --strategy s.json --side patroller
//   patrol casemap  --n 2 9 --t 2 9 [--decimal]
//   patrol curves   --period 7 --n 11 15
//   patrol strategy case4 --line 7 --period 3
//
// Results are JSON (CSV for casemap/curves) on stdout. Failures print
// {"error": {"category": ..., "message": ...}} on stderr and exit 1.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "patrol/exact_solver.hpp"
#include "patrol/game.hpp"
#include "patrol/graph.hpp"
#include "patrol/io.hpp"
#include "patrol/line_solver.hpp"
#include "patrol/multi_patrol.hpp"

namespace {

using patrol::ErrorCategory;
using patrol::Json;
using patrol::PatrolError;
using patrol::Rational;

struct Instance {
  int line = 0;
  std::string graph_path;
  int period = 0;
  int duration = 2;
  int patrollers = 1;
};

void add_instance_options(CLI::App* cmd, Instance& inst) {
  auto* line = cmd->add_option("--line", inst.line, "line graph L_n")
                   ->check(CLI::Range(2, 100000));
  auto* graph = cmd->add_option("--graph", inst.graph_path, "graph JSON file");
  line->excludes(graph);
  cmd->add_option("--period", inst.period, "patrol period T")
      ->required()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--duration", inst.duration, "attack duration m")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--patrollers", inst.patrollers, "number of patrollers k")
      ->check(CLI::PositiveNumber);
}

patrol::GameSpec make_spec(const Instance& inst) {
  PATROL_REQUIRE(inst.line > 0 || !inst.graph_path.empty(),
                 ErrorCategory::kInvalidArgument,
                 "one of --line or --graph is required");
  patrol::Graph g = inst.line > 0
                        ? patrol::line_graph(inst.line)
                        : patrol::graph_from_json(
                              patrol::read_json_file(inst.graph_path));
  return patrol::GameSpec(std::move(g), inst.period, inst.duration,
                          inst.patrollers);
}

Json bounds_json(const patrol::ValueBounds& b) {
  Json rules = Json::array();
  for (const auto& e : b.provenance)
    rules.push_back(Json{{"rule", e.rule},
                         {"kind", e.upper ? "upper" : "lower"},
                         {"value", patrol::to_string(e.value)}});
  return Json{{"lower", patrol::to_string(b.lower)},
              {"upper", patrol::to_string(b.upper)},
              {"rules", std::move(rules)}};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

struct ClosedForm {
  Rational value;
  std::string method;
  Json detail = Json::object();
};

// Analytic value when one is known for this instance.
std::optional<ClosedForm> closed_form(const Instance& inst,
                                      const patrol::GameSpec& spec) {
  if (spec.duration() != 2) return std::nullopt;
  const int k = spec.patrollers();
  if (inst.line > 0) {
    const patrol::LineCase lc = patrol::classify_case(inst.line, spec.period());
    Json detail{{"case", lc.case_id}, {"boundary", lc.boundary}};
    if (k == 1) return ClosedForm{lc.value, "closed_line", detail};
    if (2 * k <= inst.line)
      return ClosedForm{lc.value * k, "closed_line_multi", detail};
  }
  const patrol::Graph& g = spec.graph();
  if (spec.period() % 2 == 0 && !g.has_isolated_node()) {
    if (k == 1) {
      const patrol::FractionalWeighting w = patrol::fractional_weightings(g);
      return ClosedForm{Rational(1) / w.total, "fractional_lp",
                        Json{{"fractional_total", patrol::to_string(w.total)}}};
    }
    const int cover = patrol::covering_number(g).size;
    if (k >= cover)
      return ClosedForm{Rational(1), "covering_oscillations",
                        Json{{"covering_number", cover}}};
  }
  return std::nullopt;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

int run_value(const Instance& inst, const std::string& method) {
  const auto start = std::chrono::steady_clock::now();
  const patrol::GameSpec spec = make_spec(inst);
  Json out{{"instance",
            Json{{"nodes", spec.num_nodes()},
                 {"period", spec.period()},
                 {"duration", spec.duration()},
                 {"patrollers", spec.patrollers()}}}};
  if (method == "closed" || method.empty()) {
    if (auto cf = closed_form(inst, spec)) {
      out["value"] = patrol::to_string(cf->value);
      out["method"] = cf->method;
      for (auto& [key, val] : cf->detail.items()) out[key] = val;
      if (spec.patrollers() == 1)
        out["bounds"] = bounds_json(patrol::value_bounds(spec));
      out["seconds"] = seconds_since(start);
      emit(out);
      return 0;
    }
    PATROL_REQUIRE(method.empty(), ErrorCategory::kNoClosedForm,
                   "no closed form; use --method exact");
  }
  if (spec.patrollers() > 1) {
    const patrol::TeamSolution sol = patrol::solve_k_exact(spec);
    out["value"] = patrol::to_string(sol.value);
    out["method"] = "team_colgen";
    out["iterations"] = sol.iterations;
  } else if (method == "colgen") {
    const patrol::PatrolSolution sol = patrol::solve_column_generation(spec);
    out["value"] = patrol::to_string(sol.value);
    out["method"] = sol.method;
    out["iterations"] = sol.iterations;
  } else {
    const patrol::PatrolSolution sol = patrol::solve_exact(spec);
    out["value"] = patrol::to_string(sol.value);
    out["method"] = sol.method;
    out["walks"] = sol.walks_considered;
  }
  if (spec.patrollers() == 1 && spec.duration() == 2)
    out["bounds"] = bounds_json(patrol::value_bounds(spec));
  out["seconds"] = seconds_since(start);
  emit(out);
  return 0;
}

int run_solve(const Instance& inst, const std::string& method,
              const std::string& csv) {
  const auto start = std::chrono::steady_clock::now();
  const patrol::GameSpec spec = make_spec(inst);
  const patrol::Graph& g = spec.graph();
  Json out;
  if (!csv.empty()) {
    std::ofstream file(csv);
    PATROL_REQUIRE(file.good(), ErrorCategory::kInvalidArgument,
                   "cannot write " + csv);
    patrol::write_payoff_csv(file, spec, patrol::enumerate_walks(spec));
  }
  if (spec.patrollers() > 1) {
    const patrol::TeamSolution sol = patrol::solve_k_exact(spec);
    const Rational lower = patrol::team_guarantee(spec, sol.patrollers);
    const Rational upper = patrol::team_attacker_guarantee(spec, sol.attacker);
    PATROL_REQUIRE(lower == sol.value && upper == sol.value,
                   ErrorCategory::kInfeasible, "certificate check failed");
    out["value"] = patrol::to_string(sol.value);
    out["method"] = "team_colgen";
    out["iterations"] = sol.iterations;
    out["certificate"] = Json{{"patroller_guarantee", patrol::to_string(lower)},
                              {"attacker_guarantee", patrol::to_string(upper)},
                              {"verified", true}};
    out["patroller"] = patrol::strategy_to_json(g, sol.patrollers);
    out["attacker"] = patrol::strategy_to_json(g, sol.attacker);
  } else {
    const patrol::PatrolSolution sol =
        method == "colgen" ? patrol::solve_column_generation(spec)
                           : patrol::solve_exact(spec);
    const Rational lower = patrol::patroller_guarantee(spec, sol.patroller);
    const Rational upper = patrol::attacker_guarantee(spec, sol.attacker);
    PATROL_REQUIRE(lower == sol.value && upper == sol.value,
                   ErrorCategory::kInfeasible, "certificate check failed");
    out["value"] = patrol::to_string(sol.value);
    out["method"] = sol.method;
    out["walks"] = sol.walks_considered;
    out["iterations"] = sol.iterations;
    out["certificate"] = Json{{"patroller_guarantee", patrol::to_string(lower)},
                              {"attacker_guarantee", patrol::to_string(upper)},
                              {"verified", true}};
    out["patroller"] = patrol::strategy_to_json(g, sol.patroller);
    out["attacker"] = patrol::strategy_to_json(g, sol.attacker);
  }
  out["seconds"] = seconds_since(start);
  emit(out);
  return 0;
}

int run_verify(const Instance& inst, const std::string& path,
               const std::string& side) {
  const patrol::GameSpec spec = make_spec(inst);
  const Json doc = patrol::read_json_file(path);
  Json out{{"side", side}};
  Rational guarantee;
  if (side == "patroller") {
    std::vector<Rational> per_node;
    if (spec.patrollers() > 1) {
      const auto s = patrol::team_strategy_from_json(spec, doc);
      guarantee = patrol::team_guarantee(spec, s);
      per_node = patrol::team_node_guarantees(spec, s);
    } else {
      const auto s = patrol::patrol_strategy_from_json(spec, doc);
      guarantee = patrol::patroller_guarantee(spec, s);
      per_node = patrol::node_guarantees(spec, s);
    }
    out["guarantee"] = patrol::to_string(guarantee);
    Json nodes = Json::object();
    for (int i = 0; i < spec.num_nodes(); ++i)
      nodes[spec.graph().label(i)] = patrol::to_string(per_node[i]);
    out["per_node"] = std::move(nodes);
  } else {
    const auto s = patrol::attack_strategy_from_json(spec, doc);
    guarantee = spec.patrollers() > 1
                    ? patrol::team_attacker_guarantee(spec, s)
                    : patrol::attacker_guarantee(spec, s);
    out["guarantee"] = patrol::to_string(guarantee);
  }
  if (auto cf = closed_form(inst, spec)) {
    out["analytic_value"] = patrol::to_string(cf->value);
    out["optimal"] = guarantee == cf->value;
  }
  emit(out);
  return 0;
}

int run_casemap(const std::vector<int>& ns, const std::vector<int>& ts,
                const std::string& csv, bool decimal) {
  if (csv.empty()) {
    patrol::write_casemap_csv(std::cout, ns[0], ns[1], ts[0], ts[1], decimal);
    return 0;
  }
  std::ofstream file(csv);
  PATROL_REQUIRE(file.good(), ErrorCategory::kInvalidArgument,
                 "cannot write " + csv);
  patrol::write_casemap_csv(file, ns[0], ns[1], ts[0], ts[1], decimal);
  return 0;
}

int run_curves(int period, const std::vector<int>& ns, const std::string& csv,
               bool decimal) {
  if (csv.empty()) {
    patrol::write_curves_csv(std::cout, period, ns[0], ns[1], decimal);
    return 0;
  }
  std::ofstream file(csv);
  PATROL_REQUIRE(file.good(), ErrorCategory::kInvalidArgument,
                 "cannot write " + csv);
  patrol::write_curves_csv(file, period, ns[0], ns[1], decimal);
  return 0;
}

struct StrategyArgs {
  std::string name;
  std::string bias = "1/2";
  std::string tour_weight = "3/4";
  int start = 1;
  int edge = 1;
  std::string direction = "right";
};

int require_line(const Instance& inst) {
  PATROL_REQUIRE(inst.line > 0, ErrorCategory::kInvalidArgument,
                 "this strategy is defined on line graphs; pass --line");
  return inst.line;
}

int run_strategy(const Instance& inst, const StrategyArgs& args) {
  const patrol::GameSpec spec = make_spec(inst);
  const patrol::Graph& g = spec.graph();
  const int period = spec.period();
  const std::string& name = args.name;
  Json payload;
  if (name == "table4") {
    PATROL_REQUIRE(inst.line == 7 && period == 3 && spec.patrollers() == 4,
                   ErrorCategory::kInvalidArgument,
                   "table4 is defined for --line 7 --period 3 --patrollers 4");
    payload = patrol::strategy_to_json(g, patrol::table4_strategy());
  } else if (name == "lift") {
    payload = patrol::strategy_to_json(
        g, patrol::lift_strategy(require_line(inst), period,
                                 spec.patrollers()));
  } else if (name == "uniform_attack") {
    payload = patrol::strategy_to_json(g, patrol::uniform_attack(spec));
  } else if (name == "independent_attack") {
    payload =
        patrol::strategy_to_json(g, patrol::independent_attack(spec, args.start));
  } else if (name == "line_attacker") {
    payload = patrol::strategy_to_json(
        g, patrol::line_attacker_strategy(require_line(inst), period));
  } else {
    patrol::PatrolStrategy s;
    if (name == "unbiased_covering") {
      s = patrol::unbiased_covering_strategy(g, period);
    } else if (name == "biased_covering") {
      s = patrol::biased_covering_strategy(g, period);
    } else if (name == "case4") {
      s = patrol::case4_strategy(require_line(inst), period);
    } else if (name == "case5") {
      s = patrol::case5_strategy(require_line(inst), period);
    } else if (name == "row_family") {
      s = patrol::row_family_strategy(require_line(inst), period,
                                      patrol::parse_rational(args.bias));
    } else if (name == "decomposed_case4") {
      s = patrol::decomposed_case4_strategy(require_line(inst), period);
    } else if (name == "decomposition") {
      s = patrol::decomposition_strategy(require_line(inst), period);
    } else if (name == "line_patroller") {
      s = patrol::line_patroller_strategy(require_line(inst), period);
    } else if (name == "tour_mixture") {
      const int n = require_line(inst);
      PATROL_REQUIRE(period == 2 * (n - 1), ErrorCategory::kInvalidArgument,
                     "tour_mixture needs --period 2(n-1)");
      s = patrol::tour_mixture_strategy(
          n, patrol::parse_rational(args.tour_weight));
    } else if (name == "oscillation") {
      PATROL_REQUIRE(args.direction == "left" || args.direction == "right",
                     ErrorCategory::kInvalidArgument,
                     "--direction must be left or right");
      s = patrol::expand_oscillation(
          patrol::OscillationSpec{args.edge,
                                  args.direction == "left"
                                      ? patrol::Direction::kLeft
                                      : patrol::Direction::kRight,
                                  patrol::parse_rational(args.bias)},
          period);
      for (const auto& [walk, prob] : s.support())
        patrol::validate_walk(spec, walk);
    } else {
      throw PatrolError(ErrorCategory::kInvalidArgument,
                        "unknown strategy '" + name + "'");
    }
    payload = patrol::strategy_to_json(g, s);
  }
  emit(payload);
  return 0;
}

void report(std::string_view category, const std::string& message) {
  Json err{{"error", Json{{"category", category}, {"message", message}}}};
  std::cerr << err.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the periodic patrolling game on graphs"};
  app.require_subcommand(1);

  Instance inst;
  std::string method;
  std::string csv;
  std::string strategy_path;
  std::string side = "patroller";
  std::vector<int> n_range{2, 9};
  std::vector<int> t_range{2, 9};
  int curve_period = 7;
  bool decimal = false;
  StrategyArgs strategy_args;

  auto* value = app.add_subcommand("value", "game value, closed form when known");
  add_instance_options(value, inst);
  value->add_option("--method", method, "closed, exact or colgen")
      ->check(CLI::IsMember({"closed", "exact", "colgen"}));

  auto* solve = app.add_subcommand("solve", "optimal strategies for both sides");
  add_instance_options(solve, inst);
  solve->add_option("--method", method, "exact or colgen")
      ->check(CLI::IsMember({"exact", "colgen"}));
  solve->add_option("--csv", csv, "write the walk/attack payoff matrix");

  auto* verify = app.add_subcommand("verify", "guarantee of a strategy file");
  add_instance_options(verify, inst);
  verify->add_option("--strategy", strategy_path, "strategy JSON")->required();
  verify->add_option("--side", side, "patroller or attacker")
      ->check(CLI::IsMember({"patroller", "attacker"}));

  auto* casemap = app.add_subcommand("casemap", "case and value per (n, T)");
  casemap->add_option("--n", n_range, "n range (from to)")->expected(2);
  casemap->add_option("--t", t_range, "T range (from to)")->expected(2);
  casemap->add_option("--csv", csv, "output file (default stdout)");
  casemap->add_flag("--decimal", decimal, "add a floating-point column");

  auto* curves = app.add_subcommand("curves", "the two odd-odd value curves");
  curves->add_option("--period", curve_period, "period T")
      ->check(CLI::PositiveNumber);
  curves->add_option("--n", n_range, "n range (from to)")->expected(2);
  curves->add_option("--csv", csv, "output file (default stdout)");
  curves->add_flag("--decimal", decimal, "add floating-point columns");

  auto* strategy = app.add_subcommand("strategy", "emit a constructed strategy");
  strategy->add_option("name", strategy_args.name,
                       "unbiased_covering, biased_covering, case4, case5, "
                       "row_family, decomposed_case4, decomposition, "
                       "line_patroller, line_attacker, tour_mixture, "
                       "oscillation, uniform_attack, independent_attack, "
                       "lift, table4")
      ->required();
  add_instance_options(strategy, inst);
  strategy->add_option("--bias", strategy_args.bias, "oscillation bias p");
  strategy->add_option("--tour-weight", strategy_args.tour_weight,
                       "tour weight for tour_mixture");
  strategy->add_option("--start", strategy_args.start,
                       "attack start for independent_attack");
  strategy->add_option("--edge", strategy_args.edge,
                       "left label i of edge (i, i+1) for oscillation");
  strategy->add_option("--direction", strategy_args.direction,
                       "left or right for oscillation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report("invalid_argument", e.what());
    return 2;
  }

  try {
    if (*value) return run_value(inst, method);
    if (*solve) return run_solve(inst, method, csv);
    if (*verify) return run_verify(inst, strategy_path, side);
    if (*casemap) return run_casemap(n_range, t_range, csv, decimal);
    if (*curves) return run_curves(curve_period, n_range, csv, decimal);
    if (*strategy) return run_strategy(inst, strategy_args);
  } catch (const PatrolError& e) {
    report(patrol::category_name(e.category()), e.what());
    return 1;
  } catch (const std::exception& e) {
    report("internal", e.what());
    return 1;
  }
  return 0;
}
