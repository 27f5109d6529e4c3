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

#include "patrol/io.hpp"

#include <fstream>
#include <utility>
#include <vector>

namespace patrol {
namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw PatrolError(ErrorCategory::kMalformedInput, what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    malformed(where + ": missing \"" + key + "\"");
  return obj.at(key);
}

std::string label_of(const Json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  malformed(where + ": node labels must be strings");
}

// Probabilities that are not a distribution are an input error here.
template <typename Strategy>
Strategy checked(std::vector<typename Strategy::Entry> entries) {
  try {
    return Strategy(std::move(entries));
  } catch (const PatrolError& e) {
    if (e.category() != ErrorCategory::kInvalidArgument) throw;
    malformed(e.what());
  }
}

Rational prob_of(const Json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  malformed(where + ": probabilities must be \"p/q\" strings");
}

int node_of(const Graph& g, const Json& v, const std::string& where) {
  const std::string label = label_of(v, where);
  const int idx = g.index_of(label);
  if (idx < 0) malformed(where + ": unknown node \"" + label + "\"");
  return idx;
}

const Json& array_field(const Json& doc, const char* key) {
  const Json& arr = field(doc, key, "strategy");
  if (!arr.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  return arr;
}

PeriodicWalk walk_from_json(const GameSpec& spec, const Json& positions,
                            const std::string& where) {
  if (!positions.is_array()) malformed(where + ": positions must be an array");
  PeriodicWalk walk;
  for (std::size_t t = 0; t < positions.size(); ++t)
    walk.positions.push_back(node_of(spec.graph(), positions[t],
                                     where + " position " + std::to_string(t)));
  validate_walk(spec, walk);
  return walk;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

Graph graph_from_json(const Json& doc) {
  const Json& nodes = field(doc, "nodes", "graph");
  const Json& edges = field(doc, "edges", "graph");
  if (!nodes.is_array() || !edges.is_array())
    malformed("graph: \"nodes\" and \"edges\" must be arrays");
  std::vector<std::string> labels;
  for (const Json& n : nodes) labels.push_back(label_of(n, "graph node"));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2)
      malformed("graph: every edge must be a pair of labels");
    pairs.emplace_back(label_of(e[0], "graph edge"),
                       label_of(e[1], "graph edge"));
  }
  try {
    return Graph(std::move(labels), pairs);
  } catch (const PatrolError& e) {
    malformed(std::string("graph: ") + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges())
    edges.push_back(Json::array({g.label(e.u), g.label(e.v)}));
  return Json{{"nodes", g.labels()}, {"edges", std::move(edges)}};
}

Json walk_to_json(const Graph& g, const PeriodicWalk& walk) {
  Json out = Json::array();
  for (int p : walk.positions) out.push_back(g.label(p));
  return out;
}

Json strategy_to_json(const Graph& g, const PatrolStrategy& strategy) {
  Json walks = Json::array();
  for (const auto& [walk, prob] : strategy.support())
    walks.push_back(
        Json{{"positions", walk_to_json(g, walk)}, {"prob", to_string(prob)}});
  return Json{{"walks", std::move(walks)}};
}

Json strategy_to_json(const Graph& g, const AttackStrategy& strategy) {
  Json attacks = Json::array();
  for (const auto& [attack, prob] : strategy.support())
    attacks.push_back(Json{{"node", g.label(attack.node)},
                           {"start", attack.start},
                           {"prob", to_string(prob)}});
  return Json{{"attacks", std::move(attacks)}};
}

Json strategy_to_json(const Graph& g, const TeamStrategy& strategy) {
  Json teams = Json::array();
  for (const auto& [team, prob] : strategy.support()) {
    Json walks = Json::array();
    for (const PeriodicWalk& w : team.walks) walks.push_back(walk_to_json(g, w));
    teams.push_back(Json{{"walks", std::move(walks)}, {"prob", to_string(prob)}});
  }
  return Json{{"teams", std::move(teams)}};
}

PatrolStrategy patrol_strategy_from_json(const GameSpec& spec,
                                         const Json& doc) {
  const Json& walks = array_field(doc, "walks");
  std::vector<PatrolStrategy::Entry> entries;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const std::string where = "walk " + std::to_string(i);
    entries.emplace_back(
        walk_from_json(spec, field(walks[i], "positions", where), where),
        prob_of(field(walks[i], "prob", where), where));
  }
  return checked<PatrolStrategy>(std::move(entries));
}

AttackStrategy attack_strategy_from_json(const GameSpec& spec,
                                         const Json& doc) {
  const Json& attacks = array_field(doc, "attacks");
  std::vector<AttackStrategy::Entry> entries;
  for (std::size_t i = 0; i < attacks.size(); ++i) {
    const std::string where = "attack " + std::to_string(i);
    const Json& start = field(attacks[i], "start", where);
    if (!start.is_number_integer() || start.get<int>() < 1 ||
        start.get<int>() > spec.period())
      malformed(where + ": start must be an integer in 1..T");
    entries.emplace_back(
        Attack{node_of(spec.graph(), field(attacks[i], "node", where), where),
               start.get<int>(), spec.duration()},
        prob_of(field(attacks[i], "prob", where), where));
  }
  return checked<AttackStrategy>(std::move(entries));
}

TeamStrategy team_strategy_from_json(const GameSpec& spec, const Json& doc) {
  const Json& teams = array_field(doc, "teams");
  std::vector<TeamStrategy::Entry> entries;
  for (std::size_t i = 0; i < teams.size(); ++i) {
    const std::string where = "team " + std::to_string(i);
    const Json& walks = field(teams[i], "walks", where);
    if (!walks.is_array()) malformed(where + ": walks must be an array");
    std::vector<PeriodicWalk> members;
    for (std::size_t j = 0; j < walks.size(); ++j)
      members.push_back(walk_from_json(
          spec, walks[j], where + " walk " + std::to_string(j)));
    if (static_cast<int>(members.size()) != spec.patrollers())
      malformed(where + ": expected " + std::to_string(spec.patrollers()) +
                " walks");
    entries.emplace_back(PatrolTeam(std::move(members)),
                         prob_of(field(teams[i], "prob", where), where));
  }
  return checked<TeamStrategy>(std::move(entries));
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace patrol
