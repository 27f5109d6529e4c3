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

// JSON serialization. Nodes are written by label, probabilities as "p/q"
// strings in lowest terms.
//
//   graph     {"nodes": ["a", ...], "edges": [["a", "b"], ...]}
//   walks     {"walks": [{"positions": ["1", "2", ...], "prob": "1/4"}]}
//   attacks   {"attacks": [{"node": "3", "start": 1, "prob": "1/4"}]}
//   teams     {"teams": [{"walks": [["1", ...], ...], "prob": "1/4"}]}
//
// Parse failures throw PatrolError{kMalformedInput}; walks that break the
// adjacency rule throw kInvalidWalk.

#ifndef PATROL_IO_HPP_
#define PATROL_IO_HPP_

#include <string>

#include <json.hpp>

#include "patrol/game.hpp"
#include "patrol/graph.hpp"
#include "patrol/multi_patrol.hpp"

namespace patrol {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

Graph graph_from_json(const Json& doc);
Json graph_to_json(const Graph& g);

Json walk_to_json(const Graph& g, const PeriodicWalk& walk);

Json strategy_to_json(const Graph& g, const PatrolStrategy& strategy);
Json strategy_to_json(const Graph& g, const AttackStrategy& strategy);
Json strategy_to_json(const Graph& g, const TeamStrategy& strategy);

PatrolStrategy patrol_strategy_from_json(const GameSpec& spec, const Json& doc);
AttackStrategy attack_strategy_from_json(const GameSpec& spec, const Json& doc);
TeamStrategy team_strategy_from_json(const GameSpec& spec, const Json& doc);

// Vector of rationals as strings.
Json rationals_to_json(const std::vector<Rational>& values);

}  // namespace patrol

#endif  // PATROL_IO_HPP_
