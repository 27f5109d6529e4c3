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

#ifndef PATROL_GRAPH_HPP_
#define PATROL_GRAPH_HPP_

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patrol/rational.hpp"

namespace patrol {

// Undirected edge between dense node indices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(int node) const { return u == node || v == node; }
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph. Node labels are strings externally and indices
// 0..n-1 internally; the graph is immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws PatrolError{kInvalidArgument} on self-loops, duplicate edges,
  // duplicate labels or endpoints that are not declared nodes.
  Graph(std::vector<std::string> labels,
        const std::vector<std::pair<std::string, std::string>>& edges);
  Graph(std::vector<std::string> labels, const std::vector<Edge>& edges);

  int num_nodes() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int node) const { return labels_.at(node); }
  // -1 when the label is unknown.
  int index_of(const std::string& label) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int node) const {
    return neighbors_.at(node);
  }
  // Indices into edges() of the edges incident to `node`.
  const std::vector<int>& incident_edges(int node) const {
    return incident_.at(node);
  }
  bool adjacent(int a, int b) const;
  // Equal or adjacent: a legal single step of a walk.
  bool can_step(int a, int b) const { return a == b || adjacent(a, b); }

  bool has_isolated_node() const;
  int edge_index(const Edge& e) const;  // -1 when absent

  Matrix<int> adjacency_matrix() const;

  // Subgraph induced by `nodes` (indices into this graph), labels kept.
  Graph induced(const std::vector<int>& nodes) const;

 private:
  void build(const std::vector<Edge>& edges);

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<int>> incident_;
};

// L_n: nodes "1".."n", edges (i, i+1).
Graph line_graph(int n);

using NodeSet = std::vector<int>;

// Two colour classes, or nullopt if the graph has an odd cycle. Class 0
// always contains node 0 of each component, so L_n yields (odds, evens).
std::optional<std::pair<NodeSet, NodeSet>> bipartition(const Graph& g);

struct CoverResult {
  int size = 0;
  std::vector<Edge> witness;
};

// Minimum edge cover by branch and bound. Throws kNoCoveringSet when the
// graph has an isolated node.
CoverResult covering_number(const Graph& g);

struct IndependentResult {
  int size = 0;
  NodeSet witness;
};

// Maximum independent set by branch and bound.
IndependentResult independence_number(const Graph& g);

struct FractionalWeighting {
  std::vector<Rational> edge_weights;  // mu, aligned with Graph::edges()
  std::vector<Rational> node_weights;  // nu, one per node
  Rational total;
};

// Optimal fractional edge cover and fractional independent set from one
// exact LP solve and its dual. Throws kNoCoveringSet on isolated nodes.
FractionalWeighting fractional_weightings(const Graph& g);

bool is_edge_cover(const Graph& g, const std::vector<Edge>& edges);
bool is_independent_set(const Graph& g, const NodeSet& nodes);
bool is_feasible_weighting(const Graph& g, const FractionalWeighting& w);

}  // namespace patrol

#endif  // PATROL_GRAPH_HPP_
