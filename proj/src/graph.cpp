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

#include "patrol/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "patrol/simplex.hpp"

namespace patrol {

Graph::Graph(std::vector<std::string> labels,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(labels)) {
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    const int ia = index_of(a);
    const int ib = index_of(b);
    PATROL_REQUIRE(ia >= 0 && ib >= 0, ErrorCategory::kInvalidArgument,
                   "edge (" + a + "," + b + ") uses an undeclared node");
    PATROL_REQUIRE(ia != ib, ErrorCategory::kInvalidArgument,
                   "self-loop at node " + a);
    indexed.emplace_back(ia, ib);
  }
  build(indexed);
}

Graph::Graph(std::vector<std::string> labels, const std::vector<Edge>& edges)
    : labels_(std::move(labels)) {
  build(edges);
}

void Graph::build(const std::vector<Edge>& edges) {
  const int n = num_nodes();
  std::set<std::string> seen(labels_.begin(), labels_.end());
  PATROL_REQUIRE(static_cast<int>(seen.size()) == n,
                 ErrorCategory::kInvalidArgument, "duplicate node label");
  std::set<Edge> unique;
  for (const Edge& e : edges) {
    PATROL_REQUIRE(e.u >= 0 && e.v < n, ErrorCategory::kInvalidArgument,
                   "edge endpoint out of range");
    PATROL_REQUIRE(e.u != e.v, ErrorCategory::kInvalidArgument,
                   "self-loop at node " + labels_[e.u]);
    PATROL_REQUIRE(unique.insert(e).second, ErrorCategory::kInvalidArgument,
                   "duplicate edge (" + labels_[e.u] + "," + labels_[e.v] +
                       ")");
  }
  edges_.assign(unique.begin(), unique.end());
  neighbors_.assign(n, {});
  incident_.assign(n, {});
  for (int k = 0; k < num_edges(); ++k) {
    const Edge& e = edges_[k];
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
    incident_[e.u].push_back(k);
    incident_[e.v].push_back(k);
  }
  for (auto& adj : neighbors_) std::sort(adj.begin(), adj.end());
}

int Graph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

bool Graph::adjacent(int a, int b) const {
  const auto& adj = neighbors_.at(a);
  return std::binary_search(adj.begin(), adj.end(), b);
}

bool Graph::has_isolated_node() const {
  return std::any_of(neighbors_.begin(), neighbors_.end(),
                     [](const auto& adj) { return adj.empty(); });
}

int Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return (it != edges_.end() && *it == e)
             ? static_cast<int>(it - edges_.begin())
             : -1;
}

Matrix<int> Graph::adjacency_matrix() const {
  Matrix<int> a = Matrix<int>::Zero(num_nodes(), num_nodes());
  for (const Edge& e : edges_) {
    a(e.u, e.v) = 1;
    a(e.v, e.u) = 1;
  }
  return a;
}

Graph Graph::induced(const std::vector<int>& nodes) const {
  std::vector<std::string> labels;
  std::vector<int> remap(num_nodes(), -1);
  for (int node : nodes) {
    remap.at(node) = static_cast<int>(labels.size());
    labels.push_back(labels_[node]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (remap[e.u] >= 0 && remap[e.v] >= 0)
      edges.emplace_back(remap[e.u], remap[e.v]);
  }
  return Graph(std::move(labels), edges);
}

Graph line_graph(int n) {
  PATROL_REQUIRE(n >= 2, ErrorCategory::kInvalidArgument,
                 "line graph needs at least 2 nodes");
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(std::move(labels), edges);
}

std::optional<std::pair<NodeSet, NodeSet>> bipartition(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<int> colour(n, -1);
  for (int root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  std::pair<NodeSet, NodeSet> sides;
  for (int i = 0; i < n; ++i)
    (colour[i] == 0 ? sides.first : sides.second).push_back(i);
  return sides;
}

namespace {

class CoverSearch {
 public:
  explicit CoverSearch(const Graph& g)
      : g_(g), cover_count_(g.num_nodes(), 0) {}

  CoverResult run() {
    // Greedy seed: every node takes its first incident edge if uncovered.
    std::vector<int> count(g_.num_nodes(), 0);
    for (int node = 0; node < g_.num_nodes(); ++node) {
      if (count[node] > 0) continue;
      const Edge& e = g_.edges()[g_.incident_edges(node).front()];
      best_.push_back(e);
      ++count[e.u];
      ++count[e.v];
    }
    search(g_.num_nodes());
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  void search(int uncovered) {
    if (uncovered == 0) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    // Each further edge covers at most two nodes.
    const int lower = static_cast<int>(chosen_.size()) + (uncovered + 1) / 2;
    if (lower >= static_cast<int>(best_.size())) return;

    int node = 0;
    while (cover_count_[node] > 0) ++node;
    for (int k : g_.incident_edges(node)) {
      const Edge& e = g_.edges()[k];
      const int gained =
          (cover_count_[e.u] == 0 ? 1 : 0) + (cover_count_[e.v] == 0 ? 1 : 0);
      ++cover_count_[e.u];
      ++cover_count_[e.v];
      chosen_.push_back(e);
      search(uncovered - gained);
      chosen_.pop_back();
      --cover_count_[e.u];
      --cover_count_[e.v];
    }
  }

  const Graph& g_;
  std::vector<int> cover_count_;
  std::vector<Edge> chosen_;
  std::vector<Edge> best_;
};

class IndependentSearch {
 public:
  explicit IndependentSearch(const Graph& g)
      : g_(g), blocked_(g.num_nodes(), 0) {}

  IndependentResult run() {
    search(0, g_.num_nodes());
    return {static_cast<int>(best_.size()), best_};
  }

 private:
  void search(int next, int free_nodes) {
    if (chosen_.size() + free_nodes <= best_.size()) return;
    while (next < g_.num_nodes() && blocked_[next] > 0) ++next;
    if (next == g_.num_nodes()) {
      best_ = chosen_;
      return;
    }
    // Take `next`: it and its free neighbours leave the pool.
    int removed = 1;
    ++blocked_[next];
    for (int v : g_.neighbors(next)) {
      if (v > next && blocked_[v]++ == 0) ++removed;
    }
    chosen_.push_back(next);
    search(next + 1, free_nodes - removed);
    chosen_.pop_back();
    for (int v : g_.neighbors(next)) {
      if (v > next) --blocked_[v];
    }
    // Skip `next`.
    search(next + 1, free_nodes - 1);
    --blocked_[next];
  }

  const Graph& g_;
  std::vector<int> blocked_;
  NodeSet chosen_;
  NodeSet best_;
};

}  // namespace

CoverResult covering_number(const Graph& g) {
  PATROL_REQUIRE(!g.has_isolated_node(), ErrorCategory::kNoCoveringSet,
                 "no covering set: graph has an isolated node");
  return CoverSearch(g).run();
}

IndependentResult independence_number(const Graph& g) {
  return IndependentSearch(g).run();
}

FractionalWeighting fractional_weightings(const Graph& g) {
  PATROL_REQUIRE(!g.has_isolated_node(), ErrorCategory::kNoCoveringSet,
                 "fractional covering LP infeasible: graph has an isolated "
                 "node");
  const int n = g.num_nodes();
  const int m = g.num_edges();
  // Node-weight LP: max sum nu  s.t. nu_u + nu_v <= 1 per edge. Its dual is
  // the edge-weight covering LP.
  RationalMatrix a = RationalMatrix::Zero(m, n);
  for (int k = 0; k < m; ++k) {
    a(k, g.edges()[k].u) = 1;
    a(k, g.edges()[k].v) = 1;
  }
  const RationalVector b = RationalVector::Constant(m, Rational(1));
  const RationalVector c = RationalVector::Constant(n, Rational(1));
  const LpSolution<Rational> lp = solve_lp<Rational>(a, b, c);
  PATROL_REQUIRE(lp.status == LpStatus::kOptimal, ErrorCategory::kInfeasible,
                 "fractional weighting LP did not reach an optimum");

  FractionalWeighting w;
  w.total = lp.objective;
  w.node_weights.assign(lp.primal.begin(), lp.primal.end());
  w.edge_weights.assign(lp.dual.begin(), lp.dual.end());
  return w;
}

bool is_edge_cover(const Graph& g, const std::vector<Edge>& edges) {
  std::vector<bool> covered(g.num_nodes(), false);
  for (const Edge& e : edges) {
    if (g.edge_index(e) < 0) return false;
    covered[e.u] = covered[e.v] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool c) { return c; });
}

bool is_independent_set(const Graph& g, const NodeSet& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j] || g.adjacent(nodes[i], nodes[j])) return false;
  return true;
}

bool is_feasible_weighting(const Graph& g, const FractionalWeighting& w) {
  if (static_cast<int>(w.edge_weights.size()) != g.num_edges() ||
      static_cast<int>(w.node_weights.size()) != g.num_nodes())
    return false;
  Rational edge_total = 0;
  Rational node_total = 0;
  for (const Rational& mu : w.edge_weights) {
    if (mu < 0 || mu > 1) return false;
    edge_total += mu;
  }
  for (const Rational& nu : w.node_weights) {
    if (nu < 0 || nu > 1) return false;
    node_total += nu;
  }
  for (int node = 0; node < g.num_nodes(); ++node) {
    Rational incident = 0;
    for (int k : g.incident_edges(node)) incident += w.edge_weights[k];
    if (incident < 1) return false;
  }
  for (int k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edges()[k];
    if (w.node_weights[e.u] + w.node_weights[e.v] > 1) return false;
  }
  return edge_total == w.total && node_total == w.total;
}

}  // namespace patrol
