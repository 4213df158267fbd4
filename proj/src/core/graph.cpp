#include "core/graph.hpp"

#include <algorithm>
#include <deque>

#include "core/error.hpp"

namespace rgnn {

Graph::Graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges) : n_(n), adj_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw invalid_argument_error("edge endpoint out of range");
    adj_[u].push_back(v);
    if (u != v) adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    max_degree_ = std::max<NodeId>(max_degree_, static_cast<NodeId>(nb.size()));
  }
}

Graph::Graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges,
             std::vector<std::vector<double>> features)
    : Graph(n, edges) {
  if (!features.empty() && features.size() != n)
    throw invalid_argument_error("feature matrix row count != node count");
  features_ = std::move(features);
}

size_t Graph::edge_count() const {
  size_t deg_sum = 0;
  for (const auto& nb : adj_) deg_sum += nb.size();
  return deg_sum / 2;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edge_list() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (NodeId u = 0; u < n_; ++u)
    for (NodeId v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<NodeId> Graph::ball_nodes(NodeId v, uint32_t radius) const {
  std::vector<uint32_t> dist(n_, UINT32_MAX);
  std::deque<NodeId> q{v};
  dist[v] = 0;
  std::vector<NodeId> out{v};
  while (!q.empty()) {
    NodeId u = q.front();
    q.pop_front();
    if (dist[u] == radius) continue;
    for (NodeId w : adj_[u]) {
      if (dist[w] == UINT32_MAX) {
        dist[w] = dist[u] + 1;
        out.push_back(w);
        q.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const char* violation_name(Violation v) {
  switch (v) {
    case Violation::self_loop: return "self-loop";
    case Violation::duplicate_edge: return "duplicate-edge";
    case Violation::asymmetric: return "asymmetric";
    case Violation::disconnected: return "disconnected";
  }
  return "unknown";
}

std::optional<ViolationReport> validate(const Graph& g) {
  const NodeId n = g.node_count();
  for (NodeId u = 0; u < n; ++u) {
    const auto& nb = g.neighbors(u);
    for (size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == u)
        return ViolationReport{Violation::self_loop, "node " + std::to_string(u)};
      if (i > 0 && nb[i] == nb[i - 1])
        return ViolationReport{Violation::duplicate_edge,
                               "edge (" + std::to_string(u) + "," + std::to_string(nb[i]) + ")"};
    }
  }
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : g.neighbors(u))
      if (!g.has_edge(v, u))
        return ViolationReport{Violation::asymmetric,
                               "edge (" + std::to_string(u) + "," + std::to_string(v) + ")"};
  if (n > 0) {
    std::vector<NodeId> reach = g.ball_nodes(0, n);
    if (reach.size() != n)
      return ViolationReport{Violation::disconnected,
                             std::to_string(reach.size()) + " of " + std::to_string(n) +
                                 " nodes reachable from node 0"};
  }
  return std::nullopt;
}

RootedBall induced_ball(const Graph& g, NodeId v, uint32_t radius) {
  if (v >= g.node_count()) throw invalid_argument_error("ball root out of range");
  std::vector<NodeId> nodes = g.ball_nodes(v, radius);
  std::vector<NodeId> local(g.node_count(), UINT32_MAX);
  for (size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);

  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId u : nodes)
    for (NodeId w : g.neighbors(u))
      if (u < w && local[w] != UINT32_MAX) edges.emplace_back(local[u], local[w]);

  std::vector<std::vector<double>> feats;
  if (g.has_features()) {
    feats.reserve(nodes.size());
    for (NodeId u : nodes) feats.push_back(g.feature(u));
  }

  RootedBall ball;
  ball.graph = Graph(static_cast<NodeId>(nodes.size()), edges, std::move(feats));
  ball.root = local[v];
  ball.radius = radius;
  ball.original_ids = std::move(nodes);
  return ball;
}

Rational local_clustering_coefficient(const Graph& g, NodeId v) {
  const auto& nb = g.neighbors(v);
  const int64_t d = static_cast<int64_t>(nb.size());
  if (d < 2) return Rational(0, 1);
  int64_t links = 0;
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (g.has_edge(nb[i], nb[j])) ++links;
  return Rational(links, d * (d - 1) / 2);
}

bool triangle_label(const Graph& g, NodeId v) {
  const auto& nb = g.neighbors(v);
  for (size_t i = 0; i < nb.size(); ++i)
    for (size_t j = i + 1; j < nb.size(); ++j)
      if (g.has_edge(nb[i], nb[j])) return true;
  return false;
}

Graph cycle_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  if (n == 2) edges.pop_back();  // avoid the duplicate (1,0)
  return Graph(n, edges);
}

Graph complete_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph path_graph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph star_graph(NodeId leaves) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

Graph petersen_graph() {
  // Outer 5-cycle, inner pentagram, spokes.
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph(10, edges);
}

}  // namespace rgnn
