#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace rgnn {

using NodeId = uint32_t;

// Immutable simple undirected graph with sorted neighbor lists and optional
// per-node feature vectors. Construction accepts arbitrary edge lists;
// validate() reports violated invariants instead of throwing, so malformed
// inputs can be diagnosed.
class Graph {
 public:
  Graph() = default;
  Graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges);
  Graph(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& edges,
        std::vector<std::vector<double>> features);

  NodeId node_count() const { return n_; }
  size_t edge_count() const;
  const std::vector<NodeId>& neighbors(NodeId v) const { return adj_[v]; }
  NodeId degree(NodeId v) const { return static_cast<NodeId>(adj_[v].size()); }
  NodeId max_degree() const { return max_degree_; }
  bool has_edge(NodeId u, NodeId v) const;

  bool has_features() const { return !features_.empty(); }
  const std::vector<std::vector<double>>& features() const { return features_; }
  const std::vector<double>& feature(NodeId v) const { return features_[v]; }

  // Edges as (u, v) pairs with u < v, lexicographically sorted.
  std::vector<std::pair<NodeId, NodeId>> edge_list() const;

  // Nodes within `radius` hops of v (v included), ascending node id.
  std::vector<NodeId> ball_nodes(NodeId v, uint32_t radius) const;

 private:
  NodeId n_ = 0;
  std::vector<std::vector<NodeId>> adj_;
  std::vector<std::vector<double>> features_;
  NodeId max_degree_ = 0;
};

enum class Violation { self_loop, duplicate_edge, asymmetric, disconnected };

struct ViolationReport {
  Violation kind;
  std::string detail;
};

const char* violation_name(Violation v);

// First violated invariant, or nullopt when the graph is simple, symmetric
// and connected.
std::optional<ViolationReport> validate(const Graph& g);

// Induced subgraph of the L-hop ball around `root`. Ball nodes keep their
// relative order by original id; `original_ids` maps local -> original.
struct RootedBall {
  Graph graph;
  NodeId root = 0;  // local index
  uint32_t radius = 0;
  std::vector<NodeId> original_ids;
};

RootedBall induced_ball(const Graph& g, NodeId v, uint32_t radius);

// Exact local clustering coefficient; 0 for degree < 2 by convention.
Rational local_clustering_coefficient(const Graph& g, NodeId v);

// True iff two neighbors of v are adjacent.
bool triangle_label(const Graph& g, NodeId v);

// Small named graphs used all over the tests and the WL demo.
Graph cycle_graph(NodeId n);
Graph complete_graph(NodeId n);
Graph path_graph(NodeId n);
Graph star_graph(NodeId leaves);
Graph petersen_graph();

}  // namespace rgnn
