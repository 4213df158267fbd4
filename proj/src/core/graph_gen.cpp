#include "core/graph_gen.hpp"

#include <algorithm>

#include "core/combinatorial.hpp"
#include "core/error.hpp"
#include "core/rng.hpp"

namespace rgnn {

namespace {
constexpr int kMaxAttempts = 10000;
}

Graph random_regular(NodeId n, NodeId d, uint64_t seed) {
  if (d >= n) throw invalid_argument_error("degree must be < node count");
  if ((static_cast<uint64_t>(n) * d) % 2 != 0)
    throw invalid_argument_error("n*d must be even");

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng rng(mix64(seed, static_cast<uint64_t>(attempt)));
    std::vector<NodeId> stubs;
    stubs.reserve(static_cast<size_t>(n) * d);
    for (NodeId v = 0; v < n; ++v)
      for (NodeId i = 0; i < d; ++i) stubs.push_back(v);
    rng.shuffle(stubs);

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(stubs.size() / 2);
    bool ok = true;
    std::vector<std::vector<NodeId>> seen(n);
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
      NodeId u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      auto& su = seen[std::min(u, v)];
      if (std::find(su.begin(), su.end(), std::max(u, v)) != su.end()) {
        ok = false;
        break;
      }
      su.push_back(std::max(u, v));
      edges.emplace_back(u, v);
    }
    if (!ok) continue;
    Graph g(n, edges);
    if (g.ball_nodes(0, n).size() != n) continue;  // disconnected
    return g;
  }
  throw generation_error("random_regular: no simple connected graph after " +
                         std::to_string(kMaxAttempts) + " attempts");
}

const char* dataset_kind_name(DatasetKind k) {
  switch (k) {
    case DatasetKind::triangle: return "triangle";
    case DatasetKind::lcc: return "lcc";
    case DatasetKind::mds: return "mds";
  }
  return "unknown";
}

DatasetKind dataset_kind_from_name(const std::string& name) {
  if (name == "triangle" || name == "tri") return DatasetKind::triangle;
  if (name == "lcc") return DatasetKind::lcc;
  if (name == "mds") return DatasetKind::mds;
  throw invalid_argument_error("unknown dataset kind: " + name);
}

Dataset make_dataset(DatasetKind kind, uint32_t n_graphs, NodeId n_nodes, uint64_t seed,
                     const Distribution& mds_dist, NodeId degree) {
  Dataset ds;
  ds.kind = kind;
  ds.seed = seed;
  ds.records.reserve(n_graphs);
  // Streams 1 and 2 keep structure seeds and labeling-assignment seeds apart.
  const uint64_t structure_stream = mix64(seed, 1);
  const uint64_t assignment_stream = mix64(seed, 2);
  for (uint32_t i = 0; i < n_graphs; ++i) {
    GraphRecord rec;
    rec.graph = random_regular(n_nodes, degree, mix64(structure_stream, i));
    const NodeId n = rec.graph.node_count();
    rec.labels.resize(n);
    switch (kind) {
      case DatasetKind::triangle:
        for (NodeId v = 0; v < n; ++v) rec.labels[v] = triangle_label(rec.graph, v) ? 1 : 0;
        break;
      case DatasetKind::lcc:
        for (NodeId v = 0; v < n; ++v) {
          Rational lcc = local_clustering_coefficient(rec.graph, v);
          // on 3-regular graphs lcc = c/3 exactly
          rec.labels[v] = static_cast<int32_t>(lcc.num * 3 / lcc.den);
        }
        break;
      case DatasetKind::mds: {
        RandomAssignment r = assign(rec.graph, mds_dist, mix64(assignment_stream, i));
        NodeSolution sol = greedy_mds(rec.graph, r);
        for (NodeId v : sol.members) rec.labels[v] = 1;
        rec.r_codes = r.codes;
        break;
      }
    }
    ds.records.push_back(std::move(rec));
  }
  return ds;
}

}  // namespace rgnn
