#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/graph_io.hpp"
#include "core/random_features.hpp"

namespace rgnn {

// Simple connected d-regular graph via configuration-model pairing with
// rejection; deterministic in the seed. Throws generation_failure after
// kMaxAttempts rejected pairings.
Graph random_regular(NodeId n, NodeId d, uint64_t seed);

enum class DatasetKind { triangle, lcc, mds };

const char* dataset_kind_name(DatasetKind k);
DatasetKind dataset_kind_from_name(const std::string& name);

struct Dataset {
  DatasetKind kind = DatasetKind::triangle;
  std::vector<GraphRecord> records;
  uint64_t seed = 0;

  size_t size() const { return records.size(); }
};

// Labels: TRIANGLE 0/1 via triangle_label; LCC class c in {0..3} with
// LCC value exactly c/3 on 3-regular graphs; MDS 0/1 membership in the
// greedy solution under a per-graph assignment drawn from `mds_dist`
// (codes stored in the record's "r" field).
Dataset make_dataset(DatasetKind kind, uint32_t n_graphs, NodeId n_nodes, uint64_t seed,
                     const Distribution& mds_dist = uniform_support(100), NodeId degree = 3);

}  // namespace rgnn
