#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"

namespace rgnn {

// One graph per JSON line. Fields: "n", "edges" ([u,v] with u<v), optional
// "features" (n x d), optional "labels" (per-node ints), optional "r"
// (per-node random value codes used when the labels were generated).
struct GraphRecord {
  Graph graph;
  std::vector<int32_t> labels;     // empty when absent
  std::vector<uint32_t> r_codes;   // empty when absent
};

std::string graph_to_json(const GraphRecord& rec);
GraphRecord graph_from_json(const std::string& line);

std::vector<GraphRecord> read_jsonl(const std::string& path);
void write_jsonl(const std::string& path, const std::vector<GraphRecord>& recs);

}  // namespace rgnn
