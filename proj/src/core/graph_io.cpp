#include "core/graph_io.hpp"

#include <fstream>

#include <json.hpp>

#include "core/error.hpp"

namespace rgnn {

using nlohmann::json;

std::string graph_to_json(const GraphRecord& rec) {
  json j;
  j["n"] = rec.graph.node_count();
  json edges = json::array();
  for (auto [u, v] : rec.graph.edge_list()) edges.push_back(json::array({u, v}));
  j["edges"] = std::move(edges);
  if (rec.graph.has_features()) j["features"] = rec.graph.features();
  if (!rec.labels.empty()) j["labels"] = rec.labels;
  if (!rec.r_codes.empty()) j["r"] = rec.r_codes;
  return j.dump();
}

GraphRecord graph_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw io_error(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("edges"))
    throw io_error("graph JSON needs \"n\" and \"edges\"");
  GraphRecord rec;
  NodeId n = j["n"].get<NodeId>();
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw io_error("edge must be a [u,v] pair");
    edges.emplace_back(e[0].get<NodeId>(), e[1].get<NodeId>());
  }
  std::vector<std::vector<double>> feats;
  if (j.contains("features")) feats = j["features"].get<std::vector<std::vector<double>>>();
  try {
    rec.graph = Graph(n, edges, std::move(feats));
  } catch (const Error& e) {
    throw io_error(std::string("bad graph: ") + e.what());
  }
  if (j.contains("labels")) {
    rec.labels = j["labels"].get<std::vector<int32_t>>();
    if (rec.labels.size() != n) throw io_error("label array length != node count");
  }
  if (j.contains("r")) {
    rec.r_codes = j["r"].get<std::vector<uint32_t>>();
    if (rec.r_codes.size() != n) throw io_error("r array length != node count");
  }
  return rec;
}

std::vector<GraphRecord> read_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open " + path);
  std::vector<GraphRecord> recs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    recs.push_back(graph_from_json(line));
  }
  return recs;
}

void write_jsonl(const std::string& path, const std::vector<GraphRecord>& recs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path + " for writing");
  for (const auto& rec : recs) out << graph_to_json(rec) << '\n';
}

}  // namespace rgnn
