#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/random_features.hpp"

namespace rgnn {

struct NodeSolution {
  std::vector<NodeId> members;  // sorted
  bool feasible = false;        // dominating set certificate
  size_t size() const { return members.size(); }
};

struct EdgeSolution {
  std::vector<std::pair<NodeId, NodeId>> members;  // u < v, sorted
  bool feasible = false;                           // matching certificate
  size_t size() const { return members.size(); }
};

bool is_dominating(const Graph& g, const std::vector<NodeId>& members);
bool is_matching(const Graph& g, const std::vector<std::pair<NodeId, NodeId>>& members);

// Greedy MDS with the random-value consistency step: nodes colliding with
// their own value inside N_2 are pre-added, then max-coverage greedy with
// ties broken by (value code, node index). Always dominating.
NodeSolution greedy_mds(const Graph& g, const RandomAssignment& r);

struct OracleTrace {
  size_t queries = 0;     // distinct nodes probed
  bool truncated = false; // budget or radius exceeded
};

// Local oracle chain O_0..O_{max_level}. O_0(v) answers the step-2 collision
// test; O_k(v) simulates stage k of the greedy (coverage threshold
// max_degree+2-k) by querying O_{k-1} on larger-valued and O_k on
// smaller-valued nodes of N_2(v). Exploration is confined to N_radius(v)
// when `radius` is set, and to `budget` distinct nodes (UINT64_MAX =
// unlimited, 0 = truncate immediately); either limit marks the trace
// truncated, and the answer is then pessimistically 1.
struct MdsOracleResult {
  int answer = 0;
  OracleTrace trace;
};

MdsOracleResult mds_oracle(const Graph& g, const RandomAssignment& r, NodeId v, uint32_t level,
                           std::optional<uint32_t> radius = std::nullopt, uint64_t budget = UINT64_MAX);

// Constant-time-local MDS: F = truncated nodes + local-collision nodes +
// oracle-accepted nodes. Always dominating.
struct LocalMdsResult {
  NodeSolution solution;
  size_t truncated_nodes = 0;  // |S_L|
  size_t collision_nodes = 0;  // |U_L|
  size_t total_queries = 0;
};

LocalMdsResult local_mds(const Graph& g, const RandomAssignment& r, uint32_t radius,
                         uint64_t budget);

// Phased augmenting-path matching. Phase k flips a maximal set of
// vertex-disjoint augmenting paths of length k, scanned in lexicographic
// order of their value tuples; edges with a value collision in
// N_t(u) ∪ N_t(v) are excluded up front. Always a matching.
EdgeSolution greedy_mm(const Graph& g, const RandomAssignment& r, uint32_t phases);

// Exact solvers (oracles for the benchmarks). Branch and bound; throw
// size_limit above the stated caps.
inline constexpr NodeId kExactMdsLimit = 24;
inline constexpr NodeId kExactMmLimit = 30;
NodeSolution exact_mds(const Graph& g);
EdgeSolution exact_mm(const Graph& g);

enum class ExtractMode { minimize, maximize };

// Threshold node scores at 0.5 after forcing local-collision nodes to 1
// (minimize) or 0 (maximize).
NodeSolution extract_node_solution(const Graph& g, const RandomAssignment& r,
                                   const std::vector<double>& scores, uint32_t radius,
                                   ExtractMode mode);

// Edge via inner products of node embeddings > 0.5, with collision nodes
// forced to the all-ones / all-zeros vector.
EdgeSolution extract_edge_solution(const Graph& g, const RandomAssignment& r,
                                   const std::vector<std::vector<double>>& embeddings,
                                   uint32_t radius, ExtractMode mode);

// Hoeffding estimator: ceil(ln(2/delta) / (2 eps^2)) membership probes,
// uniform with replacement; returns n_elements * sample mean.
struct EstimateResult {
  double estimate = 0.0;
  uint32_t samples = 0;
};

EstimateResult estimate_size(size_t n_elements, const std::function<bool(size_t)>& member,
                             double eps, double delta, uint64_t seed);

struct RatioStats {
  std::vector<double> per_graph;
  double min_ratio = 0.0;
  double mean_ratio = 0.0;
  double max_ratio = 0.0;
  std::vector<size_t> violations;  // graph indices breaking the theoretical bound
  bool all_feasible = true;
};

enum class BenchAlgo { greedy_mds, local_mds, greedy_mm };

struct BenchParams {
  uint32_t support = 1000000;
  uint64_t feature_seed = 1;
  uint32_t mm_phases = 5;
  uint32_t local_radius = 8;
  uint64_t local_budget = UINT64_MAX;
  double mds_bound = 25.0 / 12.0;  // H(4)
  double mm_bound = 1.5;           // size >= OPT / mm_bound
};

RatioStats approx_ratio_bench(const std::vector<Graph>& graphs, BenchAlgo algo,
                              const BenchParams& params);

}  // namespace rgnn
