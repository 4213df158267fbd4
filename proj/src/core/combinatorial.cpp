#include "core/combinatorial.hpp"

#include <algorithm>
#include <cmath>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace rgnn {

bool is_dominating(const Graph& g, const std::vector<NodeId>& members) {
  std::vector<bool> covered(g.node_count(), false);
  for (NodeId v : members) {
    covered[v] = true;
    for (NodeId u : g.neighbors(v)) covered[u] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

bool is_matching(const Graph& g, const std::vector<std::pair<NodeId, NodeId>>& members) {
  std::vector<bool> used(g.node_count(), false);
  for (auto [u, v] : members) {
    if (!g.has_edge(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = true;
  }
  return true;
}

NodeSolution greedy_mds(const Graph& g, const RandomAssignment& r) {
  const NodeId n = g.node_count();
  std::vector<bool> in_sol(n, false), covered(n, false);

  auto add = [&](NodeId v) {
    in_sol[v] = true;
    covered[v] = true;
    for (NodeId u : g.neighbors(v)) covered[u] = true;
  };

  // step 2: consistency pre-additions
  for (NodeId v = 0; v < n; ++v)
    if (value_collides_with_center(g, r, v, 2)) add(v);

  // step 3: max-coverage greedy, ties by (value code, node index)
  size_t covered_count = 0;
  for (NodeId v = 0; v < n; ++v) covered_count += covered[v];
  while (covered_count < n) {
    NodeId best = UINT32_MAX;
    size_t best_gain = 0;
    for (NodeId v = 0; v < n; ++v) {
      size_t gain = !covered[v];
      for (NodeId u : g.neighbors(v)) gain += !covered[u];
      if (gain == 0) continue;
      if (best == UINT32_MAX || gain > best_gain ||
          (gain == best_gain && value_less(r, v, best)))
        best = v, best_gain = gain;
    }
    add(best);
    covered_count = 0;
    for (NodeId v = 0; v < n; ++v) covered_count += covered[v];
  }

  NodeSolution sol;
  for (NodeId v = 0; v < n; ++v)
    if (in_sol[v]) sol.members.push_back(v);
  sol.feasible = is_dominating(g, sol.members);
  return sol;
}

namespace {

// One oracle evaluation with its private memo table.
struct OracleEval {
  const Graph& g;
  const RandomAssignment& r;
  std::vector<std::vector<int8_t>> memo;  // [level][node], -1 unknown
  std::vector<bool> probed;
  std::vector<bool> allowed;  // empty = everything allowed
  size_t probe_count = 0;
  uint64_t budget = UINT64_MAX;
  bool truncated = false;

  OracleEval(const Graph& g_, const RandomAssignment& r_, uint32_t max_level)
      : g(g_), r(r_), memo(max_level + 1, std::vector<int8_t>(g_.node_count(), -1)),
        probed(g_.node_count(), false) {}

  // Pessimistic 1 once any limit is hit; the caller treats truncated traces
  // as "include the node" anyway.
  int eval(uint32_t k, NodeId u) {
    if (truncated) return 1;
    if (!allowed.empty() && !allowed[u]) {
      truncated = true;
      return 1;
    }
    if (!probed[u]) {
      probed[u] = true;
      ++probe_count;
      if (probe_count > budget) {
        truncated = true;
        return 1;
      }
    }
    if (memo[k][u] >= 0) return memo[k][u];
    int ans;
    if (k == 0) {
      ans = value_collides_with_center(g, r, u, 2) ? 1 : 0;
    } else if (eval(k - 1, u) == 1) {
      ans = 1;
    } else {
      // nodes newly covered by u at stage k
      size_t cnt = 0;
      auto covered_by_solution = [&](NodeId w) {
        auto check = [&](NodeId x) {
          if (x == u) return false;
          int got = value_less(r, x, u) ? eval(k, x) : eval(k - 1, x);
          return got == 1;
        };
        if (check(w)) return true;
        for (NodeId x : g.neighbors(w))
          if (check(x)) return true;
        return false;
      };
      if (!covered_by_solution(u)) ++cnt;
      for (NodeId w : g.neighbors(u))
        if (!covered_by_solution(w)) ++cnt;
      if (truncated) return 1;
      ans = cnt >= g.max_degree() + 2 - k ? 1 : 0;
    }
    if (truncated) return 1;
    memo[k][u] = static_cast<int8_t>(ans);
    return ans;
  }
};

}  // namespace

MdsOracleResult mds_oracle(const Graph& g, const RandomAssignment& r, NodeId v, uint32_t level,
                           std::optional<uint32_t> radius, uint64_t budget) {
  if (level > g.max_degree() + 1) throw invalid_argument_error("oracle level exceeds max degree + 1");
  OracleEval ev(g, r, level);
  ev.budget = budget;
  if (radius) {
    ev.allowed.assign(g.node_count(), false);
    for (NodeId u : g.ball_nodes(v, *radius)) ev.allowed[u] = true;
  }
  MdsOracleResult res;
  res.answer = ev.eval(level, v);
  res.trace.queries = ev.probe_count;
  res.trace.truncated = ev.truncated;
  if (ev.truncated) res.answer = 1;
  return res;
}

LocalMdsResult local_mds(const Graph& g, const RandomAssignment& r, uint32_t radius,
                         uint64_t budget) {
  const uint32_t top = g.max_degree() + 1;
  LocalMdsResult out;
  std::vector<bool> in_sol(g.node_count(), false);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    bool collide = has_local_collision(g, r, v, radius);
    if (collide) ++out.collision_nodes;
    MdsOracleResult res = mds_oracle(g, r, v, top, radius, budget);
    out.total_queries += res.trace.queries;
    if (res.trace.truncated) ++out.truncated_nodes;
    if (collide || res.trace.truncated || res.answer == 1) in_sol[v] = true;
  }
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (in_sol[v]) out.solution.members.push_back(v);
  out.solution.feasible = is_dominating(g, out.solution.members);
  return out;
}

namespace {

struct PathCandidate {
  std::vector<uint32_t> codes;
  std::vector<NodeId> nodes;

  bool operator<(const PathCandidate& o) const {
    if (codes != o.codes) return codes < o.codes;
    return nodes < o.nodes;
  }
};

// All simple paths with exactly `len` edges, one orientation per path (the
// lexicographically smaller of the two by value tuple, then node tuple).
std::vector<PathCandidate> enumerate_paths(const Graph& g, const RandomAssignment& r,
                                           uint32_t len,
                                           const std::vector<std::vector<bool>>& edge_excluded) {
  std::vector<PathCandidate> out;
  std::vector<NodeId> stack;
  std::vector<bool> on_path(g.node_count(), false);

  auto excluded = [&](NodeId u, NodeId v) { return edge_excluded[u][v]; };

  std::function<void(NodeId)> dfs = [&](NodeId v) {
    if (stack.size() == len + 1) {
      PathCandidate cand;
      cand.nodes = stack;
      std::vector<NodeId> rev(stack.rbegin(), stack.rend());
      auto tuple_of = [&](const std::vector<NodeId>& ns) {
        std::vector<uint32_t> t;
        t.reserve(ns.size());
        for (NodeId x : ns) t.push_back(r.codes[x]);
        return t;
      };
      std::vector<uint32_t> fw = tuple_of(stack), bw = tuple_of(rev);
      if (std::make_pair(bw, rev) < std::make_pair(fw, cand.nodes)) return;  // keep one orientation
      cand.codes = std::move(fw);
      out.push_back(std::move(cand));
      return;
    }
    for (NodeId u : g.neighbors(v)) {
      if (on_path[u] || excluded(v, u)) continue;
      on_path[u] = true;
      stack.push_back(u);
      dfs(u);
      stack.pop_back();
      on_path[u] = false;
    }
  };

  for (NodeId s = 0; s < g.node_count(); ++s) {
    on_path[s] = true;
    stack.push_back(s);
    dfs(s);
    stack.pop_back();
    on_path[s] = false;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

EdgeSolution greedy_mm(const Graph& g, const RandomAssignment& r, uint32_t phases) {
  if (phases < 1) throw invalid_argument_error("phase count must be >= 1");
  const NodeId n = g.node_count();

  // step 2: exclude edges with a value collision in N_t(u) ∪ N_t(v)
  std::vector<std::vector<bool>> edge_excluded(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edge_list()) {
    std::vector<NodeId> ball_u = g.ball_nodes(u, phases);
    std::vector<NodeId> ball_v = g.ball_nodes(v, phases);
    std::vector<NodeId> uni;
    uni.reserve(ball_u.size() + ball_v.size());
    std::set_union(ball_u.begin(), ball_u.end(), ball_v.begin(), ball_v.end(),
                   std::back_inserter(uni));
    std::vector<uint32_t> codes;
    codes.reserve(uni.size());
    for (NodeId x : uni) codes.push_back(r.codes[x]);
    std::sort(codes.begin(), codes.end());
    if (std::adjacent_find(codes.begin(), codes.end()) != codes.end())
      edge_excluded[u][v] = edge_excluded[v][u] = true;
  }

  std::vector<NodeId> partner(n, UINT32_MAX);
  for (uint32_t k = 1; k <= phases; ++k) {
    std::vector<PathCandidate> paths = enumerate_paths(g, r, k, edge_excluded);
    std::vector<bool> in_a(n, false);
    std::vector<std::vector<NodeId>> accepted;
    for (const auto& p : paths) {
      bool skip = false;
      for (NodeId x : p.nodes)
        if (in_a[x]) {
          skip = true;
          break;
        }
      if (skip) continue;
      // augmenting: free endpoints, edges alternate starting unmatched
      if (partner[p.nodes.front()] != UINT32_MAX || partner[p.nodes.back()] != UINT32_MAX)
        continue;
      bool augmenting = true;
      for (size_t i = 0; i + 1 < p.nodes.size(); ++i) {
        bool matched_edge = partner[p.nodes[i]] == p.nodes[i + 1];
        bool want_matched = (i % 2 == 1);
        if (matched_edge != want_matched) {
          augmenting = false;
          break;
        }
      }
      if (!augmenting) continue;
      for (NodeId x : p.nodes) in_a[x] = true;
      accepted.push_back(p.nodes);
    }
    // M <- M xor A: matched edges of each path leave, unmatched join
    for (const auto& nodes : accepted) {
      for (size_t i = 1; i + 1 < nodes.size(); i += 2) {
        partner[nodes[i]] = UINT32_MAX;
        partner[nodes[i + 1]] = UINT32_MAX;
      }
      for (size_t i = 0; i + 1 < nodes.size(); i += 2) {
        partner[nodes[i]] = nodes[i + 1];
        partner[nodes[i + 1]] = nodes[i];
      }
    }
  }

  EdgeSolution sol;
  for (NodeId v = 0; v < n; ++v)
    if (partner[v] != UINT32_MAX && v < partner[v]) sol.members.emplace_back(v, partner[v]);
  sol.feasible = is_matching(g, sol.members);
  return sol;
}

namespace {

struct MdsBranch {
  const Graph& g;
  std::vector<uint64_t> closed;  // N[v] as bitmask
  uint64_t full = 0;
  size_t best_size = SIZE_MAX;
  uint64_t best_set = 0;

  void dfs(uint64_t chosen_mask, uint64_t covered, size_t chosen) {
    if (covered == full) {
      if (chosen < best_size) {
        best_size = chosen;
        best_set = chosen_mask;
      }
      return;
    }
    size_t uncovered = static_cast<size_t>(__builtin_popcountll(full & ~covered));
    size_t lower = (uncovered + g.max_degree()) / (g.max_degree() + 1);
    if (chosen + lower >= best_size) return;
    // branch on the uncovered node with the fewest coverers
    NodeId pick = UINT32_MAX;
    size_t fewest = SIZE_MAX;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (covered & (1ULL << v)) continue;
      size_t options = static_cast<size_t>(__builtin_popcountll(closed[v]));
      if (options < fewest) {
        fewest = options;
        pick = v;
      }
    }
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (!(closed[pick] & (1ULL << u))) continue;
      dfs(chosen_mask | (1ULL << u), covered | closed[u], chosen + 1);
    }
  }
};

}  // namespace

NodeSolution exact_mds(const Graph& g) {
  const NodeId n = g.node_count();
  if (n > kExactMdsLimit)
    throw size_limit_error("exact_mds limited to " + std::to_string(kExactMdsLimit) + " nodes");
  MdsBranch b{g, {}, (n == 64 ? ~0ULL : (1ULL << n) - 1), SIZE_MAX, 0};
  b.closed.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    uint64_t m = 1ULL << v;
    for (NodeId u : g.neighbors(v)) m |= 1ULL << u;
    b.closed[v] = m;
  }
  b.dfs(0, 0, 0);
  NodeSolution sol;
  for (NodeId v = 0; v < n; ++v)
    if (b.best_set & (1ULL << v)) sol.members.push_back(v);
  sol.feasible = is_dominating(g, sol.members);
  return sol;
}

namespace {

struct MmBranch {
  const Graph& g;
  size_t best = 0;
  std::vector<std::pair<NodeId, NodeId>> best_edges;
  std::vector<NodeId> partner;
  std::vector<std::pair<NodeId, NodeId>> current;

  void dfs(NodeId from, size_t count, size_t free_nodes) {
    if (count > best) {
      best = count;
      best_edges = current;
    }
    if (count + free_nodes / 2 <= best) return;
    // first vertex that can still be matched
    for (NodeId v = from; v < g.node_count(); ++v) {
      if (partner[v] != UINT32_MAX) continue;
      bool branched = false;
      for (NodeId u : g.neighbors(v)) {
        if (u < v || partner[u] != UINT32_MAX) continue;
        branched = true;
        partner[v] = u;
        partner[u] = v;
        current.emplace_back(v, u);
        dfs(v + 1, count + 1, free_nodes - 2);
        current.pop_back();
        partner[v] = partner[u] = UINT32_MAX;
      }
      // also consider leaving v unmatched
      if (branched) {
        partner[v] = v;  // sentinel: v skipped
        dfs(v + 1, count, free_nodes - 1);
        partner[v] = UINT32_MAX;
      }
      return;
    }
  }
};

}  // namespace

EdgeSolution exact_mm(const Graph& g) {
  const NodeId n = g.node_count();
  if (n > kExactMmLimit)
    throw size_limit_error("exact_mm limited to " + std::to_string(kExactMmLimit) + " nodes");
  MmBranch b{g, 0, {}, std::vector<NodeId>(n, UINT32_MAX), {}};
  b.dfs(0, 0, n);
  EdgeSolution sol;
  sol.members = b.best_edges;
  for (auto& [u, v] : sol.members)
    if (u > v) std::swap(u, v);
  std::sort(sol.members.begin(), sol.members.end());
  sol.feasible = is_matching(g, sol.members);
  return sol;
}

NodeSolution extract_node_solution(const Graph& g, const RandomAssignment& r,
                                   const std::vector<double>& scores, uint32_t radius,
                                   ExtractMode mode) {
  if (scores.size() != g.node_count())
    throw invalid_argument_error("score count != node count");
  NodeSolution sol;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    double z = scores[v];
    if (has_local_collision(g, r, v, radius))
      z = mode == ExtractMode::minimize ? 1.0 : 0.0;
    if (z > 0.5) sol.members.push_back(v);
  }
  sol.feasible = is_dominating(g, sol.members);
  return sol;
}

EdgeSolution extract_edge_solution(const Graph& g, const RandomAssignment& r,
                                   const std::vector<std::vector<double>>& embeddings,
                                   uint32_t radius, ExtractMode mode) {
  if (embeddings.size() != g.node_count())
    throw invalid_argument_error("embedding count != node count");
  std::vector<std::vector<double>> z = embeddings;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (has_local_collision(g, r, v, radius))
      std::fill(z[v].begin(), z[v].end(), mode == ExtractMode::minimize ? 1.0 : 0.0);
  EdgeSolution sol;
  for (auto [u, v] : g.edge_list()) {
    double dot = 0.0;
    for (size_t i = 0; i < z[u].size(); ++i) dot += z[u][i] * z[v][i];
    if (dot > 0.5) sol.members.emplace_back(u, v);
  }
  sol.feasible = is_matching(g, sol.members);
  return sol;
}

EstimateResult estimate_size(size_t n_elements, const std::function<bool(size_t)>& member,
                             double eps, double delta, uint64_t seed) {
  if (eps <= 0.0 || eps >= 1.0 || delta <= 0.0 || delta >= 1.0)
    throw invalid_argument_error("eps and delta must lie in (0,1)");
  EstimateResult res;
  res.samples = static_cast<uint32_t>(std::ceil(std::log(2.0 / delta) / (2.0 * eps * eps)));
  Rng rng(seed);
  size_t hits = 0;
  for (uint32_t i = 0; i < res.samples; ++i) {
    size_t idx = rng.next_below(static_cast<uint32_t>(n_elements));
    if (member(idx)) ++hits;
  }
  res.estimate =
      static_cast<double>(n_elements) * static_cast<double>(hits) / res.samples;
  return res;
}

RatioStats approx_ratio_bench(const std::vector<Graph>& graphs, BenchAlgo algo,
                              const BenchParams& params) {
  RatioStats stats;
  Distribution dist = uniform_support(params.support);
  double sum = 0.0;
  for (size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    RandomAssignment r = assign(g, dist, mix64(params.feature_seed, i));
    double ratio = 0.0;
    bool violated = false;
    if (algo == BenchAlgo::greedy_mm) {
      EdgeSolution got = greedy_mm(g, r, params.mm_phases);
      EdgeSolution opt = exact_mm(g);
      stats.all_feasible = stats.all_feasible && got.feasible;
      ratio = opt.size() == 0 ? 1.0
                              : static_cast<double>(got.size()) / static_cast<double>(opt.size());
      violated = static_cast<double>(got.size()) <
                 static_cast<double>(opt.size()) / params.mm_bound - 1e-9;
    } else {
      NodeSolution got = algo == BenchAlgo::greedy_mds
                             ? greedy_mds(g, r)
                             : local_mds(g, r, params.local_radius, params.local_budget).solution;
      NodeSolution opt = exact_mds(g);
      stats.all_feasible = stats.all_feasible && got.feasible;
      ratio = static_cast<double>(got.size()) / static_cast<double>(opt.size());
      violated = algo == BenchAlgo::greedy_mds &&
                 static_cast<double>(got.size()) >
                     params.mds_bound * static_cast<double>(opt.size()) + 1e-9;
    }
    stats.per_graph.push_back(ratio);
    if (violated) stats.violations.push_back(i);
    sum += ratio;
  }
  if (!stats.per_graph.empty()) {
    stats.min_ratio = *std::min_element(stats.per_graph.begin(), stats.per_graph.end());
    stats.max_ratio = *std::max_element(stats.per_graph.begin(), stats.per_graph.end());
    stats.mean_ratio = sum / static_cast<double>(stats.per_graph.size());
  }
  return stats;
}

}  // namespace rgnn
