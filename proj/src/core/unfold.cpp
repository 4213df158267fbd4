#include "core/unfold.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <map>
#include <unordered_map>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace rgnn {

namespace {

TreePtr make_leaf(const Graph& g, NodeId v, const RandomAssignment& r) {
  auto t = std::make_shared<UnfoldTree>();
  t->level = 0;
  if (g.has_features()) t->feature = g.feature(v);
  t->value_code = r.codes[v];
  return t;
}

std::vector<TreePtr> build_levels(const Graph& g, const RandomAssignment& r, uint32_t depth) {
  std::vector<TreePtr> cur(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) cur[v] = make_leaf(g, v, r);
  for (uint32_t l = 1; l <= depth; ++l) {
    std::vector<TreePtr> next(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
      auto t = std::make_shared<UnfoldTree>();
      t->level = l;
      t->own = cur[v];
      t->children.reserve(g.degree(v));
      for (NodeId u : g.neighbors(v)) t->children.push_back(cur[u]);
      next[v] = std::move(t);
    }
    cur = std::move(next);
  }
  return cur;
}

void serialize_into(const UnfoldTree& t, std::unordered_map<const UnfoldTree*, std::string>& memo,
                    std::string& out) {
  auto it = memo.find(&t);
  if (it != memo.end()) {
    out += it->second;
    return;
  }
  std::string s;
  if (t.level == 0) {
    s += "L[";
    s += std::to_string(t.feature.size());
    s += ':';
    s.append(reinterpret_cast<const char*>(t.feature.data()), t.feature.size() * sizeof(double));
    s += ',';
    s += std::to_string(t.value_code);
    s += ']';
  } else {
    std::vector<std::string> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) {
      std::string ks;
      serialize_into(*c, memo, ks);
      kids.push_back(std::move(ks));
    }
    std::sort(kids.begin(), kids.end());
    s += "N[";
    serialize_into(*t.own, memo, s);
    s += '|';
    for (const auto& k : kids) s += k;
    s += ']';
  }
  memo.emplace(&t, s);
  out += s;
}

uint64_t hash_bytes(const std::string& s, uint64_t seed) {
  uint64_t h = splitmix64(seed);
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
    h ^= h >> 29;
  }
  return splitmix64(h);
}

}  // namespace

TreePtr unfold_tree(const RootedBall& ball, const RandomAssignment& r, uint32_t depth) {
  if (r.size() != ball.graph.node_count())
    throw invalid_argument_error("assignment must index ball-local nodes");
  if (depth > ball.radius + 1)
    throw invalid_argument_error("unfold depth exceeds ball radius + 1");
  return build_levels(ball.graph, r, depth)[ball.root];
}

std::vector<TreePtr> unfold_all(const Graph& g, const RandomAssignment& r, uint32_t depth) {
  return build_levels(g, r, depth);
}

std::string tree_serialize(const TreePtr& t) {
  std::unordered_map<const UnfoldTree*, std::string> memo;
  std::string out;
  serialize_into(*t, memo, out);
  return out;
}

bool tree_equal(const TreePtr& a, const TreePtr& b) { return tree_serialize(a) == tree_serialize(b); }

std::string Digest128::hex() const {
  char buf[33];
  std::snprintf(buf, sizeof(buf), "%016llx%016llx", static_cast<unsigned long long>(hi),
                static_cast<unsigned long long>(lo));
  return std::string(buf);
}

Digest128 tree_digest(const TreePtr& t) {
  std::string s = tree_serialize(t);
  return Digest128{hash_bytes(s, 0x9D1C37ULL), hash_bytes(s, 0xB10B5ULL)};
}

std::vector<Digest128> hash_embed(const Graph& g, const std::vector<std::vector<double>>& features,
                                  const RandomAssignment& r, uint32_t depth) {
  const Graph* gp = &g;
  Graph with_feats;
  if (!features.empty()) {
    with_feats = Graph(g.node_count(), g.edge_list(), features);
    gp = &with_feats;
  }
  std::vector<TreePtr> trees = build_levels(*gp, r, depth);
  std::unordered_map<const UnfoldTree*, std::string> memo;
  std::vector<Digest128> out(trees.size());
  for (size_t v = 0; v < trees.size(); ++v) {
    std::string s;
    serialize_into(*trees[v], memo, s);
    out[v] = Digest128{hash_bytes(s, 0x9D1C37ULL), hash_bytes(s, 0xB10B5ULL)};
  }
  return out;
}

RootedBall reconstruct_from_tree(const TreePtr& t, uint32_t radius) {
  // gather level-1 fragments, deduped by shared pointer
  std::vector<const UnfoldTree*> fragments;
  std::unordered_map<const UnfoldTree*, bool> visited;
  std::vector<const UnfoldTree*> stack{t.get()};
  while (!stack.empty()) {
    const UnfoldTree* cur = stack.back();
    stack.pop_back();
    if (visited.count(cur)) continue;
    visited[cur] = true;
    if (cur->level == 1) fragments.push_back(cur);
    if (cur->own) stack.push_back(cur->own.get());
    for (const auto& c : cur->children) stack.push_back(c.get());
  }

  // value -> (feature, sorted neighbor values)
  struct NodeInfo {
    std::vector<double> feature;
    std::vector<uint32_t> nbr_values;
  };
  std::map<uint32_t, NodeInfo> nodes;
  for (const UnfoldTree* f : fragments) {
    const UnfoldTree* leaf = f->own.get();
    NodeInfo info;
    info.feature = leaf->feature;
    for (const auto& c : f->children) info.nbr_values.push_back(c->value_code);
    std::sort(info.nbr_values.begin(), info.nbr_values.end());
    if (std::adjacent_find(info.nbr_values.begin(), info.nbr_values.end()) !=
        info.nbr_values.end())
      throw local_collision_error("duplicate value among neighbors of value " +
                                  std::to_string(leaf->value_code));
    auto [it, inserted] = nodes.emplace(leaf->value_code, info);
    if (!inserted) {
      if (it->second.feature != info.feature || it->second.nbr_values != info.nbr_values)
        throw local_collision_error("value " + std::to_string(leaf->value_code) +
                                    " identifies two different nodes");
    }
  }

  // root value: leftmost chain down to the level-0 leaf
  const UnfoldTree* cur = t.get();
  while (cur->level > 0) cur = cur->own.get();
  const uint32_t root_value = cur->value_code;
  if (!nodes.count(root_value))
    throw local_collision_error("root value missing from fragments");

  std::vector<uint32_t> values;
  values.reserve(nodes.size());
  for (const auto& [val, info] : nodes) values.push_back(val);
  std::unordered_map<uint32_t, NodeId> local;
  for (size_t i = 0; i < values.size(); ++i) local[values[i]] = static_cast<NodeId>(i);

  std::vector<std::pair<NodeId, NodeId>> edges;
  bool any_feature = false;
  for (const auto& [val, info] : nodes) {
    if (!info.feature.empty()) any_feature = true;
    for (uint32_t q : info.nbr_values) {
      auto it = local.find(q);
      if (it == local.end())
        throw local_collision_error("neighbor value " + std::to_string(q) +
                                    " has no fragment of its own");
      if (local[val] < it->second) edges.emplace_back(local[val], it->second);
    }
  }
  // symmetry check: every directed mention must be mirrored
  for (const auto& [val, info] : nodes) {
    for (uint32_t q : info.nbr_values) {
      const auto& back = nodes.at(q).nbr_values;
      if (!std::binary_search(back.begin(), back.end(), val))
        throw local_collision_error("asymmetric adjacency between values " + std::to_string(val) +
                                    " and " + std::to_string(q));
    }
  }

  std::vector<std::vector<double>> feats;
  if (any_feature) {
    feats.reserve(values.size());
    for (uint32_t val : values) feats.push_back(nodes[val].feature);
  }

  RootedBall ball;
  ball.graph = Graph(static_cast<NodeId>(values.size()), edges, std::move(feats));
  ball.root = local[root_value];
  ball.radius = radius;
  ball.original_ids.resize(values.size());
  for (size_t i = 0; i < values.size(); ++i) ball.original_ids[i] = static_cast<NodeId>(i);
  return ball;
}

RandomAssignment restrict_to_ball(const RandomAssignment& r, const RootedBall& ball) {
  RandomAssignment out;
  out.seed = r.seed;
  out.codes.reserve(ball.original_ids.size());
  for (NodeId orig : ball.original_ids) out.codes.push_back(r.codes[orig]);
  return out;
}

}  // namespace rgnn
