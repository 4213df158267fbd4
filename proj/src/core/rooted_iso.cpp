#include "core/rooted_iso.hpp"

#include <algorithm>
#include <cstring>

#include "core/error.hpp"

namespace rgnn {
namespace {

std::string feature_bytes(const Graph& g, NodeId v) {
  std::string out;
  if (!g.has_features()) return out;
  const auto& f = g.feature(v);
  out.resize(f.size() * sizeof(double));
  std::memcpy(out.data(), f.data(), out.size());
  return out;
}

bool features_equal(const Graph& a, NodeId u, const Graph& b, NodeId v) {
  if (a.has_features() != b.has_features()) return false;
  if (!a.has_features()) return true;
  return a.feature(u) == b.feature(v);
}

// BFS order from the root keeps partial mappings connected, which makes the
// adjacency-consistency prune bite early.
std::vector<NodeId> bfs_order(const Graph& g, NodeId root) {
  std::vector<uint32_t> d(g.node_count(), UINT32_MAX);
  d[root] = 0;
  std::vector<NodeId> q{root};
  for (size_t h = 0; h < q.size(); ++h)
    for (NodeId w : g.neighbors(q[h]))
      if (d[w] == UINT32_MAX) {
        d[w] = d[q[h]] + 1;
        q.push_back(w);
      }
  std::vector<NodeId> order = g.ball_nodes(root, g.node_count());
  std::sort(order.begin(), order.end(),
            [&](NodeId x, NodeId y) { return std::make_pair(d[x], x) < std::make_pair(d[y], y); });
  return order;
}

struct IsoSearch {
  const Graph& ga;
  const Graph& gb;
  std::vector<NodeId> order;           // nodes of a in assignment order
  std::vector<NodeId> map_ab;          // a-node -> b-node or UINT32_MAX
  std::vector<bool> used_b;

  bool extend(size_t k) {
    if (k == order.size()) return true;
    NodeId u = order[k];
    for (NodeId w = 0; w < gb.node_count(); ++w) {
      if (used_b[w]) continue;
      if (ga.degree(u) != gb.degree(w)) continue;
      if (!features_equal(ga, u, gb, w)) continue;
      bool ok = true;
      for (NodeId x : ga.neighbors(u)) {
        if (map_ab[x] != UINT32_MAX && !gb.has_edge(w, map_ab[x])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        // reverse direction: every mapped b-neighbor of w must come from an a-neighbor of u
        for (NodeId y : gb.neighbors(w)) {
          for (NodeId x = 0; x < ga.node_count(); ++x) {
            if (map_ab[x] == y && !ga.has_edge(u, x)) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
      }
      if (!ok) continue;
      map_ab[u] = w;
      used_b[w] = true;
      if (extend(k + 1)) return true;
      map_ab[u] = UINT32_MAX;
      used_b[w] = false;
    }
    return false;
  }
};

}  // namespace

bool rooted_isomorphic(const RootedBall& a, const RootedBall& b) {
  const Graph& ga = a.graph;
  const Graph& gb = b.graph;
  if (ga.node_count() > kIsoExhaustiveLimit || gb.node_count() > kIsoExhaustiveLimit)
    throw size_limit_error("rooted_isomorphic limited to " +
                           std::to_string(kIsoExhaustiveLimit) + " nodes");
  if (ga.node_count() != gb.node_count() || ga.edge_count() != gb.edge_count()) return false;
  if (ga.degree(a.root) != gb.degree(b.root)) return false;
  if (!features_equal(ga, a.root, gb, b.root)) return false;

  std::vector<NodeId> da, db;
  for (NodeId v = 0; v < ga.node_count(); ++v) da.push_back(ga.degree(v));
  for (NodeId v = 0; v < gb.node_count(); ++v) db.push_back(gb.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  IsoSearch s{ga, gb, bfs_order(ga, a.root),
              std::vector<NodeId>(ga.node_count(), UINT32_MAX),
              std::vector<bool>(gb.node_count(), false)};
  s.map_ab[a.root] = b.root;
  s.used_b[b.root] = true;
  if (s.order.empty() || s.order[0] != a.root)
    throw invalid_argument_error("ball root unreachable in own graph");
  return s.extend(1);
}

namespace {

struct CertSearch {
  const Graph& g;
  std::vector<std::string> feat;       // per-node feature bytes, length-prefixed
  std::vector<NodeId> placed;          // position -> node
  std::vector<bool> used;
  std::string current;
  std::string best;
  bool have_best = false;
  uint64_t steps = 0;

  // Appends the certificate chunk for placing `v` at position `placed.size()`.
  std::string chunk(NodeId v) const {
    std::string c = feat[v];
    c.reserve(c.size() + placed.size());
    for (NodeId p : placed) c.push_back(g.has_edge(v, p) ? '1' : '0');
    return c;
  }

  void search() {
    if (++steps > 20'000'000)
      throw size_limit_error("canonical_certificate search exceeded step cap");
    if (placed.size() == g.node_count()) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (used[v]) continue;
      std::string c = chunk(v);
      size_t pos = current.size();
      current += c;
      // prune when the incumbent is already smaller on this prefix
      if (have_best && best.compare(0, current.size(), current) < 0) {
        current.resize(pos);
        continue;
      }
      placed.push_back(v);
      used[v] = true;
      search();
      used[v] = false;
      placed.pop_back();
      current.resize(pos);
    }
  }
};

}  // namespace

std::string canonical_certificate(const RootedBall& ball) {
  const Graph& g = ball.graph;
  if (g.node_count() > kIsoExhaustiveLimit)
    throw size_limit_error("canonical_certificate limited to " +
                           std::to_string(kIsoExhaustiveLimit) + " nodes");
  CertSearch s{g, {}, {}, std::vector<bool>(g.node_count(), false), "", "", false, 0};
  s.feat.resize(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    std::string fb = feature_bytes(g, v);
    s.feat[v] = std::to_string(fb.size()) + ":" + fb + ";";
  }
  // root is pinned to position 0
  s.current = s.chunk(ball.root);
  s.placed.push_back(ball.root);
  s.used[ball.root] = true;
  s.search();
  return std::to_string(g.node_count()) + "#" + s.best;
}

}  // namespace rgnn
