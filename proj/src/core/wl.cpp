#include "core/wl.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <unordered_set>

#include "core/rng.hpp"

namespace rgnn {

namespace {

uint64_t combine(uint64_t h, uint64_t x) { return splitmix64(h ^ (x + 0x9E3779B97F4A7C15ULL)); }

// Partition equality: same equivalence classes regardless of color values.
bool same_partition(const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
  std::map<uint64_t, uint64_t> ab, ba;
  for (size_t i = 0; i < a.size(); ++i) {
    auto ita = ab.find(a[i]);
    if (ita == ab.end())
      ab[a[i]] = b[i];
    else if (ita->second != b[i])
      return false;
    auto itb = ba.find(b[i]);
    if (itb == ba.end())
      ba[b[i]] = a[i];
    else if (itb->second != a[i])
      return false;
  }
  return true;
}

}  // namespace

ColorMap uniform_colors(const Graph& g) {
  ColorMap cm;
  cm.colors.assign(g.node_count(), 0);
  return cm;
}

ColorMap feature_colors(const Graph& g) {
  ColorMap cm;
  cm.colors.resize(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    uint64_t h = 0x5EED;
    if (g.has_features()) {
      for (double x : g.feature(v)) {
        uint64_t bits;
        std::memcpy(&bits, &x, sizeof(bits));
        h = combine(h, bits);
      }
    } else {
      h = combine(h, g.degree(v));
    }
    cm.colors[v] = h;
  }
  return cm;
}

ColorMap wl_refine(const Graph& g, const ColorMap& init, uint32_t max_rounds) {
  ColorMap cur = init;
  cur.stable = false;
  const uint32_t limit = max_rounds == 0 ? g.node_count() + 1 : max_rounds;
  for (uint32_t round = 0; round < limit; ++round) {
    std::vector<uint64_t> next(g.node_count());
    for (NodeId v = 0; v < g.node_count(); ++v) {
      std::vector<uint64_t> nb;
      nb.reserve(g.degree(v));
      for (NodeId u : g.neighbors(v)) nb.push_back(cur.colors[u]);
      std::sort(nb.begin(), nb.end());
      uint64_t h = combine(0xC01035, cur.colors[v]);
      for (uint64_t c : nb) h = combine(h, c);
      next[v] = h;
    }
    if (same_partition(cur.colors, next)) {
      cur.stable = true;
      break;
    }
    cur.colors = std::move(next);
    cur.round = round + 1;
  }
  return cur;
}

size_t color_class_count(const ColorMap& cm) {
  std::unordered_set<uint64_t> s(cm.colors.begin(), cm.colors.end());
  return s.size();
}

}  // namespace rgnn
