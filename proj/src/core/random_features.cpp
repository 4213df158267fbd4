#include "core/random_features.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace rgnn {

Distribution::Distribution(std::vector<double> values, std::vector<double> masses)
    : values_(std::move(values)), masses_(std::move(masses)) {
  if (values_.empty() || values_.size() != masses_.size())
    throw invalid_argument_error("distribution needs matching non-empty values/masses");
  double sum = 0.0;
  p_bound_ = 0.0;
  cdf_.reserve(masses_.size());
  for (double m : masses_) {
    if (m < 0.0) throw invalid_argument_error("negative probability mass");
    sum += m;
    p_bound_ = std::max(p_bound_, m);
    cdf_.push_back(sum);
  }
  if (std::fabs(sum - 1.0) > 1e-12) throw invalid_argument_error("masses must sum to 1");
  cdf_.back() = 1.0;
  uniform_ = true;
  for (double m : masses_)
    if (std::fabs(m - masses_[0]) > 1e-15) {
      uniform_ = false;
      break;
    }
}

uint32_t Distribution::sample_code(Rng& rng) const {
  const uint32_t k = support_size();
  if (k == 1) return 0;
  if (uniform_) return rng.next_below(k);  // exact, no float rounding at the bucket edges
  double u = rng.next_double();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return static_cast<uint32_t>(it - cdf_.begin());
}

Distribution uniform_support(uint32_t k) {
  if (k < 1) throw invalid_argument_error("support size must be >= 1");
  std::vector<double> values(k), masses(k, 1.0 / k);
  for (uint32_t i = 0; i < k; ++i) values[i] = static_cast<double>(i) / k;
  return Distribution(std::move(values), std::move(masses));
}

RandomAssignment assign(const Graph& g, const Distribution& dist, uint64_t seed) {
  Rng rng(seed);
  RandomAssignment r;
  r.seed = seed;
  r.codes.resize(g.node_count());
  for (auto& c : r.codes) c = dist.sample_code(rng);
  return r;
}

bool has_local_collision(const Graph& g, const RandomAssignment& r, NodeId v, uint32_t radius) {
  std::vector<NodeId> ball = g.ball_nodes(v, radius);
  std::vector<uint32_t> seen;
  seen.reserve(ball.size());
  for (NodeId u : ball) seen.push_back(r.codes[u]);
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) != seen.end();
}

bool value_collides_with_center(const Graph& g, const RandomAssignment& r, NodeId v,
                                uint32_t radius) {
  for (NodeId u : g.ball_nodes(v, radius))
    if (u != v && r.codes[u] == r.codes[v]) return true;
  return false;
}

}  // namespace rgnn
