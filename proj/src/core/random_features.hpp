#pragma once

#include <cstdint>
#include <vector>

#include "core/graph.hpp"

namespace rgnn {

// Discrete distribution over a finite support. Values are compared by code
// (index into the support); the real `value(code)` is only what gets fed to
// the network and printed.
class Distribution {
 public:
  Distribution(std::vector<double> values, std::vector<double> masses);

  uint32_t support_size() const { return static_cast<uint32_t>(values_.size()); }
  double value(uint32_t code) const { return values_[code]; }
  double mass(uint32_t code) const { return masses_[code]; }
  double p_bound() const { return p_bound_; }

  uint32_t sample_code(class Rng& rng) const;

 private:
  std::vector<double> values_;
  std::vector<double> masses_;
  std::vector<double> cdf_;
  double p_bound_ = 1.0;
  bool uniform_ = false;
};

// Unif({0, 1/k, 2/k, ..., (k-1)/k}); property U(1/k).
Distribution uniform_support(uint32_t k);

// One value code per node, drawn i.i.d.
struct RandomAssignment {
  std::vector<uint32_t> codes;
  uint64_t seed = 0;

  uint32_t operator[](NodeId v) const { return codes[v]; }
  size_t size() const { return codes.size(); }
};

RandomAssignment assign(const Graph& g, const Distribution& dist, uint64_t seed);

// Total order used everywhere ties must break deterministically:
// primary key value code, secondary key node index.
inline bool value_less(const RandomAssignment& r, NodeId u, NodeId v) {
  return r.codes[u] != r.codes[v] ? r.codes[u] < r.codes[v] : u < v;
}

// True iff two distinct nodes of N_L(v) share a value.
bool has_local_collision(const Graph& g, const RandomAssignment& r, NodeId v, uint32_t radius);

// True iff some other node of N_L(v) shares v's own value (the greedy MDS
// step-2 predicate; weaker than has_local_collision).
bool value_collides_with_center(const Graph& g, const RandomAssignment& r, NodeId v,
                                uint32_t radius);

}  // namespace rgnn
