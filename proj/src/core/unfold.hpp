#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "core/graph.hpp"
#include "core/random_features.hpp"

namespace rgnn {

// Level-l unfolding tree: a level-0 tree is the (feature, value) leaf of a
// node; a level-l tree pairs the node's own level-(l-1) tree with the
// multiset of its neighbors' level-(l-1) trees. Subtrees are shared, so a
// full set of depth-L trees costs O(n * L) nodes.
struct UnfoldTree {
  uint32_t level = 0;
  std::vector<double> feature;  // leaf payload (level 0)
  uint32_t value_code = 0;      // leaf payload (level 0)
  std::shared_ptr<const UnfoldTree> own;  // null at level 0
  std::vector<std::shared_ptr<const UnfoldTree>> children;
};

using TreePtr = std::shared_ptr<const UnfoldTree>;

// Tree of `root` in the ball's induced graph; `r` indexes ball-local nodes.
// Requires depth <= ball.radius + 1 (deeper trees would need edges the ball
// does not carry).
TreePtr unfold_tree(const RootedBall& ball, const RandomAssignment& r, uint32_t depth);

// Depth-L trees for every node of the full graph (the object an idealized
// GIN encodes).
std::vector<TreePtr> unfold_all(const Graph& g, const RandomAssignment& r, uint32_t depth);

// Canonical byte serialization: children serialized, sorted, concatenated.
// Equal trees (multisets compared order-insensitively) iff equal strings.
std::string tree_serialize(const TreePtr& t);
bool tree_equal(const TreePtr& a, const TreePtr& b);

struct Digest128 {
  uint64_t hi = 0;
  uint64_t lo = 0;
  bool operator==(const Digest128&) const = default;
  std::string hex() const;
};

Digest128 tree_digest(const TreePtr& t);

// Per-node 128-bit digests of the depth-L trees. `features` overrides the
// graph's own feature matrix when non-empty.
std::vector<Digest128> hash_embed(const Graph& g, const std::vector<std::vector<double>>& features,
                                  const RandomAssignment& r, uint32_t depth);

// Inverse of unfold_tree on a radius-L ball (tree depth L+1), valid when the
// values in the ball are pairwise distinct. Node identity is recovered from
// values, adjacency from the level-1 fragments. Detectable collisions
// (one value carrying conflicting features or neighbor multisets) raise
// local_collision errors.
RootedBall reconstruct_from_tree(const TreePtr& t, uint32_t radius);

// Restriction of a whole-graph assignment to ball-local indices.
RandomAssignment restrict_to_ball(const RandomAssignment& r, const RootedBall& ball);

}  // namespace rgnn
