#pragma once

#include <string>

#include "core/graph.hpp"

namespace rgnn {

// Exhaustive root-preserving isomorphism test (edges and node features).
// Backtracking search with degree/feature/adjacency pruning; throws
// size_limit above kIsoExhaustiveLimit nodes.
inline constexpr NodeId kIsoExhaustiveLimit = 16;

bool rooted_isomorphic(const RootedBall& a, const RootedBall& b);

// Canonical byte string of a rooted ball: equal strings iff rooted-isomorphic.
// Branch-and-bound over root-fixed orderings, minimizing the concatenation of
// per-node (feature bytes, adjacency bits to earlier nodes). Same node limit
// as rooted_isomorphic.
std::string canonical_certificate(const RootedBall& ball);

}  // namespace rgnn
