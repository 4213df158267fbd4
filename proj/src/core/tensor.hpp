#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

#include "core/graph.hpp"

namespace rgnn {

using Mat = Eigen::MatrixXd;

enum class Aggregation { sum, mean };

// Minimal reverse-mode tape over dense matrices. Rows are nodes, columns are
// features. One tape per forward pass; backward() accumulates into
// grad(id) for every node that requires grad.
class Tape {
 public:
  using Id = int;

  Id input(Mat value, bool requires_grad = false);

  Id matmul(Id a, Id b);                    // (n x d) * (d x h)
  Id add_row_vector(Id a, Id bias);         // bias is 1 x h
  Id add(Id a, Id b);
  Id relu(Id a);
  Id sigmoid(Id a);

  // z_v * (1 + eps) + sum or mean over neighbors.
  Id aggregate(Id a, const Graph& g, Aggregation agg, double eps);

  // Column-wise batch normalization with batch statistics (also at eval);
  // gamma/beta are 1 x h.
  Id batch_norm(Id a, Id gamma, Id beta, double eps_bn = 1e-5);

  // Multiplies rows by a fixed 0/1 mask scaled by 1/keep (inverted dropout).
  Id dropout_mask(Id a, const Mat& mask);

  // Sum over nodes of binary cross entropy on logits (column 0).
  Id bce_with_logits_sum(Id logits, const std::vector<double>& labels);

  // Sum over nodes of multi-class cross entropy on logits.
  Id softmax_ce_sum(Id logits, const std::vector<int32_t>& labels);

  const Mat& value(Id id) const { return nodes_[id].value; }
  const Mat& grad(Id id) const { return nodes_[id].grad; }

  // Seeds d(loss)/d(loss) = 1 and walks the tape backwards. `loss` must be
  // a 1x1 node.
  void backward(Id loss);

 private:
  struct Node {
    Mat value;
    Mat grad;
    bool requires_grad = false;
    std::function<void(Tape&, Node&)> back;
  };

  Id push(Mat value, bool requires_grad, std::function<void(Tape&, Node&)> back);
  Node& at(Id id) { return nodes_[id]; }

  std::vector<Node> nodes_;
};

}  // namespace rgnn
