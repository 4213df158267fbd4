#include "core/tensor.hpp"

#include <cmath>

#include "core/error.hpp"

namespace rgnn {

Tape::Id Tape::push(Mat value, bool requires_grad, std::function<void(Tape&, Node&)> back) {
  Node n;
  n.value = std::move(value);
  n.requires_grad = requires_grad;
  n.back = std::move(back);
  nodes_.push_back(std::move(n));
  return static_cast<Id>(nodes_.size()) - 1;
}

Tape::Id Tape::input(Mat value, bool requires_grad) {
  return push(std::move(value), requires_grad, nullptr);
}

namespace {
void accumulate(Tape::Id, Mat&, const Mat&);
}

// Adds `delta` into the grad buffer of node `id` if it participates in the
// backward pass.
#define RGNN_ACCUM(tape, node_id, delta)                        \
  do {                                                          \
    auto& tgt = (tape).grad_ref(node_id);                       \
    if ((tape).requires_grad(node_id)) {                        \
      if (tgt.size() == 0)                                      \
        tgt = (delta);                                          \
      else                                                      \
        tgt += (delta);                                         \
    }                                                           \
  } while (0)

Tape::Id Tape::matmul(Id a, Id b) {
  Mat v = nodes_[a].value * nodes_[b].value;
  bool rg = nodes_[a].requires_grad || nodes_[b].requires_grad;
  return push(std::move(v), rg, [a, b](Tape& t, Node& self) {
    if (t.nodes_[a].requires_grad) {
      Mat d = self.grad * t.nodes_[b].value.transpose();
      auto& g = t.nodes_[a].grad;
      g.size() == 0 ? g = std::move(d) : g += d;
    }
    if (t.nodes_[b].requires_grad) {
      Mat d = t.nodes_[a].value.transpose() * self.grad;
      auto& g = t.nodes_[b].grad;
      g.size() == 0 ? g = std::move(d) : g += d;
    }
  });
}

Tape::Id Tape::add_row_vector(Id a, Id bias) {
  Mat v = nodes_[a].value.rowwise() + nodes_[bias].value.row(0);
  bool rg = nodes_[a].requires_grad || nodes_[bias].requires_grad;
  return push(std::move(v), rg, [a, bias](Tape& t, Node& self) {
    if (t.nodes_[a].requires_grad) {
      auto& g = t.nodes_[a].grad;
      g.size() == 0 ? g = self.grad : g += self.grad;
    }
    if (t.nodes_[bias].requires_grad) {
      Mat d = self.grad.colwise().sum();
      auto& g = t.nodes_[bias].grad;
      g.size() == 0 ? g = std::move(d) : g += d;
    }
  });
}

Tape::Id Tape::add(Id a, Id b) {
  Mat v = nodes_[a].value + nodes_[b].value;
  bool rg = nodes_[a].requires_grad || nodes_[b].requires_grad;
  return push(std::move(v), rg, [a, b](Tape& t, Node& self) {
    for (Id id : {a, b}) {
      if (!t.nodes_[id].requires_grad) continue;
      auto& g = t.nodes_[id].grad;
      g.size() == 0 ? g = self.grad : g += self.grad;
    }
  });
}

Tape::Id Tape::relu(Id a) {
  Mat v = nodes_[a].value.cwiseMax(0.0);
  return push(std::move(v), nodes_[a].requires_grad, [a](Tape& t, Node& self) {
    if (!t.nodes_[a].requires_grad) return;
    Mat d = (t.nodes_[a].value.array() > 0.0).cast<double>() * self.grad.array();
    auto& g = t.nodes_[a].grad;
    g.size() == 0 ? g = std::move(d) : g += d;
  });
}

Tape::Id Tape::sigmoid(Id a) {
  Mat v = (1.0 / (1.0 + (-nodes_[a].value.array()).exp())).matrix();
  return push(std::move(v), nodes_[a].requires_grad, [a](Tape& t, Node& self) {
    if (!t.nodes_[a].requires_grad) return;
    Mat d = (self.value.array() * (1.0 - self.value.array()) * self.grad.array()).matrix();
    auto& g = t.nodes_[a].grad;
    g.size() == 0 ? g = std::move(d) : g += d;
  });
}

Tape::Id Tape::aggregate(Id a, const Graph& g, Aggregation agg, double eps) {
  const Mat& z = nodes_[a].value;
  Mat v = (1.0 + eps) * z;
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const auto& nb = g.neighbors(i);
    if (nb.empty()) continue;
    const double w = agg == Aggregation::sum ? 1.0 : 1.0 / static_cast<double>(nb.size());
    for (NodeId u : nb) v.row(i) += w * z.row(u);
  }
  return push(std::move(v), nodes_[a].requires_grad, [a, &g, agg, eps](Tape& t, Node& self) {
    if (!t.nodes_[a].requires_grad) return;
    Mat d = (1.0 + eps) * self.grad;
    for (NodeId i = 0; i < g.node_count(); ++i) {
      const auto& nb = g.neighbors(i);
      if (nb.empty()) continue;
      const double w = agg == Aggregation::sum ? 1.0 : 1.0 / static_cast<double>(nb.size());
      // out(i) depends on z(u): dz(u) += w * g(i)
      for (NodeId u : nb) d.row(u) += w * self.grad.row(i);
    }
    auto& gr = t.nodes_[a].grad;
    gr.size() == 0 ? gr = std::move(d) : gr += d;
  });
}

Tape::Id Tape::batch_norm(Id a, Id gamma, Id beta, double eps_bn) {
  const Mat& x = nodes_[a].value;
  const auto n = static_cast<double>(x.rows());
  Eigen::RowVectorXd mu = x.colwise().mean();
  Mat centered = x.rowwise() - mu;
  Eigen::RowVectorXd var = centered.array().square().colwise().sum() / n;
  Eigen::RowVectorXd inv_std = (var.array() + eps_bn).sqrt().inverse();
  Mat xhat = centered.array().rowwise() * inv_std.array();
  Mat v = (xhat.array().rowwise() * nodes_[gamma].value.row(0).array()).rowwise() +
          nodes_[beta].value.row(0).array();
  bool rg = nodes_[a].requires_grad || nodes_[gamma].requires_grad || nodes_[beta].requires_grad;
  return push(std::move(v), rg,
              [a, gamma, beta, xhat = std::move(xhat), inv_std = std::move(inv_std),
               n](Tape& t, Node& self) {
                const Mat& g = self.grad;
                if (t.nodes_[gamma].requires_grad) {
                  Mat d = (g.array() * xhat.array()).colwise().sum().matrix();
                  auto& gr = t.nodes_[gamma].grad;
                  gr.size() == 0 ? gr = std::move(d) : gr += d;
                }
                if (t.nodes_[beta].requires_grad) {
                  Mat d = g.colwise().sum();
                  auto& gr = t.nodes_[beta].grad;
                  gr.size() == 0 ? gr = std::move(d) : gr += d;
                }
                if (t.nodes_[a].requires_grad) {
                  Eigen::RowVectorXd mean_g = g.colwise().mean();
                  Eigen::RowVectorXd mean_gx =
                      (g.array() * xhat.array()).colwise().sum().matrix() / n;
                  Mat d = g;
                  d.array().rowwise() -= mean_g.array();
                  d.array() -= xhat.array().rowwise() * mean_gx.array();
                  d.array().rowwise() *=
                      (t.nodes_[gamma].value.row(0).array() * inv_std.array());
                  auto& gr = t.nodes_[a].grad;
                  gr.size() == 0 ? gr = std::move(d) : gr += d;
                }
              });
}

Tape::Id Tape::dropout_mask(Id a, const Mat& mask) {
  Mat v = nodes_[a].value.array() * mask.array();
  return push(std::move(v), nodes_[a].requires_grad, [a, mask](Tape& t, Node& self) {
    if (!t.nodes_[a].requires_grad) return;
    Mat d = self.grad.array() * mask.array();
    auto& g = t.nodes_[a].grad;
    g.size() == 0 ? g = std::move(d) : g += d;
  });
}

Tape::Id Tape::bce_with_logits_sum(Id logits, const std::vector<double>& labels) {
  const Mat& z = nodes_[logits].value;
  if (z.cols() != 1 || static_cast<size_t>(z.rows()) != labels.size())
    throw invalid_argument_error("bce: logits must be n x 1 matching labels");
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    double zi = z(i, 0);
    loss += std::max(zi, 0.0) + std::log1p(std::exp(-std::fabs(zi))) - labels[i] * zi;
  }
  Mat v(1, 1);
  v(0, 0) = loss;
  return push(std::move(v), nodes_[logits].requires_grad,
              [logits, labels](Tape& t, Node& self) {
                if (!t.nodes_[logits].requires_grad) return;
                const Mat& z = t.nodes_[logits].value;
                Mat d(z.rows(), 1);
                for (Eigen::Index i = 0; i < z.rows(); ++i) {
                  double s = 1.0 / (1.0 + std::exp(-z(i, 0)));
                  d(i, 0) = (s - labels[i]) * self.grad(0, 0);
                }
                auto& g = t.nodes_[logits].grad;
                g.size() == 0 ? g = std::move(d) : g += d;
              });
}

Tape::Id Tape::softmax_ce_sum(Id logits, const std::vector<int32_t>& labels) {
  const Mat& z = nodes_[logits].value;
  if (static_cast<size_t>(z.rows()) != labels.size())
    throw invalid_argument_error("softmax ce: rows must match labels");
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    double m = z.row(i).maxCoeff();
    double lse = std::log((z.row(i).array() - m).exp().sum()) + m;
    loss += lse - z(i, labels[i]);
  }
  Mat v(1, 1);
  v(0, 0) = loss;
  return push(std::move(v), nodes_[logits].requires_grad,
              [logits, labels](Tape& t, Node& self) {
                if (!t.nodes_[logits].requires_grad) return;
                const Mat& z = t.nodes_[logits].value;
                Mat d(z.rows(), z.cols());
                for (Eigen::Index i = 0; i < z.rows(); ++i) {
                  double m = z.row(i).maxCoeff();
                  Eigen::RowVectorXd e = (z.row(i).array() - m).exp();
                  Eigen::RowVectorXd p = e / e.sum();
                  d.row(i) = p;
                  d(i, labels[i]) -= 1.0;
                }
                d *= self.grad(0, 0);
                auto& g = t.nodes_[logits].grad;
                g.size() == 0 ? g = std::move(d) : g += d;
              });
}

void Tape::backward(Id loss) {
  Node& top = nodes_[loss];
  if (top.value.rows() != 1 || top.value.cols() != 1)
    throw invalid_argument_error("backward expects a scalar loss node");
  top.grad = Mat::Ones(1, 1);
  for (Id id = loss; id >= 0; --id) {
    Node& n = nodes_[id];
    if (!n.requires_grad || n.grad.size() == 0 || !n.back) continue;
    n.back(*this, n);
  }
}

}  // namespace rgnn
