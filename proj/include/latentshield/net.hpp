#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "latentshield/layers.hpp"
#include "latentshield/matrix.hpp"
#include "latentshield/optimizer.hpp"
#include "latentshield/rng.hpp"

namespace latentshield {

// Plain feed-forward stack. Classifiers put Identity on the last layer and
// apply softmax on the logits.
struct Mlp {
    std::vector<DenseLayer> layers;

    std::size_t in_dim() const { return layers.front().in_dim(); }
    std::size_t out_dim() const { return layers.back().out_dim(); }
};

Mlp make_mlp(const std::vector<std::size_t>& dims, const std::vector<Activation>& acts,
             RngStream& rng);

Matrix mlp_forward(const Mlp& net, const Matrix& x);

// Row-wise softmax with max subtraction; rows sum to 1.
Matrix softmax_rows(const Matrix& logits);

// Mean cross-entropy of softmax(logits) against integer labels.
double cross_entropy(const Matrix& probs, const std::vector<int>& labels);

struct ClassifierHyper {
    std::size_t epochs = 30;
    std::size_t batch_size = 64;
    double learning_rate = 1e-3;
    OptimizerKind optimizer = OptimizerKind::Adam;
};

// In-place softmax + cross-entropy training loop. Deterministic given rng.
// Labels must lie in [0, out_dim). Throws on divergence (non-finite loss).
void train_softmax_classifier(Mlp& net, const Matrix& X, const std::vector<int>& labels,
                              const ClassifierHyper& hyper, RngStream& rng);

// argmax of softmax per row; ties break toward the lowest class index.
std::vector<int> predict_classes(const Mlp& net, const Matrix& X);

double classification_accuracy(const Mlp& net, const Matrix& X, const std::vector<int>& labels);

// Parameter access in a stable order (weights, bias per layer); used by
// optimizers and checkpointing.
std::vector<std::span<double>> mlp_param_spans(Mlp& net);

}  // namespace latentshield
