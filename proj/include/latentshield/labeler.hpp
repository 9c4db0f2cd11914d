#pragma once

#include <cstddef>
#include <vector>

#include "latentshield/net.hpp"

namespace latentshield {

// Latent-space label-transfer classifier: k -> 128 ReLU -> num_classes with
// softmax readout. Trained on (z, label) pairs from the source data, then
// used to label privatized codes.
struct LatentClassifier {
    Mlp net;
    std::size_t k = 0;
    std::size_t num_classes = 0;
};

struct LabelerHyper {
    std::size_t epochs = 30;
    std::size_t batch_size = 64;
    double learning_rate = 1e-3;
    std::size_t hidden = 128;
};

// Z: N x k latent codes, labels in [0, num_classes). Deterministic given rng.
LatentClassifier train_latent_classifier(const Matrix& Z, const std::vector<int>& labels,
                                         std::size_t num_classes, const LabelerHyper& hyper,
                                         RngStream& rng);

// Softmax argmax per code; ties break toward the lowest class index.
std::vector<int> transfer_labels(const LatentClassifier& mc, const Matrix& Zprime);

// Class-probability rows (sum to 1) for diagnostics.
Matrix label_probabilities(const LatentClassifier& mc, const Matrix& Z);

}  // namespace latentshield
