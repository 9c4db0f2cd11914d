#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "latentshield/layers.hpp"
#include "latentshield/matrix.hpp"
#include "latentshield/optimizer.hpp"
#include "latentshield/rng.hpp"

namespace latentshield {

// MLP VAE: shared ReLU trunk, parallel mu / log-variance heads, two-layer
// decoder ending in a sigmoid so reconstructions stay in [0,1].
struct VaeModel {
    DenseLayer encoder_trunk;  // input_dim -> hidden, ReLU
    DenseLayer mu_head;        // hidden -> k, Identity
    DenseLayer logvar_head;    // hidden -> k, Identity
    DenseLayer decoder_hidden; // k -> hidden, ReLU
    DenseLayer decoder_out;    // hidden -> input_dim, Sigmoid
    std::size_t input_dim = 0;
    std::size_t k = 0;
};

struct VaeHyper {
    std::size_t k = 20;
    std::size_t epochs = 20;
    std::size_t batch_size = 128;
    double learning_rate = 1e-3;
    OptimizerKind optimizer = OptimizerKind::Adam;
    std::size_t hidden = 400;
};

VaeModel make_vae(std::size_t input_dim, std::size_t k, std::size_t hidden, RngStream& rng);

// Per-sample latent statistics. sigma = exp(logvar / 2) is strictly positive.
struct LatentEncoding {
    std::vector<double> mu;
    std::vector<double> sigma;
    std::vector<double> z;
};

std::pair<std::vector<double>, std::vector<double>> encode(const VaeModel& model,
                                                           const std::vector<double>& x);
// Batch variant: returns (Mu, Sigma), each batch x k.
std::pair<Matrix, Matrix> encode_batch(const VaeModel& model, const Matrix& x);

std::vector<double> reparameterize(const std::vector<double>& mu,
                                   const std::vector<double>& sigma, RngStream& rng);

std::vector<double> decode(const VaeModel& model, const std::vector<double>& z);
Matrix decode_batch(const VaeModel& model, const Matrix& z);

struct VaeLoss {
    double total = 0.0;
    double recon = 0.0;  // Bernoulli negative log-likelihood, summed over pixels
    double kl = 0.0;     // closed-form KL(q || N(0,I))
};

// Batch mean of the per-sample losses. xhat entries are clipped to
// [1e-7, 1-1e-7] before the logs.
VaeLoss vae_loss(const Matrix& x, const Matrix& xhat, const Matrix& mu, const Matrix& sigma);

// Full forward/backward with the reparameterization noise eta (batch x k)
// held fixed, for the training loop and gradient checks. Gradients are of the
// batch-mean total loss.
struct VaeGrads {
    LayerGrads trunk, mu_head, logvar_head, decoder_hidden, decoder_out;
    VaeLoss loss;
};
VaeGrads vae_backward(const VaeModel& model, const Matrix& x, const Matrix& eta);

// Trains on images (rows in [0,1]); deterministic given rng. Throws
// std::runtime_error if the loss diverges.
VaeModel train_vae(const Matrix& images, const VaeHyper& hyper, RngStream& rng);

// Mean total loss over a dataset with z = mu (no sampling noise); used for
// train/held-out loss tracking.
double vae_dataset_loss(const VaeModel& model, const Matrix& images);

std::vector<std::span<double>> vae_param_spans(VaeModel& model);

}  // namespace latentshield
