#pragma once

#include <cstddef>
#include <vector>

#include "latentshield/matrix.hpp"
#include "latentshield/rng.hpp"

namespace latentshield {

enum class Activation { ReLU, Sigmoid, Identity, LeakyReLU };

// Fully connected layer: y = act(x * W^T + b), applied row-wise to a
// batch x in input.
struct DenseLayer {
    Matrix weights;            // out x in
    std::vector<double> bias;  // out
    Activation activation = Activation::Identity;

    std::size_t in_dim() const { return weights.cols; }
    std::size_t out_dim() const { return weights.rows; }
};

DenseLayer make_dense(std::size_t in, std::size_t out, Activation act, RngStream& rng);

Matrix layer_forward(const DenseLayer& layer, const Matrix& x);

struct LayerGrads {
    Matrix grad_input;         // batch x in
    Matrix grad_weights;       // out x in
    std::vector<double> grad_bias;  // out
};

// Exact gradients chain-ruled with grad_output. cached_input must be the x
// from the matching forward pass.
LayerGrads layer_backward(const DenseLayer& layer, const Matrix& cached_input,
                          const Matrix& grad_output);

double apply_activation(Activation act, double v);
double activation_derivative(Activation act, double pre);

constexpr double kLeakyReluSlope = 0.01;

}  // namespace latentshield
