#include "latentshield/layers.hpp"

#include <cmath>
#include <stdexcept>

namespace latentshield {

double apply_activation(Activation act, double v) {
    switch (act) {
        case Activation::ReLU: return v > 0.0 ? v : 0.0;
        case Activation::Sigmoid: return 1.0 / (1.0 + std::exp(-v));
        case Activation::Identity: return v;
        case Activation::LeakyReLU: return v > 0.0 ? v : kLeakyReluSlope * v;
    }
    throw std::logic_error("unknown activation");
}

double activation_derivative(Activation act, double pre) {
    switch (act) {
        case Activation::ReLU: return pre > 0.0 ? 1.0 : 0.0;
        case Activation::Sigmoid: {
            const double s = 1.0 / (1.0 + std::exp(-pre));
            return s * (1.0 - s);
        }
        case Activation::Identity: return 1.0;
        case Activation::LeakyReLU: return pre > 0.0 ? 1.0 : kLeakyReluSlope;
    }
    throw std::logic_error("unknown activation");
}

DenseLayer make_dense(std::size_t in, std::size_t out, Activation act, RngStream& rng) {
    DenseLayer layer;
    layer.weights = Matrix(out, in);
    layer.bias.assign(out, 0.0);
    layer.activation = act;
    const bool rectified = act == Activation::ReLU || act == Activation::LeakyReLU;
    const double scale =
        rectified ? std::sqrt(2.0 / static_cast<double>(in)) : std::sqrt(1.0 / static_cast<double>(in));
    std::vector<double> noise = rng.gaussian(out * in);
    for (std::size_t i = 0; i < noise.size(); ++i) layer.weights.data[i] = scale * noise[i];
    return layer;
}

namespace {

// pre = x * W^T + b
Matrix preactivation(const DenseLayer& layer, const Matrix& x) {
    if (x.cols != layer.weights.cols)
        throw std::invalid_argument("layer_forward: input shape " + x.shape_str() +
                                    " does not match weights " + layer.weights.shape_str());
    Matrix pre = matmul_nt(x, layer.weights);
    for (std::size_t i = 0; i < pre.rows; ++i) {
        double* row = pre.row(i);
        for (std::size_t j = 0; j < pre.cols; ++j) row[j] += layer.bias[j];
    }
    return pre;
}

}  // namespace

Matrix layer_forward(const DenseLayer& layer, const Matrix& x) {
    Matrix out = preactivation(layer, x);
    for (double& v : out.data) v = apply_activation(layer.activation, v);
    return out;
}

LayerGrads layer_backward(const DenseLayer& layer, const Matrix& cached_input,
                          const Matrix& grad_output) {
    if (grad_output.cols != layer.weights.rows || grad_output.rows != cached_input.rows)
        throw std::invalid_argument("layer_backward: grad shape " + grad_output.shape_str() +
                                    " does not match layer " + layer.weights.shape_str() +
                                    " with input " + cached_input.shape_str());
    // dL/dpre = grad_output (.) act'(pre); pre recomputed from the cache.
    Matrix dpre = preactivation(layer, cached_input);
    for (std::size_t i = 0; i < dpre.data.size(); ++i)
        dpre.data[i] = grad_output.data[i] * activation_derivative(layer.activation, dpre.data[i]);

    LayerGrads g;
    g.grad_input = matmul(dpre, layer.weights);       // batch x in
    g.grad_weights = matmul_tn(dpre, cached_input);   // out x in
    g.grad_bias.assign(layer.weights.rows, 0.0);
    for (std::size_t i = 0; i < dpre.rows; ++i) {
        const double* row = dpre.row(i);
        for (std::size_t j = 0; j < dpre.cols; ++j) g.grad_bias[j] += row[j];
    }
    return g;
}

}  // namespace latentshield
