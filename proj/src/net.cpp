#include "latentshield/net.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace latentshield {

Mlp make_mlp(const std::vector<std::size_t>& dims, const std::vector<Activation>& acts,
             RngStream& rng) {
    if (dims.size() < 2 || acts.size() != dims.size() - 1)
        throw std::invalid_argument("make_mlp: need n dims and n-1 activations");
    Mlp net;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i)
        net.layers.push_back(make_dense(dims[i], dims[i + 1], acts[i], rng));
    return net;
}

Matrix mlp_forward(const Mlp& net, const Matrix& x) {
    Matrix h = x;
    for (const DenseLayer& layer : net.layers) h = layer_forward(layer, h);
    return h;
}

Matrix softmax_rows(const Matrix& logits) {
    Matrix probs(logits.rows, logits.cols);
    for (std::size_t i = 0; i < logits.rows; ++i) {
        const double* in = logits.row(i);
        double* out = probs.row(i);
        double mx = in[0];
        for (std::size_t j = 1; j < logits.cols; ++j) mx = std::max(mx, in[j]);
        double sum = 0.0;
        for (std::size_t j = 0; j < logits.cols; ++j) {
            out[j] = std::exp(in[j] - mx);
            sum += out[j];
        }
        for (std::size_t j = 0; j < logits.cols; ++j) out[j] /= sum;
    }
    return probs;
}

double cross_entropy(const Matrix& probs, const std::vector<int>& labels) {
    if (probs.rows != labels.size())
        throw std::invalid_argument("cross_entropy: row/label count mismatch");
    double loss = 0.0;
    for (std::size_t i = 0; i < probs.rows; ++i) {
        const double p = std::max(probs(i, static_cast<std::size_t>(labels[i])), 1e-300);
        loss -= std::log(p);
    }
    return loss / static_cast<double>(probs.rows);
}

namespace {

void check_labels(const std::vector<int>& labels, std::size_t num_classes) {
    for (int l : labels)
        if (l < 0 || static_cast<std::size_t>(l) >= num_classes)
            throw std::invalid_argument("label " + std::to_string(l) + " outside [0, " +
                                        std::to_string(num_classes) + ")");
}

}  // namespace

void train_softmax_classifier(Mlp& net, const Matrix& X, const std::vector<int>& labels,
                              const ClassifierHyper& hyper, RngStream& rng) {
    if (X.rows != labels.size())
        throw std::invalid_argument("train_softmax_classifier: sample/label count mismatch");
    if (X.rows == 0) throw std::invalid_argument("train_softmax_classifier: empty dataset");
    check_labels(labels, net.out_dim());

    Optimizer opt(hyper.optimizer, hyper.learning_rate);
    std::vector<std::size_t> order(X.rows);
    std::iota(order.begin(), order.end(), 0);

    const std::size_t nlayers = net.layers.size();
    for (std::size_t epoch = 0; epoch < hyper.epochs; ++epoch) {
        // Fisher-Yates from the stream keeps epochs reproducible.
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.uniform_index(i)]);

        for (std::size_t start = 0; start < X.rows; start += hyper.batch_size) {
            const std::size_t bsz = std::min(hyper.batch_size, X.rows - start);
            Matrix xb(bsz, X.cols);
            std::vector<int> yb(bsz);
            for (std::size_t i = 0; i < bsz; ++i) {
                const std::size_t src = order[start + i];
                std::copy(X.row(src), X.row(src) + X.cols, xb.row(i));
                yb[i] = labels[src];
            }

            // Forward with caches.
            std::vector<Matrix> inputs(nlayers);
            Matrix h = xb;
            for (std::size_t l = 0; l < nlayers; ++l) {
                inputs[l] = h;
                h = layer_forward(net.layers[l], h);
            }
            Matrix probs = softmax_rows(h);

            // Combined softmax + CE gradient, mean over the batch.
            Matrix grad = probs;
            const double inv_b = 1.0 / static_cast<double>(bsz);
            for (std::size_t i = 0; i < bsz; ++i)
                grad(i, static_cast<std::size_t>(yb[i])) -= 1.0;
            for (double& v : grad.data) v *= inv_b;

            std::vector<LayerGrads> lg(nlayers);
            for (std::size_t l = nlayers; l-- > 0;) {
                lg[l] = layer_backward(net.layers[l], inputs[l], grad);
                grad = lg[l].grad_input;
            }

            std::vector<std::span<double>> params;
            std::vector<std::span<const double>> grads;
            for (std::size_t l = 0; l < nlayers; ++l) {
                params.emplace_back(net.layers[l].weights.data);
                params.emplace_back(net.layers[l].bias);
                grads.emplace_back(lg[l].grad_weights.data);
                grads.emplace_back(lg[l].grad_bias);
            }
            opt.step(params, grads);

            const double loss = cross_entropy(probs, yb);
            if (!std::isfinite(loss))
                throw std::runtime_error("train_softmax_classifier: loss diverged at epoch " +
                                         std::to_string(epoch));
        }
    }
}

std::vector<int> predict_classes(const Mlp& net, const Matrix& X) {
    Matrix probs = softmax_rows(mlp_forward(net, X));
    std::vector<int> out(X.rows);
    for (std::size_t i = 0; i < probs.rows; ++i) {
        const double* row = probs.row(i);
        std::size_t best = 0;
        for (std::size_t j = 1; j < probs.cols; ++j)
            if (row[j] > row[best]) best = j;  // strict: ties keep the lowest index
        out[i] = static_cast<int>(best);
    }
    return out;
}

double classification_accuracy(const Mlp& net, const Matrix& X, const std::vector<int>& labels) {
    const std::vector<int> pred = predict_classes(net, X);
    std::size_t hit = 0;
    for (std::size_t i = 0; i < pred.size(); ++i)
        if (pred[i] == labels[i]) ++hit;
    return pred.empty() ? 0.0 : static_cast<double>(hit) / static_cast<double>(pred.size());
}

std::vector<std::span<double>> mlp_param_spans(Mlp& net) {
    std::vector<std::span<double>> spans;
    for (DenseLayer& layer : net.layers) {
        spans.emplace_back(layer.weights.data);
        spans.emplace_back(layer.bias);
    }
    return spans;
}

}  // namespace latentshield
