#include "latentshield/vae.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace latentshield {

namespace {

constexpr double kClipLo = 1e-7;
constexpr double kClipHi = 1.0 - 1e-7;

void check_pixels(const Matrix& images) {
    for (double v : images.data)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("vae: pixel values must lie in [0,1]");
}

struct ForwardCache {
    Matrix trunk_out;   // batch x hidden
    Matrix mu, logvar;  // batch x k
    Matrix sigma, z;
    Matrix dec_hidden;  // batch x hidden
    Matrix xhat;        // batch x input_dim
};

ForwardCache vae_forward(const VaeModel& model, const Matrix& x, const Matrix& eta) {
    ForwardCache c;
    c.trunk_out = layer_forward(model.encoder_trunk, x);
    c.mu = layer_forward(model.mu_head, c.trunk_out);
    c.logvar = layer_forward(model.logvar_head, c.trunk_out);
    c.sigma = c.logvar;
    for (double& v : c.sigma.data) v = std::exp(0.5 * v);
    c.z = c.mu;
    for (std::size_t i = 0; i < c.z.data.size(); ++i)
        c.z.data[i] += c.sigma.data[i] * eta.data[i];
    c.dec_hidden = layer_forward(model.decoder_hidden, c.z);
    c.xhat = layer_forward(model.decoder_out, c.dec_hidden);
    return c;
}

}  // namespace

VaeModel make_vae(std::size_t input_dim, std::size_t k, std::size_t hidden, RngStream& rng) {
    if (input_dim == 0 || k == 0 || hidden == 0)
        throw std::invalid_argument("make_vae: dimensions must be positive");
    VaeModel m;
    m.encoder_trunk = make_dense(input_dim, hidden, Activation::ReLU, rng);
    m.mu_head = make_dense(hidden, k, Activation::Identity, rng);
    m.logvar_head = make_dense(hidden, k, Activation::Identity, rng);
    m.decoder_hidden = make_dense(k, hidden, Activation::ReLU, rng);
    m.decoder_out = make_dense(hidden, input_dim, Activation::Sigmoid, rng);
    m.input_dim = input_dim;
    m.k = k;
    return m;
}

std::pair<Matrix, Matrix> encode_batch(const VaeModel& model, const Matrix& x) {
    if (x.cols != model.input_dim)
        throw std::invalid_argument("encode: input dim " + std::to_string(x.cols) +
                                    " does not match model input_dim " +
                                    std::to_string(model.input_dim));
    Matrix trunk = layer_forward(model.encoder_trunk, x);
    Matrix mu = layer_forward(model.mu_head, trunk);
    Matrix sigma = layer_forward(model.logvar_head, trunk);
    for (double& v : sigma.data) v = std::exp(0.5 * v);
    return {std::move(mu), std::move(sigma)};
}

std::pair<std::vector<double>, std::vector<double>> encode(const VaeModel& model,
                                                           const std::vector<double>& x) {
    Matrix xb(1, x.size());
    std::copy(x.begin(), x.end(), xb.data.begin());
    auto [mu, sigma] = encode_batch(model, xb);
    return {std::move(mu.data), std::move(sigma.data)};
}

std::vector<double> reparameterize(const std::vector<double>& mu,
                                   const std::vector<double>& sigma, RngStream& rng) {
    if (mu.size() != sigma.size())
        throw std::invalid_argument("reparameterize: mu/sigma length mismatch");
    for (double s : sigma)
        if (!(s > 0.0)) throw std::invalid_argument("reparameterize: sigma must be positive");
    std::vector<double> eta = rng.gaussian(mu.size());
    std::vector<double> z(mu.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = mu[i] + sigma[i] * eta[i];
    return z;
}

Matrix decode_batch(const VaeModel& model, const Matrix& z) {
    if (z.cols != model.k)
        throw std::invalid_argument("decode: latent dim " + std::to_string(z.cols) +
                                    " does not match model k " + std::to_string(model.k));
    Matrix h = layer_forward(model.decoder_hidden, z);
    return layer_forward(model.decoder_out, h);
}

std::vector<double> decode(const VaeModel& model, const std::vector<double>& z) {
    Matrix zb(1, z.size());
    std::copy(z.begin(), z.end(), zb.data.begin());
    return decode_batch(model, zb).data;
}

VaeLoss vae_loss(const Matrix& x, const Matrix& xhat, const Matrix& mu, const Matrix& sigma) {
    if (x.rows != xhat.rows || x.cols != xhat.cols)
        throw std::invalid_argument("vae_loss: x/xhat shape mismatch " + x.shape_str() +
                                    " vs " + xhat.shape_str());
    if (mu.rows != x.rows || sigma.rows != x.rows || mu.cols != sigma.cols)
        throw std::invalid_argument("vae_loss: latent shape mismatch");

    double recon = 0.0;
    for (std::size_t i = 0; i < x.data.size(); ++i) {
        const double p = std::clamp(xhat.data[i], kClipLo, kClipHi);
        const double t = x.data[i];
        recon -= t * std::log(p) + (1.0 - t) * std::log(1.0 - p);
    }
    double kl = 0.0;
    for (std::size_t i = 0; i < mu.data.size(); ++i) {
        const double m = mu.data[i];
        const double s2 = sigma.data[i] * sigma.data[i];
        kl -= 0.5 * (1.0 + std::log(s2) - m * m - s2);
    }
    const double inv_b = 1.0 / static_cast<double>(x.rows);
    VaeLoss loss;
    loss.recon = recon * inv_b;
    loss.kl = kl * inv_b;
    loss.total = loss.recon + loss.kl;
    return loss;
}

VaeGrads vae_backward(const VaeModel& model, const Matrix& x, const Matrix& eta) {
    if (eta.rows != x.rows || eta.cols != model.k)
        throw std::invalid_argument("vae_backward: eta shape mismatch");
    ForwardCache c = vae_forward(model, x, eta);

    VaeGrads g;
    g.loss = vae_loss(x, c.xhat, c.mu, c.sigma);

    const double inv_b = 1.0 / static_cast<double>(x.rows);

    // d(recon)/d(xhat); zero where the clip saturates.
    Matrix dxhat(x.rows, x.cols);
    for (std::size_t i = 0; i < x.data.size(); ++i) {
        const double raw = c.xhat.data[i];
        if (raw < kClipLo || raw > kClipHi) {
            dxhat.data[i] = 0.0;
            continue;
        }
        const double t = x.data[i];
        dxhat.data[i] = inv_b * (-t / raw + (1.0 - t) / (1.0 - raw));
    }

    g.decoder_out = layer_backward(model.decoder_out, c.dec_hidden, dxhat);
    g.decoder_hidden = layer_backward(model.decoder_hidden, c.z, g.decoder_out.grad_input);

    const Matrix& dz = g.decoder_hidden.grad_input;  // batch x k

    // Reparameterization: z = mu + exp(logvar/2) * eta, plus the KL terms.
    Matrix dmu = dz;
    Matrix dlogvar(dz.rows, dz.cols);
    for (std::size_t i = 0; i < dz.data.size(); ++i) {
        const double sig = c.sigma.data[i];
        dlogvar.data[i] = dz.data[i] * 0.5 * sig * eta.data[i] +
                          inv_b * 0.5 * (sig * sig - 1.0);
        dmu.data[i] += inv_b * c.mu.data[i];
    }

    g.mu_head = layer_backward(model.mu_head, c.trunk_out, dmu);
    g.logvar_head = layer_backward(model.logvar_head, c.trunk_out, dlogvar);

    Matrix dtrunk = g.mu_head.grad_input;
    for (std::size_t i = 0; i < dtrunk.data.size(); ++i)
        dtrunk.data[i] += g.logvar_head.grad_input.data[i];
    g.trunk = layer_backward(model.encoder_trunk, x, dtrunk);
    return g;
}

std::vector<std::span<double>> vae_param_spans(VaeModel& model) {
    std::vector<std::span<double>> spans;
    for (DenseLayer* layer : {&model.encoder_trunk, &model.mu_head, &model.logvar_head,
                              &model.decoder_hidden, &model.decoder_out}) {
        spans.emplace_back(layer->weights.data);
        spans.emplace_back(layer->bias);
    }
    return spans;
}

VaeModel train_vae(const Matrix& images, const VaeHyper& hyper, RngStream& rng) {
    if (images.rows == 0 || images.cols == 0)
        throw std::invalid_argument("train_vae: empty dataset");
    check_pixels(images);

    VaeModel model = make_vae(images.cols, hyper.k, hyper.hidden, rng);
    Optimizer opt(hyper.optimizer, hyper.learning_rate);

    std::vector<std::size_t> order(images.rows);
    std::iota(order.begin(), order.end(), 0);

    for (std::size_t epoch = 0; epoch < hyper.epochs; ++epoch) {
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng.uniform_index(i)]);

        for (std::size_t start = 0; start < images.rows; start += hyper.batch_size) {
            const std::size_t bsz = std::min(hyper.batch_size, images.rows - start);
            Matrix xb(bsz, images.cols);
            for (std::size_t i = 0; i < bsz; ++i) {
                const std::size_t src = order[start + i];
                std::copy(images.row(src), images.row(src) + images.cols, xb.row(i));
            }
            Matrix eta(bsz, hyper.k);
            eta.data = rng.gaussian(bsz * hyper.k);

            VaeGrads g = vae_backward(model, xb, eta);
            if (!std::isfinite(g.loss.total))
                throw std::runtime_error("train_vae: loss diverged at epoch " +
                                         std::to_string(epoch));

            std::vector<std::span<double>> params = vae_param_spans(model);
            std::vector<std::span<const double>> grads;
            for (LayerGrads* lg : {&g.trunk, &g.mu_head, &g.logvar_head, &g.decoder_hidden,
                                   &g.decoder_out}) {
                grads.emplace_back(lg->grad_weights.data);
                grads.emplace_back(lg->grad_bias);
            }
            opt.step(params, grads);
        }
    }
    return model;
}

double vae_dataset_loss(const VaeModel& model, const Matrix& images) {
    const std::size_t chunk = 512;
    double total = 0.0;
    for (std::size_t start = 0; start < images.rows; start += chunk) {
        const std::size_t bsz = std::min(chunk, images.rows - start);
        Matrix xb(bsz, images.cols);
        std::copy(images.row(start), images.row(start) + bsz * images.cols, xb.data.begin());
        auto [mu, sigma] = encode_batch(model, xb);
        Matrix xhat = decode_batch(model, mu);
        total += vae_loss(xb, xhat, mu, sigma).total * static_cast<double>(bsz);
    }
    return total / static_cast<double>(images.rows);
}

}  // namespace latentshield
