#include "latentshield/privacy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "latentshield/matrix.hpp"
#include "latentshield/special.hpp"

namespace latentshield {

std::vector<double> sample_unit_direction(std::size_t k, RngStream& rng) {
    if (k < 1) throw std::invalid_argument("sample_unit_direction: k must be >= 1");
    for (;;) {
        std::vector<double> v = rng.gaussian(k);
        const double norm = l2_norm(v);
        if (norm == 0.0) continue;  // measure-zero draw; retry keeps the law uniform
        for (double& x : v) x /= norm;
        return v;
    }
}

double sample_radius(double eps_eff, std::size_t k, RngStream& rng) {
    if (eps_eff <= 0.0) throw std::invalid_argument("sample_radius: eps_eff must be positive");
    const double p = rng.uniform();
    return gamma_inverse_cdf(p, GammaParams{k, eps_eff});
}

double effective_epsilon(const PrivacyParams& params, const std::vector<double>& sigma) {
    if (params.epsilon <= 0.0)
        throw std::invalid_argument("effective_epsilon: epsilon must be positive");
    if (params.scaling == ScalingMode::None) return params.epsilon;
    if (sigma.empty()) throw std::invalid_argument("effective_epsilon: sigma is empty");
    double mean = 0.0;
    for (double s : sigma) {
        if (s <= 0.0) throw std::invalid_argument("effective_epsilon: sigma must be positive");
        mean += s;
    }
    mean /= static_cast<double>(sigma.size());
    return params.epsilon / (3.0 * mean);
}

std::pair<std::vector<double>, NoiseRecord> add_noise(const std::vector<double>& z,
                                                      double eps_eff, RngStream& rng) {
    if (z.empty()) throw std::invalid_argument("add_noise: empty latent code");
    NoiseRecord record;
    record.direction = sample_unit_direction(z.size(), rng);
    record.radius = sample_radius(eps_eff, z.size(), rng);
    record.effective_epsilon = eps_eff;

    std::vector<double> out(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
        out[i] = z[i] + record.direction[i] * record.radius;
    return {std::move(out), std::move(record)};
}

double l2_sensitivity_estimate(const std::vector<std::vector<double>>& latent_codes) {
    if (latent_codes.size() < 2)
        throw std::invalid_argument("l2_sensitivity_estimate: need at least two codes");
    double best = 0.0;
    for (std::size_t i = 0; i < latent_codes.size(); ++i)
        for (std::size_t j = i + 1; j < latent_codes.size(); ++j)
            best = std::max(best, l2_distance(latent_codes[i], latent_codes[j]));
    return best;
}

const char* scaling_mode_name(ScalingMode mode) {
    return mode == ScalingMode::None ? "none" : "3sigma";
}

ScalingMode scaling_mode_from_name(const std::string& name) {
    if (name == "none") return ScalingMode::None;
    if (name == "3sigma") return ScalingMode::ThreeSigmaMean;
    throw std::invalid_argument("unknown scaling mode '" + name + "' (expected none|3sigma)");
}

}  // namespace latentshield
