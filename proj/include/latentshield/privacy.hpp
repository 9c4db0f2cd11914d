#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "latentshield/rng.hpp"

namespace latentshield {

enum class ScalingMode { None, ThreeSigmaMean };

// Requested privacy budget and how it is rescaled into latent space.
// The mechanism accepts any epsilon > 0; values above 1 fall outside the
// regime the scheme was designed for, so callers should warn.
struct PrivacyParams {
    double epsilon = 0.5;
    std::size_t k = 20;
    ScalingMode scaling = ScalingMode::ThreeSigmaMean;
};

// One noise draw: z' = z + direction * radius.
struct NoiseRecord {
    std::vector<double> direction;  // unit k-vector
    double radius = 0.0;
    double effective_epsilon = 0.0;
};

// Uniform point on the unit (k-1)-sphere via a normalized Gaussian draw.
std::vector<double> sample_unit_direction(std::size_t k, RngStream& rng);

// Radius with Gamma(shape k, rate eps_eff) law, drawn by inverse-CDF from a
// single uniform.
double sample_radius(double eps_eff, std::size_t k, RngStream& rng);

// None -> epsilon unchanged; ThreeSigmaMean -> epsilon / (3 * mean(sigma)).
double effective_epsilon(const PrivacyParams& params, const std::vector<double>& sigma);

// z' = z + direction * radius, with the draw recorded.
std::pair<std::vector<double>, NoiseRecord> add_noise(const std::vector<double>& z,
                                                      double eps_eff, RngStream& rng);

// Maximum pairwise Euclidean distance among latent codes; diagnostic for the
// empirical-rule sensitivity scaling. Needs at least two codes.
double l2_sensitivity_estimate(const std::vector<std::vector<double>>& latent_codes);

const char* scaling_mode_name(ScalingMode mode);
ScalingMode scaling_mode_from_name(const std::string& name);

}  // namespace latentshield
