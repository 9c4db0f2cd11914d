#pragma once

#include <cstddef>
#include <vector>

namespace latentshield {

// Shape/rate parameters of the radial noise marginal: shape is the latent
// dimension k, rate is the effective privacy budget.
struct GammaParams {
    std::size_t k = 1;   // shape, >= 1
    double epsilon = 1;  // rate, > 0
};

// ln Gamma(x) for x > 0. Absolute error below 1e-12 on [0.5, 200].
double log_gamma(double x);

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

// CDF of Gamma(shape k, rate epsilon) at r >= 0.
double gamma_cdf(double r, const GammaParams& p);

// Quantile: r such that gamma_cdf(r) = p, for p in (0,1). Converges to
// |cdf(r) - p| < 1e-10.
double gamma_inverse_cdf(double p, const GammaParams& params);

// Normalization constant of the k-dimensional metric-privacy density
//   lambda = 1/2 * (eps/sqrt(pi))^k * Gamma(k/2) / Gamma(k)
// evaluated in log space. lambda_coefficient throws std::overflow_error when
// the value cannot be represented; use log_lambda_coefficient then.
double log_lambda_coefficient(double eps, std::size_t k);
double lambda_coefficient(double eps, std::size_t k);

// Log of the metric-privacy density centered at x0, evaluated at x:
//   ln lambda_{eps,k} - eps * ||x - x0||_2
double dprivacy_log_pdf(const std::vector<double>& x0, const std::vector<double>& x,
                        double eps);

}  // namespace latentshield
