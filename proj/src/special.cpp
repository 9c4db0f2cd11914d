#include "latentshield/special.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "latentshield/matrix.hpp"

namespace latentshield {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

// Inverse of the standard normal CDF (Acklam's rational approximation,
// relative error < 1.15e-9). Used only to seed the gamma quantile search.
double normal_quantile(double p) {
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
    }
    if (p <= 1 - plow) {
        q = p - 0.5;
        r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
    }
    q = std::sqrt(-2 * std::log(1 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
}

// Lower incomplete gamma by series, valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double sum = 1.0 / a;
    double term = sum;
    double ap = a;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-16)
            return sum * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
    throw std::runtime_error("regularized_gamma_p: series failed to converge");
}

// Upper incomplete gamma Q by modified Lentz continued fraction, x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16)
            return h * std::exp(-x + a * std::log(x) - log_gamma(a));
    }
    throw std::runtime_error("regularized_gamma_p: continued fraction failed to converge");
}

}  // namespace

double log_gamma(double x) {
    require(x > 0.0, "log_gamma: argument must be positive");
    // Lanczos approximation (g = 671/128), coefficients from Numerical
    // Recipes 3rd ed.; full double precision for positive arguments.
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
        0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    double y = x;
    double tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    double ser = 0.999999999999997092;
    for (int j = 0; j < 14; ++j) ser += cof[j] / ++y;
    return tmp + std::log(2.5066282746310005 * ser / x);
}

double regularized_gamma_p(double a, double x) {
    require(a > 0.0, "regularized_gamma_p: shape must be positive");
    require(x >= 0.0, "regularized_gamma_p: argument must be nonnegative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double gamma_cdf(double r, const GammaParams& p) {
    require(p.k >= 1, "gamma_cdf: shape must be >= 1");
    require(p.epsilon > 0.0, "gamma_cdf: rate must be positive");
    require(r >= 0.0, "gamma_cdf: radius must be nonnegative");
    return regularized_gamma_p(static_cast<double>(p.k), p.epsilon * r);
}

double gamma_inverse_cdf(double p, const GammaParams& params) {
    require(params.k >= 1, "gamma_inverse_cdf: shape must be >= 1");
    require(params.epsilon > 0.0, "gamma_inverse_cdf: rate must be positive");
    require(p > 0.0 && p < 1.0, "gamma_inverse_cdf: p must lie in (0,1)");

    const double a = static_cast<double>(params.k);
    const double lg = log_gamma(a);

    // Wilson-Hilferty starting point for the unit-rate quantile.
    const double z = normal_quantile(p);
    const double t = 1.0 - 1.0 / (9.0 * a) + z / (3.0 * std::sqrt(a));
    double x = a * t * t * t;
    if (!(x > 0.0)) x = 1e-8;

    // Bracket the root in unit-rate space.
    double lo = 0.0;
    double hi = x;
    while (regularized_gamma_p(a, hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e9) throw std::runtime_error("gamma_inverse_cdf: bracket expansion failed");
    }
    if (x <= lo || x >= hi) x = 0.5 * (lo + hi);

    for (int it = 0; it < 200; ++it) {
        const double f = regularized_gamma_p(a, x) - p;
        if (std::fabs(f) < 1e-12) break;
        if (f > 0.0)
            hi = x;
        else
            lo = x;
        const double logpdf = (a - 1.0) * std::log(x) - x - lg;
        double step = f * std::exp(-logpdf);  // Newton: f / pdf
        double xn = x - step;
        if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);  // bisect when Newton escapes
        if (xn == x) break;
        x = xn;
    }
    if (std::fabs(regularized_gamma_p(a, x) - p) > 1e-10)
        throw std::runtime_error("gamma_inverse_cdf: did not converge to tolerance");
    return x / params.epsilon;
}

double log_lambda_coefficient(double eps, std::size_t k) {
    require(eps > 0.0, "lambda_coefficient: epsilon must be positive");
    require(k >= 1, "lambda_coefficient: k must be >= 1");
    const double kd = static_cast<double>(k);
    return -M_LN2 + kd * (std::log(eps) - 0.5 * std::log(M_PI)) + log_gamma(kd / 2.0) -
           log_gamma(kd);
}

double lambda_coefficient(double eps, std::size_t k) {
    const double lg = log_lambda_coefficient(eps, k);
    if (lg > 709.0 || lg < -709.0)
        throw std::overflow_error(
            "lambda_coefficient: value not representable; use log_lambda_coefficient");
    return std::exp(lg);
}

double dprivacy_log_pdf(const std::vector<double>& x0, const std::vector<double>& x,
                        double eps) {
    if (x0.size() != x.size())
        throw std::invalid_argument("dprivacy_log_pdf: dimension mismatch " +
                                    std::to_string(x0.size()) + " vs " +
                                    std::to_string(x.size()));
    require(!x0.empty(), "dprivacy_log_pdf: vectors must be nonempty");
    return log_lambda_coefficient(eps, x0.size()) - eps * l2_distance(x0, x);
}

}  // namespace latentshield
