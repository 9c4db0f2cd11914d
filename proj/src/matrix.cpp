#include "latentshield/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace latentshield {

std::string Matrix::shape_str() const {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

namespace {

[[noreturn]] void shape_error(const char* op, const Matrix& a, const Matrix& b) {
    throw std::invalid_argument(std::string(op) + ": shape mismatch " + a.shape_str() +
                                " vs " + b.shape_str());
}

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols != b.rows) shape_error("matmul", a, b);
    Matrix c(a.rows, b.cols);
    // ikj order: inner loop runs over contiguous rows of b and c.
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t l = 0; l < a.cols; ++l) {
            const double s = ai[l];
            const double* bl = b.row(l);
            for (std::size_t j = 0; j < b.cols; ++j) ci[j] += s * bl[j];
        }
    }
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols != b.cols) shape_error("matmul_nt", a, b);
    Matrix c(a.rows, b.rows);
    for (std::size_t i = 0; i < a.rows; ++i) {
        const double* ai = a.row(i);
        double* ci = c.row(i);
        for (std::size_t j = 0; j < b.rows; ++j) {
            const double* bj = b.row(j);
            double acc = 0.0;
            for (std::size_t l = 0; l < a.cols; ++l) acc += ai[l] * bj[l];
            ci[j] = acc;
        }
    }
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows != b.rows) shape_error("matmul_tn", a, b);
    Matrix c(a.cols, b.cols);
    for (std::size_t s = 0; s < a.rows; ++s) {
        const double* as = a.row(s);
        const double* bs = b.row(s);
        for (std::size_t i = 0; i < a.cols; ++i) {
            const double v = as[i];
            if (v == 0.0) continue;
            double* ci = c.row(i);
            for (std::size_t j = 0; j < b.cols; ++j) ci[j] += v * bs[j];
        }
    }
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

bool all_finite(const Matrix& m) {
    for (double v : m.data)
        if (!std::isfinite(v)) return false;
    return true;
}

bool all_finite(const std::vector<double>& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

double l2_distance(const double* a, const double* b, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

double l2_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("l2_distance: length mismatch " +
                                    std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    return l2_distance(a.data(), b.data(), a.size());
}

double l2_norm(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

}  // namespace latentshield
