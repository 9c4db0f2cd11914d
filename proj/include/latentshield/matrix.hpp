#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace latentshield {

// Dense row-major 2-D array of doubles. The single numeric carrier for
// images, activations and gradients.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

    double* row(std::size_t i) { return data.data() + i * cols; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }

    bool empty() const { return rows == 0 || cols == 0; }
    std::size_t size() const { return rows * cols; }

    std::string shape_str() const;
};

// c = a * b
Matrix matmul(const Matrix& a, const Matrix& b);
// c = a * b^T  (rows of b are contracted against rows of a)
Matrix matmul_nt(const Matrix& a, const Matrix& b);
// c = a^T * b
Matrix matmul_tn(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

bool all_finite(const Matrix& m);
bool all_finite(const std::vector<double>& v);

double l2_distance(const double* a, const double* b, std::size_t n);
double l2_distance(const std::vector<double>& a, const std::vector<double>& b);
double l2_norm(const std::vector<double>& v);

}  // namespace latentshield
