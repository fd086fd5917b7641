#pragma once

#include <cstddef>
#include <vector>

#include "nla/matrix.hpp"

namespace nla {

/// Row-major double matrix for the floating-point Markov path. Products and
/// updates go through nla::kernels.
struct DenseMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> a;

    DenseMatrix() = default;
    DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

    static DenseMatrix identity(std::size_t n);
    static DenseMatrix from(const Matrix& m);
    Matrix to_matrix(const FieldDescriptor& field) const;

    double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y);
/// y += alpha x
void accumulate(DenseMatrix& y, double alpha, const DenseMatrix& x);
DenseMatrix power(const DenseMatrix& m, unsigned k);
double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y);
/// Maximum absolute row sum.
double inf_norm(const DenseMatrix& m);

}  // namespace nla
