#include "nla/dense.hpp"

#include <algorithm>
#include <cmath>

#include "nla/kernels.hpp"

namespace nla {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::from(const Matrix& m) {
    DenseMatrix d(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).to_double();
    return d;
}

Matrix DenseMatrix::to_matrix(const FieldDescriptor& field) const {
    std::vector<Scalar> entries;
    entries.reserve(a.size());
    for (double x : a) entries.push_back(Scalar::from_double(field, x));
    return Matrix(field, rows, cols, std::move(entries));
}

DenseMatrix multiply(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.cols != y.rows) fail(ErrorCode::ShapeMismatch, "inner dimensions differ");
    DenseMatrix out(x.rows, y.cols);
    kernels::gemm(x.rows, x.cols, y.cols, x.a.data(), y.a.data(), out.a.data());
    return out;
}

void accumulate(DenseMatrix& y, double alpha, const DenseMatrix& x) {
    if (x.rows != y.rows || x.cols != y.cols) fail(ErrorCode::ShapeMismatch, "shapes differ");
    kernels::axpy(alpha, x.a, y.a);
}

DenseMatrix power(const DenseMatrix& m, unsigned k) {
    if (m.rows != m.cols) fail(ErrorCode::NonSquareForPow, "power of a non-square matrix");
    DenseMatrix result = DenseMatrix::identity(m.rows);
    DenseMatrix base = m;
    while (k) {
        if (k & 1U) result = multiply(result, base);
        k >>= 1U;
        if (k) base = multiply(base, base);
    }
    return result;
}

double max_abs_diff(const DenseMatrix& x, const DenseMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail(ErrorCode::ShapeMismatch, "shapes differ");
    return kernels::max_abs_diff(x.a, y.a);
}

double inf_norm(const DenseMatrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) s += std::fabs(m(i, j));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace nla
