#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nla/field.hpp"
#include "nla/polynomial.hpp"

namespace nla {

using Vec = std::vector<Scalar>;

Vec zero_vec(const FieldDescriptor& field, std::size_t n);
Vec unit_vec(const FieldDescriptor& field, std::size_t n, std::size_t i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
Scalar dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);
bool equal(const Vec& a, const Vec& b);

/// Dense row-major matrix over one field.
class Matrix {
public:
    explicit Matrix(FieldDescriptor field = FieldDescriptor::rational(), std::size_t rows = 0, std::size_t cols = 0);
    Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols, std::vector<Scalar> row_major);

    static Matrix identity(const FieldDescriptor& field, std::size_t n);
    static Matrix from_ints(const FieldDescriptor& field, const std::vector<std::vector<long long>>& rows);
    /// Each vector becomes a row; `cols` fixes the width when `rows` is empty.
    static Matrix from_rows(const FieldDescriptor& field, const std::vector<Vec>& rows, std::size_t cols = 0);
    static Matrix from_columns(const FieldDescriptor& field, const std::vector<Vec>& columns, std::size_t rows = 0);
    static Matrix diagonal(const FieldDescriptor& field, const Vec& entries);

    const FieldDescriptor& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<const Scalar> data() const noexcept { return data_; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

    Matrix transpose() const;
    Matrix scaled(const Scalar& c) const;
    /// Throws NonSquareForPow.
    Matrix pow(unsigned k) const;
    Vec apply(const Vec& v) const;

    bool is_zero() const;
    bool is_identity() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    FieldDescriptor field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                    ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Exact fields pick the first nonzero pivot; over
/// R the largest magnitude, and entries below tolerance * max row norm of the
/// input count as zero.
Echelon rref(const Matrix& m);

/// Over Q a fraction-free integer elimination; otherwise the pivot count of rref.
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column, free entry set to 1.
std::vector<Vec> nullspace(const Matrix& m);

/// Bareiss fraction-free elimination over Q, Gaussian elimination otherwise.
/// Throws NonSquare.
Scalar determinant(const Matrix& m);

/// nullopt when singular. Throws NonSquare.
std::optional<Matrix> inverse(const Matrix& m);

/// One solution of m x = b (free variables zero), or nullopt if inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// det(xI - m), computed division-free (Berkowitz). Throws NonSquare.
Polynomial characteristic_polynomial(const Matrix& m);

/// p(m) by Horner's rule. Throws NonSquare.
Matrix evaluate(const Polynomial& p, const Matrix& m);

}  // namespace nla
