#include "nla/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nla {

namespace {

void require_conformable(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::ShapeMismatch, what);
}

double max_row_norm(const Matrix& m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += std::fabs(m(i, j).to_double());
        best = std::max(best, s);
    }
    return best;
}

std::vector<mpz_class> integer_row(const Matrix& m, std::size_t i, mpz_class& scale) {
    scale = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) scale = lcm(scale, m(i, j).rational().get_den());
    std::vector<mpz_class> out(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const mpq_class& q = m(i, j).rational();
        out[j] = q.get_num() * (scale / q.get_den());
    }
    return out;
}

}  // namespace

Vec zero_vec(const FieldDescriptor& field, std::size_t n) { return Vec(n, Scalar::zero(field)); }

Vec unit_vec(const FieldDescriptor& field, std::size_t n, std::size_t i) {
    Vec v = zero_vec(field, n);
    v.at(i) = Scalar::one(field);
    return v;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vector lengths differ");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vector lengths differ");
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vec scale(const Scalar& c, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
    return out;
}

Scalar dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) fail(ErrorCode::ShapeMismatch, "vector lengths differ");
    if (a.empty()) return Scalar();
    Scalar acc = Scalar::zero(a.front().field());
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool equal(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(FieldDescriptor field, std::size_t rows, std::size_t cols, std::vector<Scalar> row_major)
    : field_(field), rows_(rows), cols_(cols), data_(std::move(row_major)) {
    if (data_.size() != rows * cols) fail(ErrorCode::ShapeMismatch, "entry count does not match shape");
    for (const auto& s : data_) require_same_field(field_, s.field());
}

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_ints(const FieldDescriptor& field, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        require_conformable(rows[i].size() == c, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = Scalar::from_int(field, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& field, const std::vector<Vec>& rows, std::size_t cols) {
    std::size_t c = rows.empty() ? cols : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_conformable(rows[i].size() == c, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) {
            require_same_field(field, rows[i][j].field());
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

Matrix Matrix::from_columns(const FieldDescriptor& field, const std::vector<Vec>& columns, std::size_t rows) {
    return from_rows(field, columns, rows).transpose();
}

Matrix Matrix::diagonal(const FieldDescriptor& field, const Vec& entries) {
    Matrix m(field, entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::column(std::size_t j) const {
    Vec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (auto& s : out.data_) s = s * c;
    return out;
}

Matrix Matrix::pow(unsigned k) const {
    if (!is_square()) fail(ErrorCode::NonSquareForPow, "power of a non-square matrix");
    Matrix result = identity(field_, rows_);
    Matrix base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

Vec Matrix::apply(const Vec& v) const {
    require_conformable(v.size() == cols_, "matrix-vector shape mismatch");
    Vec out = zero_vec(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_identity() const { return is_square() && *this == identity(field_, rows_); }

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    require_conformable(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    require_conformable(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference shape mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    require_conformable(a.cols_ == b.rows_, "matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero() && a.field_.is_exact()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    require_same_field(a.field_, b.field_);
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
        if (a.data_[i] != b.data_[i]) return false;
    return true;
}

Echelon rref(const Matrix& m) {
    const auto& field = m.field();
    Matrix r = m;
    const bool real = field.kind() == FieldKind::Real;
    const double threshold = real ? field.tolerance() * max_row_norm(m) : 0.0;
    auto negligible = [&](const Scalar& s) {
        return real ? std::fabs(s.real()) <= threshold : s.is_zero();
    };
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t best = r.rows();
        if (real) {
            double mag = threshold;
            for (std::size_t i = row; i < r.rows(); ++i) {
                double v = std::fabs(r(i, col).real());
                if (v > mag) {
                    mag = v;
                    best = i;
                }
            }
        } else {
            for (std::size_t i = row; i < r.rows(); ++i)
                if (!r(i, col).is_zero()) {
                    best = i;
                    break;
                }
        }
        if (best == r.rows()) {
            if (real)
                for (std::size_t i = row; i < r.rows(); ++i) r(i, col) = Scalar::zero(field);
            continue;
        }
        if (best != row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(best, j), r(row, j));
        Scalar inv = r(row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r(row, j) = r(row, j) * inv;
        r(row, col) = Scalar::one(field);
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            Scalar f = r(i, col);
            if (f.is_zero() && !real) continue;
            for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
            r(i, col) = Scalar::zero(field);
        }
        pivots.push_back(col);
        ++row;
    }
    if (real) {
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j)
                if (negligible(r(i, j))) r(i, j) = Scalar::zero(field);
    }
    return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
    if (m.field().kind() != FieldKind::Rational) return rref(m).pivots.size();
    std::vector<std::vector<mpz_class>> a;
    a.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class s;
        a.push_back(integer_row(m, i, s));
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const mpz_class piv = a[row][col];
        for (std::size_t i = row + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            const mpz_class f = a[i][col];
            mpz_class g = 0;
            for (std::size_t j = col; j < m.cols(); ++j) {
                a[i][j] = piv * a[i][j] - f * a[row][j];
                g = gcd(g, a[i][j]);
            }
            if (g > 1)
                for (std::size_t j = col; j < m.cols(); ++j) a[i][j] /= g;
        }
        ++row;
    }
    return row;
}

std::vector<Vec> nullspace(const Matrix& m) {
    const auto& field = m.field();
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v = zero_vec(field, m.cols());
        v[f] = Scalar::one(field);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Scalar determinant(const Matrix& m) {
    if (!m.is_square()) fail(ErrorCode::NonSquare, "determinant of a non-square matrix");
    const auto& field = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return Scalar::one(field);
    if (field.kind() == FieldKind::Rational) {
        std::vector<std::vector<mpz_class>> a(n);
        mpz_class denom = 1;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class s;
            a[i] = integer_row(m, i, s);
            denom *= s;
        }
        int sign = 1;
        mpz_class prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (a[k][k] == 0) {
                std::size_t p = k + 1;
                while (p < n && a[p][k] == 0) ++p;
                if (p == n) return Scalar::zero(field);
                std::swap(a[p], a[k]);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i) {
                for (std::size_t j = k + 1; j < n; ++j) {
                    a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                    mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
                }
            }
            prev = a[k][k];
        }
        mpq_class det(a[n - 1][n - 1] * sign, denom);
        det.canonicalize();
        return Scalar::from_rational(field, det);
    }
    Matrix a = m;
    Scalar det = Scalar::one(field);
    const bool real = field.kind() == FieldKind::Real;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = n;
        if (real) {
            double best = 0.0;
            for (std::size_t i = k; i < n; ++i) {
                double v = std::fabs(a(i, k).real());
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
        } else {
            for (std::size_t i = k; i < n; ++i)
                if (!a(i, k).is_zero()) {
                    p = i;
                    break;
                }
        }
        if (p == n) return Scalar::zero(field);
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            det = -det;
        }
        det *= a(k, k);
        Scalar inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            Scalar f = a(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return det;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) fail(ErrorCode::NonSquare, "inverse of a non-square matrix");
    const auto& field = m.field();
    const std::size_t n = m.rows();
    Matrix aug(field, n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(field);
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (b.size() != m.rows()) fail(ErrorCode::ShapeMismatch, "right-hand side length mismatch");
    const auto& field = m.field();
    Matrix aug(field, m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
    Vec x = zero_vec(field, m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

Polynomial characteristic_polynomial(const Matrix& m) {
    if (!m.is_square()) fail(ErrorCode::NonSquare, "characteristic polynomial of a non-square matrix");
    const auto& field = m.field();
    const std::size_t n = m.rows();
    // v holds det(xI - A_r) for the leading r x r block, highest degree first.
    Vec v{Scalar::one(field)};
    for (std::size_t r = 0; r < n; ++r) {
        // A_{r+1} = [[A_r, c], [row, a]]; Toeplitz column t = (1, -a, -row c, -row A_r c, ...).
        Vec t;
        t.reserve(r + 2);
        t.push_back(Scalar::one(field));
        t.push_back(-m(r, r));
        Vec c(r);
        for (std::size_t i = 0; i < r; ++i) c[i] = m(i, r);
        for (std::size_t k = 0; k < r; ++k) {
            Scalar s = Scalar::zero(field);
            for (std::size_t j = 0; j < r; ++j) s += m(r, j) * c[j];
            t.push_back(-s);
            Vec next = zero_vec(field, r);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * c[j];
            c = std::move(next);
        }
        Vec w = zero_vec(field, r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += t[i - j] * v[j];
        v = std::move(w);
    }
    std::reverse(v.begin(), v.end());
    return Polynomial(field, std::move(v));
}

Matrix evaluate(const Polynomial& p, const Matrix& m) {
    if (!m.is_square()) fail(ErrorCode::NonSquare, "polynomial of a non-square matrix");
    require_same_field(p.field(), m.field());
    const auto& field = m.field();
    const std::size_t n = m.rows();
    Matrix acc(field, n, n);
    const auto& cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
}

}  // namespace nla
