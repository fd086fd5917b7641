#include "support/oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace oracle {

using nla::FieldDescriptor;
using nla::Matrix;
using nla::Scalar;

QMatrix to_q(const Matrix& m) {
    QMatrix q(m.rows(), std::vector<mpq_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q[i][j] = m(i, j).rational();
    return q;
}

Matrix from_q(const QMatrix& q) {
    const auto f = FieldDescriptor::rational();
    Matrix m(f, q.size(), q.empty() ? 0 : q[0].size());
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q[i].size(); ++j) m(i, j) = Scalar::from_rational(f, q[i][j]);
    return m;
}

QPoly to_q(const nla::Polynomial& p) {
    QPoly out;
    for (const auto& c : p.coefficients()) out.push_back(c.rational());
    return out;
}

QMatrix q_identity(std::size_t n) {
    QMatrix m(n, std::vector<mpq_class>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
    QMatrix c(a.size(), std::vector<mpq_class>(b[0].size(), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

QMatrix q_add(const QMatrix& a, const QMatrix& b) {
    QMatrix c = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
    return c;
}

QMatrix q_scale(const mpq_class& s, const QMatrix& a) {
    QMatrix c = a;
    for (auto& r : c)
        for (auto& x : r) x *= s;
    return c;
}

bool q_is_zero(const QMatrix& a) {
    for (const auto& r : a)
        for (const auto& x : r)
            if (x != 0) return false;
    return true;
}

mpq_class cofactor_det(const QMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    mpq_class det = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        QMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<mpq_class> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        mpq_class term = a[0][j] * cofactor_det(minor);
        det += (j % 2 == 0) ? term : mpq_class(-term);
    }
    return det;
}

QPoly faddeev_leverrier(const QMatrix& a) {
    const std::size_t n = a.size();
    QPoly c(n + 1, 0);
    c[n] = 1;
    QMatrix m(n, std::vector<mpq_class>(n, 0));
    for (std::size_t k = 1; k <= n; ++k) {
        m = q_add(q_mul(a, m), q_scale(c[n - k + 1], q_identity(n)));
        QMatrix am = q_mul(a, m);
        mpq_class tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

namespace {

/// Solves sum_k x_k cols[k] = target; returns false if inconsistent.
bool q_solve_columns(const std::vector<std::vector<mpq_class>>& cols, const std::vector<mpq_class>& target,
                     std::vector<mpq_class>& x) {
    const std::size_t rows = target.size();
    const std::size_t k = cols.size();
    QMatrix aug(rows, std::vector<mpq_class>(k + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = cols[j][i];
        aug[i][k] = target[i];
    }
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < k && r < rows; ++j) {
        std::size_t p = r;
        while (p < rows && aug[p][j] == 0) ++p;
        if (p == rows) continue;
        std::swap(aug[p], aug[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || aug[i][j] == 0) continue;
            mpq_class f = aug[i][j] / aug[r][j];
            for (std::size_t t = j; t <= k; ++t) aug[i][t] -= f * aug[r][t];
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (aug[i][k] != 0) return false;
    x.assign(k, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][k] / aug[i][pivot_col[i]];
    return true;
}

std::vector<mpq_class> flatten(const QMatrix& m) {
    std::vector<mpq_class> out;
    for (const auto& r : m) out.insert(out.end(), r.begin(), r.end());
    return out;
}

}  // namespace

QPoly minpoly_by_powers(const QMatrix& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<mpq_class>> powers;
    QMatrix p = q_identity(n);
    for (std::size_t d = 0; d <= n; ++d) {
        std::vector<mpq_class> x;
        if (!powers.empty() && q_solve_columns(powers, flatten(p), x)) {
            QPoly m(d + 1);
            for (std::size_t i = 0; i < d; ++i) m[i] = -x[i];
            m[d] = 1;
            return m;
        }
        powers.push_back(flatten(p));
        p = q_mul(a, p);
    }
    throw std::logic_error("no dependency among the first n+1 powers");
}

QMatrix q_eval(const QPoly& p, const QMatrix& a) {
    const std::size_t n = a.size();
    QMatrix acc(n, std::vector<mpq_class>(n, 0));
    QMatrix power = q_identity(n);
    for (const auto& c : p) {
        acc = q_add(acc, q_scale(c, power));
        power = q_mul(power, a);
    }
    return acc;
}

std::size_t q_rank(const QMatrix& a0) {
    QMatrix a = a0;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t p = r;
        while (p < rows && a[p][j] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            mpq_class f = a[i][j] / a[r][j];
            for (std::size_t t = j; t < cols; ++t) a[i][t] -= f * a[r][t];
        }
        ++r;
    }
    return r;
}

QPoly q_mod(QPoly a, const QPoly& b) {
    auto trim = [](QPoly& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    QPoly d = b;
    trim(a);
    trim(d);
    while (a.size() >= d.size() && !a.empty()) {
        mpq_class f = a.back() / d.back();
        const std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] -= f * d[i];
        trim(a);
    }
    return a;
}

std::uint64_t count_tuples(const std::vector<std::vector<std::string>>& sets) {
    std::set<std::vector<std::string>> seen;
    std::vector<std::size_t> idx(sets.size(), 0);
    for (const auto& s : sets)
        if (s.empty()) return 0;
    while (true) {
        std::vector<std::string> t;
        for (std::size_t i = 0; i < sets.size(); ++i) t.push_back(sets[i][idx[i]]);
        seen.insert(std::move(t));
        std::size_t k = 0;
        while (k < sets.size() && ++idx[k] == sets[k].size()) idx[k++] = 0;
        if (k == sets.size()) break;
    }
    return seen.size();
}

Matrix Rng::rational_matrix(std::size_t rows, std::size_t cols, long range, long den) {
    const auto f = FieldDescriptor::rational();
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            mpq_class q(uniform(-range, range), uniform(1, den));
            q.canonicalize();
            m(i, j) = Scalar::from_rational(f, q);
        }
    return m;
}

Matrix Rng::unimodular(std::size_t n) {
    QMatrix l = q_identity(n);
    QMatrix u = q_identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            l[i][j] = uniform(-2, 2);
            u[j][i] = uniform(-2, 2);
        }
    return from_q(q_mul(l, u));
}

namespace {

/// Gauss-Jordan inverse of an invertible matrix.
QMatrix q_inverse(const QMatrix& a) {
    const std::size_t n = a.size();
    QMatrix aug(n, std::vector<mpq_class>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (aug[p][j] == 0) ++p;
        std::swap(aug[p], aug[j]);
        mpq_class d = aug[j][j];
        for (auto& x : aug[j]) x /= d;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || aug[i][j] == 0) continue;
            mpq_class f = aug[i][j];
            for (std::size_t t = 0; t < 2 * n; ++t) aug[i][t] -= f * aug[j][t];
        }
    }
    QMatrix inv(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

}  // namespace

Matrix Rng::diagonalizable(std::size_t n, const std::vector<long>& values, std::vector<long>& diag) {
    QMatrix s = to_q(unimodular(n));
    QMatrix d(n, std::vector<mpq_class>(n, 0));
    diag.clear();
    for (std::size_t i = 0; i < n; ++i) {
        diag.push_back(values[index(values.size())]);
        d[i][i] = diag.back();
    }
    return from_q(q_mul(q_mul(s, d), q_inverse(s)));
}

Matrix Rng::split(std::size_t n) {
    QMatrix j(n, std::vector<mpq_class>(n, 0));
    std::size_t i = 0;
    while (i < n) {
        std::size_t size = static_cast<std::size_t>(uniform(1, static_cast<long>(std::min<std::size_t>(3, n - i))));
        long value = uniform(-3, 3);
        for (std::size_t k = 0; k < size; ++k) {
            j[i + k][i + k] = value;
            if (k + 1 < size) j[i + k][i + k + 1] = 1;
        }
        i += size;
    }
    QMatrix s = to_q(unimodular(n));
    return from_q(q_mul(q_mul(s, j), q_inverse(s)));
}

Matrix Rng::stochastic(std::size_t n, bool strictly_positive) {
    QMatrix m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        long total = 0;
        std::vector<long> w(n);
        for (auto& x : w) {
            x = uniform(strictly_positive ? 1 : 0, 6);
            if (!strictly_positive && uniform(0, 2) == 0) x = 0;
            total += x;
        }
        if (total == 0) {
            w[index(n)] = 1;
            total = 1;
        }
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = mpq_class(w[j], total);
            m[i][j].canonicalize();
        }
    }
    return from_q(m);
}

Matrix Rng::reversible(std::size_t n) {
    std::vector<std::vector<long>> w(n, std::vector<long>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) w[i][j] = w[j][i] = uniform(1, 9);
    QMatrix m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        long total = 0;
        for (auto x : w[i]) total += x;
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = mpq_class(w[i][j], total);
            m[i][j].canonicalize();
        }
    }
    return from_q(m);
}

Matrix Rng::sub_stochastic(std::size_t n) {
    QMatrix m(n, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        long total = 0;
        std::vector<long> w(n);
        for (auto& x : w) {
            x = uniform(0, 6);
            total += x;
        }
        const long den = total + uniform(1, 5);
        for (std::size_t j = 0; j < n; ++j) {
            m[i][j] = mpq_class(w[j], den);
            m[i][j].canonicalize();
        }
    }
    return from_q(m);
}

std::vector<std::size_t> Rng::distinct_sizes(std::size_t count, std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> pool;
    for (std::size_t s = lo; s <= hi; ++s) pool.push_back(s);
    std::shuffle(pool.begin(), pool.end(), g_);
    pool.resize(std::min(count, pool.size()));
    return pool;
}

}  // namespace oracle
