// Built with -mavx2 -mfma; only called after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "nla/kernels.hpp"

namespace nla::kernels::avx2 {

namespace {

double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d shuf = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, shuf));
}

}  // namespace

double dot(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) acc = _mm256_fmadd_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(&y[i], _mm256_fmadd_pd(va, _mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i])));
    for (; i < n; ++i) y[i] += a * x[i];
}

void gemm(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c) {
    std::fill(c, c + m * n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const __m256d aip = _mm256_set1_pd(a[i * k + p]);
            const double* bp = b + p * n;
            std::size_t j = 0;
            for (; j + 4 <= n; j += 4)
                _mm256_storeu_pd(ci + j, _mm256_fmadd_pd(aip, _mm256_loadu_pd(bp + j), _mm256_loadu_pd(ci + j)));
            const double s = a[i * k + p];
            for (; j < n; ++j) ci[j] += s * bp[j];
        }
    }
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    __m256d m = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d d = _mm256_sub_pd(_mm256_loadu_pd(&x[i]), _mm256_loadu_pd(&y[i]));
        m = _mm256_max_pd(m, _mm256_andnot_pd(sign_mask, d));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, m);
    double best = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; i < n; ++i) best = std::max(best, std::fabs(x[i] - y[i]));
    return best;
}

}  // namespace nla::kernels::avx2
