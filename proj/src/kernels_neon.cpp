#include "nla/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <algorithm>
#include <cmath>

namespace nla::kernels::neon {

double dot(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(&x[i]), vld1q_f64(&y[i]));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    const float64x2_t va = vdupq_n_f64(a);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(&y[i], vfmaq_f64(vld1q_f64(&y[i]), va, vld1q_f64(&x[i])));
    for (; i < n; ++i) y[i] += a * x[i];
}

void gemm(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c) {
    std::fill(c, c + m * n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double s = a[i * k + p];
            const float64x2_t aip = vdupq_n_f64(s);
            const double* bp = b + p * n;
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) vst1q_f64(ci + j, vfmaq_f64(vld1q_f64(ci + j), aip, vld1q_f64(bp + j)));
            for (; j < n; ++j) ci[j] += s * bp[j];
        }
    }
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    float64x2_t m = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) m = vmaxq_f64(m, vabdq_f64(vld1q_f64(&x[i]), vld1q_f64(&y[i])));
    double best = vmaxvq_f64(m);
    for (; i < n; ++i) best = std::max(best, std::fabs(x[i] - y[i]));
    return best;
}

}  // namespace nla::kernels::neon

#endif
