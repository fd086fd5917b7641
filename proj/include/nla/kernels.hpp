#pragma once

// Double-precision inner loops for the floating-point Markov path.
//
// Every kernel has a scalar reference in nla::kernels::scalar and vector
// variants (AVX2+FMA on x86-64, NEON on AArch64). The dispatching entry
// points pick the best variant the running CPU supports; the choice can be
// pinned with set_isa() or the NLA_ISA environment variable
// (`scalar`, `avx2`, `neon`).

#include <cstddef>
#include <span>

namespace nla::kernels {

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa) noexcept;
bool isa_available(Isa isa) noexcept;
Isa active_isa() noexcept;
/// Throws Unsupported when the CPU lacks the requested extension.
void set_isa(Isa isa);

double dot(std::span<const double> x, std::span<const double> y);
/// y += a * x
void axpy(double a, std::span<const double> x, std::span<double> y);
/// c = a * b for row-major a (m x k), b (k x n), c (m x n).
void gemm(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c);
double max_abs_diff(std::span<const double> x, std::span<const double> y);

namespace scalar {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void gemm(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c);
double max_abs_diff(std::span<const double> x, std::span<const double> y);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define NLA_HAVE_AVX2_KERNELS 1
namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void gemm(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c);
double max_abs_diff(std::span<const double> x, std::span<const double> y);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define NLA_HAVE_NEON_KERNELS 1
namespace neon {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void gemm(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c);
double max_abs_diff(std::span<const double> x, std::span<const double> y);
}  // namespace neon
#endif

}  // namespace nla::kernels
