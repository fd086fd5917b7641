#include <atomic>
#include <cstdlib>
#include <cstring>

#include "nla/error.hpp"
#include "nla/kernels.hpp"

namespace nla::kernels {

namespace {

struct Table {
    Isa isa;
    double (*dot)(std::span<const double>, std::span<const double>);
    void (*axpy)(double, std::span<const double>, std::span<double>);
    void (*gemm)(std::size_t, std::size_t, std::size_t, const double*, const double*, double*);
    double (*max_abs_diff)(std::span<const double>, std::span<const double>);
};

constexpr Table scalar_table{Isa::Scalar, scalar::dot, scalar::axpy, scalar::gemm, scalar::max_abs_diff};
#ifdef NLA_HAVE_AVX2_KERNELS
constexpr Table avx2_table{Isa::Avx2, avx2::dot, avx2::axpy, avx2::gemm, avx2::max_abs_diff};
#endif
#ifdef NLA_HAVE_NEON_KERNELS
constexpr Table neon_table{Isa::Neon, neon::dot, neon::axpy, neon::gemm, neon::max_abs_diff};
#endif

const Table* table_for(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return &scalar_table;
        case Isa::Avx2:
#ifdef NLA_HAVE_AVX2_KERNELS
            return &avx2_table;
#else
            return nullptr;
#endif
        case Isa::Neon:
#ifdef NLA_HAVE_NEON_KERNELS
            return &neon_table;
#else
            return nullptr;
#endif
    }
    return nullptr;
}

const Table* initial_table() noexcept {
    if (const char* env = std::getenv("NLA_ISA")) {
        if (std::strcmp(env, "scalar") == 0) return &scalar_table;
        if (std::strcmp(env, "avx2") == 0 && isa_available(Isa::Avx2)) return table_for(Isa::Avx2);
        if (std::strcmp(env, "neon") == 0 && isa_available(Isa::Neon)) return table_for(Isa::Neon);
    }
    if (isa_available(Isa::Avx2)) return table_for(Isa::Avx2);
    if (isa_available(Isa::Neon)) return table_for(Isa::Neon);
    return &scalar_table;
}

std::atomic<const Table*>& current() noexcept {
    static std::atomic<const Table*> t{initial_table()};
    return t;
}

const Table& active() noexcept { return *current().load(std::memory_order_acquire); }

}  // namespace

const char* to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return "scalar";
        case Isa::Avx2:
            return "avx2";
        case Isa::Neon:
            return "neon";
    }
    return "?";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#ifdef NLA_HAVE_AVX2_KERNELS
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
        case Isa::Neon:
#ifdef NLA_HAVE_NEON_KERNELS
            return true;
#else
            return false;
#endif
    }
    return false;
}

Isa active_isa() noexcept { return active().isa; }

void set_isa(Isa isa) {
    if (!isa_available(isa)) fail(ErrorCode::Unsupported, std::string("instruction set not available: ") + to_string(isa));
    current().store(table_for(isa), std::memory_order_release);
}

double dot(std::span<const double> x, std::span<const double> y) { return active().dot(x, y); }

void axpy(double a, std::span<const double> x, std::span<double> y) { active().axpy(a, x, y); }

void gemm(std::size_t m, std::size_t k, std::size_t n, const double* a, const double* b, double* c) {
    active().gemm(m, k, n, a, b, c);
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) { return active().max_abs_diff(x, y); }

}  // namespace nla::kernels
