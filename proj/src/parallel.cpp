#include "nla/parallel.hpp"

#include <atomic>

namespace nla {

namespace {
std::atomic<bool> g_parallel{false};
}

void set_parallel(bool enabled) noexcept { g_parallel.store(enabled, std::memory_order_relaxed); }

bool parallel_enabled() noexcept { return g_parallel.load(std::memory_order_relaxed); }

}  // namespace nla
