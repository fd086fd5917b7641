#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace nla {

/// Global switch for componentwise parallelism (off by default).
void set_parallel(bool enabled) noexcept;
bool parallel_enabled() noexcept;

/// Runs f(i) for every component index. With parallelism enabled each index
/// gets its own thread; results are identical either way. When several
/// calls throw, the exception from the lowest index is rethrown.
template <class F>
void for_each_component(std::size_t n, F&& f) {
    if (!parallel_enabled() || n < 2) {
        for (std::size_t i = 0; i < n; ++i) f(i);
        return;
    }
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> workers;
    workers.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        workers.emplace_back([&, i] {
            try {
                f(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <class R, class F>
std::vector<R> map_components(std::size_t n, F&& f) {
    std::vector<std::optional<R>> slots(n);
    for_each_component(n, [&](std::size_t i) { slots[i].emplace(f(i)); });
    std::vector<R> out;
    out.reserve(n);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace nla
