#pragma once

#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nilform {

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// out[i] = fn(i) for i < count, evaluated in parallel; order of results is by index.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using R = decltype(fn(std::size_t{}));
    std::vector<std::optional<R>> slots(count);
    std::exception_ptr error;
    std::mutex error_mutex;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(count); ++i) {
        try {
            slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    std::vector<R> out;
    out.reserve(count);
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

template <class Fn>
auto serial_map(std::size_t count, Fn&& fn) -> std::vector<decltype(fn(std::size_t{}))> {
    std::vector<decltype(fn(std::size_t{}))> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
}

/// Smallest i < count with pred(i), evaluating predicates in parallel.
template <class Pred>
std::optional<std::size_t> parallel_first_index(std::size_t count, Pred&& pred) {
    const auto hits = parallel_map(count, [&](std::size_t i) { return static_cast<char>(pred(i) ? 1 : 0); });
    for (std::size_t i = 0; i < count; ++i)
        if (hits[i]) return i;
    return std::nullopt;
}

}  // namespace nilform
