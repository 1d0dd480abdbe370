#ifndef DISTINV_SCAN_HPP
#define DISTINV_SCAN_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace distinv {

// Parallel scan kernels over enumeration spaces, plus serial reference
// implementations under distinv::serial. Results are deterministic and
// independent of the worker count: work is split into fixed blocks and
// per-block results are reassembled in block order.

inline int resolve_jobs(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

inline constexpr std::uint64_t kScanBlock = 1 << 14;

namespace serial {

// WorkerFactory: callable returning a worker; worker(idx) -> bool.
template <class WorkerFactory>
std::vector<std::uint64_t> collect_passing(std::uint64_t total, WorkerFactory&& make) {
    auto worker = make();
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < total; ++i) {
        if (worker(i)) out.push_back(i);
    }
    return out;
}

template <class Item, class Fn>
auto map_block(const std::vector<Item>& items, Fn&& fn)
    -> std::vector<decltype(fn(items[0]))> {
    std::vector<decltype(fn(items[0]))> out;
    out.reserve(items.size());
    for (const auto& it : items) out.push_back(fn(it));
    return out;
}

} // namespace serial

template <class WorkerFactory>
std::vector<std::uint64_t> collect_passing(std::uint64_t total, int jobs, WorkerFactory&& make) {
#ifdef _OPENMP
    const int threads = resolve_jobs(jobs);
    if (threads > 1 && total > kScanBlock) {
        const std::uint64_t nblocks = (total + kScanBlock - 1) / kScanBlock;
        std::vector<std::vector<std::uint64_t>> parts(nblocks);
#pragma omp parallel num_threads(threads)
        {
            auto worker = make();
#pragma omp for schedule(dynamic, 1)
            for (long long b = 0; b < static_cast<long long>(nblocks); ++b) {
                const std::uint64_t lo = static_cast<std::uint64_t>(b) * kScanBlock;
                const std::uint64_t hi = std::min(total, lo + kScanBlock);
                auto& part = parts[b];
                for (std::uint64_t i = lo; i < hi; ++i) {
                    if (worker(i)) part.push_back(i);
                }
            }
        }
        std::size_t n = 0;
        for (const auto& p : parts) n += p.size();
        std::vector<std::uint64_t> out;
        out.reserve(n);
        for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
        return out;
    }
#endif
    (void)jobs;
    return serial::collect_passing(total, std::forward<WorkerFactory>(make));
}

// Applies fn to every item of a materialized block, returning results in item
// order. fn must be safe to call concurrently on distinct items.
template <class Item, class Fn>
auto map_block(const std::vector<Item>& items, int jobs, Fn&& fn)
    -> std::vector<decltype(fn(items[0]))> {
#ifdef _OPENMP
    const int threads = resolve_jobs(jobs);
    if (threads > 1 && items.size() > 1) {
        std::vector<decltype(fn(items[0]))> out(items.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
        for (long long i = 0; i < static_cast<long long>(items.size()); ++i) {
            out[i] = fn(items[i]);
        }
        return out;
    }
#endif
    (void)jobs;
    return serial::map_block(items, std::forward<Fn>(fn));
}

// Least item index failing the test, if any. Results are collected as char,
// not bool: writing adjacent vector<bool> bits from different threads races.
template <class Item, class Test>
std::optional<std::size_t> first_failure_in_block(const std::vector<Item>& items, int jobs,
                                                  Test&& test) {
    const auto flags =
        map_block(items, jobs, [&](const Item& it) { return static_cast<char>(test(it)); });
    for (std::size_t i = 0; i < flags.size(); ++i) {
        if (!flags[i]) return i;
    }
    return std::nullopt;
}

} // namespace distinv

#endif
