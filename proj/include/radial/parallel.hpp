#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace radial {

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Work items must
/// be independent; callers keep determinism by writing results into slot i.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
    if (workers <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    const unsigned spawn = static_cast<unsigned>(
        std::min<std::size_t>(workers, count));
    pool.reserve(spawn);
    for (unsigned t = 0; t < spawn; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace radial
