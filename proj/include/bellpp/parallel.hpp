#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "bellpp/random.hpp"

namespace bellpp {

/// Fixed reduction granularity. Chunk boundaries depend only on the sample
/// count, never on the worker count, so the merge tree (and therefore every
/// rounding decision) is identical for any parallelism level.
inline constexpr std::uint64_t kReductionChunk = 8192;

/// Deterministic parallel map-reduce over sample indices [0, samples).
/// Sample i draws from substream stream_base + i. `make` builds an empty
/// accumulator; `body(rng, acc)` folds one sample; partial accumulators are
/// merged in chunk order. Acc needs merge(const Acc&).
template <class Factory, class PerSample>
auto sample_reduce(std::uint64_t seed, std::uint64_t stream_base, std::uint64_t samples,
                   int workers, Factory&& make, PerSample&& body) {
    using Acc = decltype(make());
    const std::uint64_t nchunks = (samples + kReductionChunk - 1) / kReductionChunk;

    std::vector<Acc> partials;
    partials.reserve(nchunks);
    for (std::uint64_t c = 0; c < nchunks; ++c) partials.push_back(make());

    std::atomic<std::uint64_t> next{0};
    auto run_chunks = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= nchunks) break;
            const std::uint64_t begin = c * kReductionChunk;
            const std::uint64_t end = std::min(samples, begin + kReductionChunk);
            Acc& acc = partials[c];
            for (std::uint64_t i = begin; i < end; ++i) {
                RandomStream rng(seed, stream_base + i);
                body(rng, acc);
            }
        }
    };

    if (workers <= 1 || nchunks <= 1) {
        run_chunks();
    } else {
        std::vector<std::thread> pool;
        const int nthreads = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), nchunks));
        pool.reserve(static_cast<std::size_t>(nthreads));
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(run_chunks);
        for (auto& th : pool) th.join();
    }

    Acc total = make();
    for (const Acc& p : partials) total.merge(p);
    return total;
}

}  // namespace bellpp
