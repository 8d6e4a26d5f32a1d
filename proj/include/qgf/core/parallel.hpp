#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace qgf {

/// Fixed block size used for all parallel path loops. Keeping the block
/// decomposition independent of the worker count makes reductions bitwise
/// deterministic: workers fill per-block slots, the caller combines the
/// slots in block order.
inline constexpr std::ptrdiff_t kPathBlock = 2048;

inline std::ptrdiff_t block_count(std::ptrdiff_t n, std::ptrdiff_t block = kPathBlock) {
    return (n + block - 1) / block;
}

/// Runs f(block_index, begin, end) over [0, n) split into fixed-size blocks.
/// Blocks are distributed round-robin over `threads` workers; with
/// threads <= 1 everything runs inline on the calling thread.
template <typename F>
void parallel_blocks(std::ptrdiff_t n, int threads, F&& f,
                     std::ptrdiff_t block = kPathBlock) {
    const std::ptrdiff_t nblocks = block_count(n, block);
    auto run = [&](std::ptrdiff_t first_block, std::ptrdiff_t stride) {
        for (std::ptrdiff_t b = first_block; b < nblocks; b += stride) {
            const std::ptrdiff_t lo = b * block;
            const std::ptrdiff_t hi = std::min(n, lo + block);
            f(b, lo, hi);
        }
    };
    if (threads <= 1 || nblocks <= 1) {
        run(0, 1);
        return;
    }
    const int workers = static_cast<int>(std::min<std::ptrdiff_t>(threads, nblocks));
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t)
        pool.emplace_back(run, static_cast<std::ptrdiff_t>(t), static_cast<std::ptrdiff_t>(workers));
    for (auto& th : pool) th.join();
}

} // namespace qgf
