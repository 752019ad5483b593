#pragma once

// Counter-based random streams and a deterministic parallel counting helper.
// Every draw is a pure function of (seed, sample index, draw number, attempt),
// so results never depend on scheduling or on the number of workers.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hypack {

struct SamplePlan {
    std::uint64_t seed = 0x5eedULL;
    std::size_t samples = 100000;
    /// 0 = plain sampling; B > 0 splits the radial CDF into B equal-probability bands.
    std::size_t radial_bands = 0;
    /// Worker threads, 0 = hardware concurrency. Never changes the result.
    unsigned workers = 0;
};

/// SplitMix64 finaliser.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Uniform double in the open interval (0, 1).
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint32_t draw,
                                 std::uint32_t attempt = 0) {
    std::uint64_t key = mix64(seed + 0x9e3779b97f4a7c15ULL);
    key = mix64(key ^ (index * 0xd1b54a32d192ed03ULL));
    key = mix64(key ^ ((static_cast<std::uint64_t>(attempt) << 32) | draw));
    return (static_cast<double>(key >> 11) + 0.5) * 0x1.0p-53;
}

inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Counts hits of `hit(i)` for i in [0, n), split by stratum i % strata.
/// Integer accumulation keeps the totals identical for any worker count.
template <class Hit>
std::vector<std::uint64_t> count_by_stratum(std::size_t n, std::size_t strata, unsigned workers, Hit&& hit) {
    strata = std::max<std::size_t>(strata, 1);
    const unsigned nw = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(n, 1)));
    std::vector<std::vector<std::uint64_t>> partial(nw, std::vector<std::uint64_t>(strata, 0));
    std::vector<std::exception_ptr> errors(nw);
    auto run = [&](unsigned w) {
        const std::size_t lo = n * w / nw;
        const std::size_t hi = n * (w + 1) / nw;
        auto& counts = partial[w];
        try {
            for (std::size_t i = lo; i < hi; ++i)
                if (hit(i)) ++counts[i % strata];
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (nw == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(nw);
        for (unsigned w = 0; w < nw; ++w) pool.emplace_back(run, w);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    std::vector<std::uint64_t> total(strata, 0);
    for (const auto& counts : partial)
        for (std::size_t s = 0; s < strata; ++s) total[s] += counts[s];
    return total;
}

}  // namespace hypack
