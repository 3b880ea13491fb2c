#include "hypergeo/sampler.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

#include "hypergeo/error.hpp"

namespace hypergeo {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t UrnRng::below(std::uint64_t bound) {
    std::uint64_t x = engine_();
    auto m = static_cast<uint128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            x = engine_();
            m = static_cast<uint128>(x) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
    std::uint64_t z = seed + (block + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t draw_once(const Params& params, UrnRng& rng) {
    std::uint64_t balls = params.population();
    std::uint64_t whites = params.whites();
    std::uint64_t drawn_white = 0;
    for (std::uint64_t step = 0; step < params.draws(); ++step) {
        if (whites == 0) break;
        if (whites == balls) {
            drawn_white += params.draws() - step;
            break;
        }
        if (rng.below(balls) < whites) {
            ++drawn_white;
            --whites;
        }
        --balls;
    }
    return static_cast<std::int64_t>(drawn_white);
}

TailEstimate estimate_upper_tail(const Params& params, std::int64_t k, const SampleConfig& config) {
    if (config.replicates == 0) throw DomainError("replicates must be at least 1");

    const std::uint64_t blocks = (config.replicates + kReplicateBlock - 1) / kReplicateBlock;
    std::vector<std::uint64_t> hits(blocks, 0);

    auto run_block = [&](std::uint64_t b) {
        UrnRng rng(block_seed(config.seed, b));
        const std::uint64_t first = b * kReplicateBlock;
        const std::uint64_t count = std::min(kReplicateBlock, config.replicates - first);
        std::uint64_t h = 0;
        for (std::uint64_t r = 0; r < count; ++r) {
            if (draw_once(params, rng) >= k) ++h;
        }
        hits[b] = h;
    };

    unsigned workers = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t b = next++; b < blocks; b = next++) run_block(b);
            });
        }
    }

    TailEstimate est;
    est.replicates = config.replicates;
    for (const std::uint64_t h : hits) est.hits += h;
    const auto reps = static_cast<double>(config.replicates);
    est.point_estimate = static_cast<double>(est.hits) / reps;
    est.std_error = std::sqrt(est.point_estimate * (1.0 - est.point_estimate) / reps);
    return est;
}

}  // namespace hypergeo
