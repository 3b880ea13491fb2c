#pragma once

#include <cstdint>
#include <random>

#include "hypergeo/params.hpp"

namespace hypergeo {

/// Seeded stream of uniform integers. The engine is std::mt19937_64, whose
/// output sequence is fixed by the standard; bounded draws use Lemire's
/// multiply-and-reject so the mapping is identical on every platform.
class UrnRng {
public:
    explicit UrnRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Replicates per block; block b always runs on block_seed(seed, b).
inline constexpr std::uint64_t kReplicateBlock = 4096;

/// SplitMix64 finalizer applied to seed + (block + 1) * golden gamma.
std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block);

struct SampleConfig {
    std::uint64_t seed = 0;
    std::uint64_t replicates = 1;
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct TailEstimate {
    double point_estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t replicates = 0;
    std::uint64_t hits = 0;
};

/// One pass of n sequential draws without replacement: a white ball comes
/// out with probability (whites left) / (balls left). Returns the white count.
std::int64_t draw_once(const Params& params, UrnRng& rng);

/// Fraction of replicates with at least k whites. The result depends only on
/// (params, k, seed, replicates), never on the thread count.
/// Throws DomainError when replicates is 0.
TailEstimate estimate_upper_tail(const Params& params, std::int64_t k, const SampleConfig& config);

}  // namespace hypergeo
