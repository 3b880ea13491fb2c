#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hypergeo/bounds.hpp"
#include "hypergeo/distribution.hpp"
#include "hypergeo/params.hpp"
#include "hypergeo/rational.hpp"

namespace hypergeo {

/// Float-side tolerance of the soundness chain.
inline constexpr double kSoundnessTolerance = 1e-12;

/// Parameter sweep. Empty whites/draws/thresholds lists mean "all valid";
/// for thresholds that is every k with t >= 0 (upper: ceil(nM/N)..n,
/// lower: 0..floor(nM/N)). Tuples violating Params invariants and urns with
/// n = 0 are skipped.
struct GridSpec {
    std::uint64_t population_min = 0;
    std::uint64_t population_max = 0;
    std::vector<std::uint64_t> whites;
    std::vector<std::uint64_t> draws;
    std::vector<std::int64_t> thresholds;
    TailSide side = TailSide::upper;
    unsigned threads = 0;
};

struct VerifyRow {
    Params params;
    TailSide side;
    std::int64_t k;
    Rational t;
    bool vacuous;
    ExactProb exact_tail;
    double exact_tail_float;
    double hoeffding;
    double relaxed;
    double slack_hoeffding;
    double slack_relaxed;
    bool sound;
};

struct VerifySummary {
    std::uint64_t rows = 0;
    std::uint64_t violations = 0;
    std::uint64_t vacuous = 0;
    double max_slack_hoeffding = 0.0;
    double max_slack_relaxed = 0.0;
    double min_slack_hoeffding = 0.0;
};

struct VerifyReport {
    TailSide side = TailSide::upper;
    std::vector<VerifyRow> rows;
    VerifySummary summary;
};

/// Evaluates one (params, side, k) point: exact tail, both bounds, slack and
/// the soundness flag. Requires n >= 1.
VerifyRow verify_point(const Params& params, TailSide side, std::int64_t k);

/// Rows in lexicographic (N, M, n, k) order regardless of thread count.
/// Throws DomainError when population_min > population_max.
VerifyReport grid_verify(const GridSpec& spec);

}  // namespace hypergeo
