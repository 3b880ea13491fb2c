#pragma once

#include <cstdint>

#include "hypergeo/params.hpp"

namespace hypergeo {

/// Argument bundle for a single pmf evaluation.
struct PmfPoint {
    Params params;
    std::int64_t i;

    friend bool operator==(const PmfPoint&, const PmfPoint&) = default;
};

// Each transform maps a point to another with identical pmf. All three are
// involutions and total: an image white count outside the support just means
// both sides have probability zero.

/// Swap colours: (N, M, n, i) -> (N, N-M, n, n-i).
PmfPoint color_flip(const PmfPoint& point);

/// Swap drawn and undrawn balls: (N, M, n, i) -> (N, M, N-n, M-i).
PmfPoint drawn_swap(const PmfPoint& point);

/// Swap the roles of "white" and "drawn": (N, M, n, i) -> (N, n, M, i).
PmfPoint role_swap(const PmfPoint& point);

}  // namespace hypergeo
