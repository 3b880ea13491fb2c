#pragma once

#include <cstdint>
#include <string_view>

#include "hypergeo/params.hpp"
#include "hypergeo/rational.hpp"

namespace hypergeo {

enum class TailSide { upper, lower };
enum class BoundForm { hoeffding, relaxed };

std::string_view to_string(TailSide side);
std::string_view to_string(BoundForm form);

/// A ceiling on a tail probability, always in [0, 1]. `vacuous` marks the
/// trivial bound 1 returned for a negative deviation.
struct BoundValue {
    double value = 1.0;
    bool vacuous = false;
};

/// p = M / N (0 for an empty urn).
Rational white_fraction(const Params& params);

/// t = k/n - M/N. Throws DegenerateError when n = 0.
Rational t_from_k(const Params& params, std::int64_t k);

/// t = (E[i] - k')/n, the lower-side deviation. Throws DegenerateError when n = 0.
Rational t_from_k_prime(const Params& params, std::int64_t k_prime);

/// Integer threshold for a real deviation: ceil((p+t) n) on the upper side,
/// floor((p-t) n) on the lower side. Tails are monotone in the threshold, so
/// the exact tail at this integer is still covered by the bound at t.
std::int64_t threshold_from_t(const Params& params, const Rational& t, TailSide side);

/// ((p/(p+t))^(p+t) ((1-p)/(1-p-t))^(1-p-t))^n, evaluated in log space.
/// Boundary conventions: t = 0 or n = 0 gives 1; p = 0 with t > 0 gives 0;
/// t = 1-p gives p^n; t > 1-p gives 0.
BoundValue hoeffding_bound(const Rational& p, const Rational& t, std::uint64_t n);
BoundValue hoeffding_bound(const Params& params, const Rational& t);

/// exp(-2 t^2 n).
BoundValue relaxed_bound(const Rational& t, std::uint64_t n);

/// Ceiling on Pr[i >= E[i] + t n].
BoundValue upper_deviation_bound(const Params& params, const Rational& t, BoundForm form);

/// Ceiling on Pr[i <= E[i] - t n], obtained by evaluating the upper bound on
/// the colour-flipped urn (p' = (N-M)/N).
BoundValue lower_deviation_bound(const Params& params, const Rational& t, BoundForm form);

BoundValue deviation_bound(const Params& params, const Rational& t, BoundForm form, TailSide side);

/// Threshold and deviation of one tail query. On the upper side
/// threshold = (p + t) n exactly; on the lower side threshold = (p - t) n.
struct TailSpec {
    Params params;
    TailSide side;
    std::int64_t threshold;
    Rational p;
    Rational t;

    static TailSpec upper(const Params& params, std::int64_t k);
    static TailSpec lower(const Params& params, std::int64_t k_prime);
};

}  // namespace hypergeo
