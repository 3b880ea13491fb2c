#pragma once

#include <cstdint>
#include <string>

namespace hypergeo {

/// The urn: `population` balls, of which `whites` count, and `draws` of them
/// taken without replacement. Construction enforces whites <= population and
/// draws <= population; population is capped at INT64_MAX so that every
/// derived threshold fits a signed 64-bit integer.
class Params {
public:
    Params(std::uint64_t population, std::uint64_t whites, std::uint64_t draws);

    std::uint64_t population() const { return population_; }
    std::uint64_t whites() const { return whites_; }
    std::uint64_t blacks() const { return population_ - whites_; }
    std::uint64_t draws() const { return draws_; }

    std::string str() const;

    friend bool operator==(const Params&, const Params&) = default;

private:
    std::uint64_t population_;
    std::uint64_t whites_;
    std::uint64_t draws_;
};

/// Inclusive range of white counts with nonzero probability.
struct Support {
    std::int64_t lo;
    std::int64_t hi;

    bool contains(std::int64_t i) const { return lo <= i && i <= hi; }
    friend bool operator==(const Support&, const Support&) = default;
};

/// lo = max(0, n - (N - M)), hi = min(n, M).
Support support(const Params& params);

}  // namespace hypergeo
