#include "hypergeo/params.hpp"

#include <algorithm>
#include <limits>

#include "hypergeo/error.hpp"

namespace hypergeo {

Params::Params(std::uint64_t population, std::uint64_t whites, std::uint64_t draws)
    : population_(population), whites_(whites), draws_(draws) {
    constexpr auto cap = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (population > cap) throw DomainError("population exceeds INT64_MAX");
    if (whites > population) throw DomainError("whites exceed population: " + str());
    if (draws > population) throw DomainError("draws exceed population: " + str());
}

std::string Params::str() const {
    return "N=" + std::to_string(population_) + " M=" + std::to_string(whites_) + " n=" + std::to_string(draws_);
}

Support support(const Params& params) {
    const auto n = static_cast<std::int64_t>(params.draws());
    const auto whites = static_cast<std::int64_t>(params.whites());
    const auto blacks = static_cast<std::int64_t>(params.blacks());
    return {std::max<std::int64_t>(0, n - blacks), std::min(n, whites)};
}

}  // namespace hypergeo
