#include "hypergeo/symmetry.hpp"

namespace hypergeo {

PmfPoint color_flip(const PmfPoint& point) {
    const Params& p = point.params;
    return {Params(p.population(), p.blacks(), p.draws()), static_cast<std::int64_t>(p.draws()) - point.i};
}

PmfPoint drawn_swap(const PmfPoint& point) {
    const Params& p = point.params;
    return {Params(p.population(), p.whites(), p.population() - p.draws()),
            static_cast<std::int64_t>(p.whites()) - point.i};
}

PmfPoint role_swap(const PmfPoint& point) {
    const Params& p = point.params;
    return {Params(p.population(), p.draws(), p.whites()), point.i};
}

}  // namespace hypergeo
