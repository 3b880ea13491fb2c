#include "hypergeo/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "hypergeo/distribution.hpp"
#include "hypergeo/error.hpp"

namespace hypergeo {

namespace {

Rational count(std::uint64_t v) { return Rational(mpz_class(static_cast<unsigned long>(v)), mpz_class(1)); }

double clamp_probability(double v) { return std::clamp(v, 0.0, 1.0); }

std::int64_t to_threshold(const mpz_class& v) {
    if (!v.fits_slong_p()) throw DomainError("threshold out of 64-bit range");
    return static_cast<std::int64_t>(v.get_si());
}

void require_draws(const Params& params) {
    if (params.draws() == 0) throw DegenerateError("deviation is undefined for zero draws");
}

Params flipped(const Params& params) { return Params(params.population(), params.blacks(), params.draws()); }

}  // namespace

std::string_view to_string(TailSide side) { return side == TailSide::upper ? "upper" : "lower"; }

std::string_view to_string(BoundForm form) { return form == BoundForm::hoeffding ? "hoeffding" : "relaxed"; }

Rational white_fraction(const Params& params) {
    if (params.population() == 0) return Rational(0);
    return count(params.whites()) / count(params.population());
}

Rational t_from_k(const Params& params, std::int64_t k) {
    require_draws(params);
    return Rational(k) / count(params.draws()) - white_fraction(params);
}

Rational t_from_k_prime(const Params& params, std::int64_t k_prime) {
    require_draws(params);
    return (mean(params) - Rational(k_prime)) / count(params.draws());
}

std::int64_t threshold_from_t(const Params& params, const Rational& t, TailSide side) {
    const Rational n = count(params.draws());
    const Rational p = white_fraction(params);
    if (side == TailSide::upper) return to_threshold(((p + t) * n).ceil());
    return to_threshold(((p - t) * n).floor());
}

BoundValue hoeffding_bound(const Rational& p, const Rational& t, std::uint64_t n) {
    if (p.sign() < 0 || p > Rational(1)) throw DomainError("white fraction outside [0, 1]: " + p.str());
    if (t.sign() < 0) return {1.0, true};
    if (n == 0 || t.is_zero()) return {1.0, false};
    const Rational q = p + t;
    const Rational one(1);
    if (q > one || p.is_zero()) return {0.0, false};
    const auto draws = static_cast<double>(n);
    if (q == one) return {clamp_probability(std::exp(draws * p.log())), false};
    // n * [q ln(p/q) + (1-q) ln((1-p)/(1-q))], every ratio formed exactly.
    const double per_draw = q.to_double() * (p / q).log() + (one - q).to_double() * ((one - p) / (one - q)).log();
    return {clamp_probability(std::exp(draws * per_draw)), false};
}

BoundValue hoeffding_bound(const Params& params, const Rational& t) {
    return hoeffding_bound(white_fraction(params), t, params.draws());
}

BoundValue relaxed_bound(const Rational& t, std::uint64_t n) {
    if (t.sign() < 0) return {1.0, true};
    const Rational exponent = Rational(-2) * t * t * count(n);
    return {clamp_probability(std::exp(exponent.to_double())), false};
}

BoundValue upper_deviation_bound(const Params& params, const Rational& t, BoundForm form) {
    if (form == BoundForm::hoeffding) return hoeffding_bound(params, t);
    return relaxed_bound(t, params.draws());
}

BoundValue lower_deviation_bound(const Params& params, const Rational& t, BoundForm form) {
    return upper_deviation_bound(flipped(params), t, form);
}

BoundValue deviation_bound(const Params& params, const Rational& t, BoundForm form, TailSide side) {
    return side == TailSide::upper ? upper_deviation_bound(params, t, form) : lower_deviation_bound(params, t, form);
}

TailSpec TailSpec::upper(const Params& params, std::int64_t k) {
    return {params, TailSide::upper, k, white_fraction(params), t_from_k(params, k)};
}

TailSpec TailSpec::lower(const Params& params, std::int64_t k_prime) {
    return {params, TailSide::lower, k_prime, white_fraction(params), t_from_k_prime(params, k_prime)};
}

}  // namespace hypergeo
