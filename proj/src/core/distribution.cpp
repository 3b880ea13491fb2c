#include "hypergeo/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "hypergeo/error.hpp"

namespace hypergeo {

namespace {

__extension__ typedef unsigned __int128 uint128;

constexpr std::uint64_t kLogFactorialTableSize = 1u << 16;

// Terms this far below the peak contribute < N * e^-64 relative mass.
constexpr double kLogTailCutoff = 64.0;

long double lgamma_ext(long double x) {
    int sign = 0;
    return lgammal_r(x, &sign);
}

const std::vector<long double>& log_factorial_table() {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(kLogFactorialTableSize);
        t[0] = 0.0L;
        t[1] = 0.0L;
        for (std::uint64_t k = 2; k < kLogFactorialTableSize; ++k) {
            t[k] = lgamma_ext(static_cast<long double>(k) + 1.0L);
        }
        return t;
    }();
    return table;
}

// Pieces of ln pmf that do not depend on i, so a whole support row and a
// single point share one evaluation order (and agree bit for bit).
struct LogPmfTerms {
    std::uint64_t whites;
    std::uint64_t blacks;
    std::uint64_t draws;
    long double constant;

    explicit LogPmfTerms(const Params& p)
        : whites(p.whites()),
          blacks(p.blacks()),
          draws(p.draws()),
          constant(log_factorial(p.whites()) + log_factorial(p.blacks()) -
                   log_binomial(p.population(), static_cast<std::int64_t>(p.draws()))) {}

    // Caller guarantees i lies in the support.
    double at(std::int64_t i) const {
        const auto u = static_cast<std::uint64_t>(i);
        const long double v = constant - log_factorial(u) - log_factorial(whites - u) -
                              log_factorial(draws - u) - log_factorial(blacks - draws + u);
        return static_cast<double>(v);
    }
};

// Sum over i in [a, b] of C(M, i) C(N-M, n-i); [a, b] must lie inside the support.
mpz_class count_draws(const Params& params, std::int64_t a, std::int64_t b) {
    mpz_class total = 0;
    if (a > b) return total;
    const auto whites = static_cast<std::int64_t>(params.whites());
    const auto blacks = static_cast<std::int64_t>(params.blacks());
    const auto n = static_cast<std::int64_t>(params.draws());
    mpz_class white_ways = binomial(whites, a);
    mpz_class black_ways = binomial(blacks, n - a);
    for (std::int64_t i = a;; ++i) {
        total += white_ways * black_ways;
        if (i == b) break;
        // C(M, i+1) = C(M, i) (M-i)/(i+1);  C(B, n-i-1) = C(B, n-i) (n-i)/(B-n+i+1)
        mpz_mul_ui(white_ways.get_mpz_t(), white_ways.get_mpz_t(), static_cast<unsigned long>(whites - i));
        mpz_divexact_ui(white_ways.get_mpz_t(), white_ways.get_mpz_t(), static_cast<unsigned long>(i + 1));
        mpz_mul_ui(black_ways.get_mpz_t(), black_ways.get_mpz_t(), static_cast<unsigned long>(n - i));
        mpz_divexact_ui(black_ways.get_mpz_t(), black_ways.get_mpz_t(),
                        static_cast<unsigned long>(blacks - n + i + 1));
    }
    return total;
}

ExactProb ratio_of_draws(const Params& params, const mpz_class& favourable) {
    return ExactProb(Rational(favourable, binomial(static_cast<std::int64_t>(params.population()),
                                                   static_cast<std::int64_t>(params.draws()))));
}

// ln of sum_{i=a}^{b} pmf(i), walking outward from the largest term.
LogProb log_sum_range(const Params& params, std::int64_t a, std::int64_t b) {
    if (a > b) return LogProb::zero();
    const Support s = support(params);
    const LogPmfTerms terms(params);

    const uint128 numer = static_cast<uint128>(params.draws() + 1) * (params.whites() + 1);
    const auto mode = static_cast<std::int64_t>(numer / (params.population() + 2));
    const std::int64_t start = std::clamp(std::clamp(mode, s.lo, s.hi), a, b);

    const double peak = terms.at(start);
    long double acc = 1.0L;
    for (std::int64_t i = start + 1; i <= b; ++i) {
        const double d = terms.at(i) - peak;
        if (d < -kLogTailCutoff) break;
        acc += std::exp(static_cast<long double>(d));
    }
    for (std::int64_t i = start - 1; i >= a; --i) {
        const double d = terms.at(i) - peak;
        if (d < -kLogTailCutoff) break;
        acc += std::exp(static_cast<long double>(d));
    }
    return LogProb(peak + static_cast<double>(std::log(acc)));
}

}  // namespace

ExactProb::ExactProb(Rational value) : value_(std::move(value)) {
    if (value_.sign() < 0 || value_ > Rational(1)) {
        throw DomainError("probability outside [0, 1]: " + value_.str());
    }
}

double ExactProb::log() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return value_.log();
}

LogProb::LogProb(double log_value) : log_value_(std::min(log_value, 0.0)) {
    if (std::isnan(log_value)) throw DomainError("log-probability is NaN");
}

double LogProb::probability() const { return std::exp(log_value_); }

mpz_class binomial(std::int64_t a, std::int64_t b) {
    mpz_class r = 0;
    if (a < 0 || b < 0 || b > a) return r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return r;
}

long double log_factorial(std::uint64_t k) {
    if (k < kLogFactorialTableSize) return log_factorial_table()[k];
    return lgamma_ext(static_cast<long double>(k) + 1.0L);
}

long double log_binomial(std::uint64_t a, std::int64_t b) {
    if (b < 0 || static_cast<std::uint64_t>(b) > a) return -std::numeric_limits<long double>::infinity();
    const auto ub = static_cast<std::uint64_t>(b);
    return log_factorial(a) - log_factorial(ub) - log_factorial(a - ub);
}

ExactProb pmf(const Params& params, std::int64_t i) {
    if (!support(params).contains(i)) return ExactProb::zero();
    return ratio_of_draws(params, count_draws(params, i, i));
}

LogProb pmf_log(const Params& params, std::int64_t i) {
    if (!support(params).contains(i)) return LogProb::zero();
    return LogProb(LogPmfTerms(params).at(i));
}

std::vector<LogProb> pmf_log_support(const Params& params) {
    const Support s = support(params);
    const LogPmfTerms terms(params);
    std::vector<LogProb> row;
    row.reserve(static_cast<std::size_t>(s.hi - s.lo + 1));
    for (std::int64_t i = s.lo; i <= s.hi; ++i) row.emplace_back(terms.at(i));
    return row;
}

Rational mean(const Params& params) {
    if (params.population() == 0) return Rational(0);
    return Rational(mpz_class(static_cast<unsigned long>(params.draws())) * static_cast<unsigned long>(params.whites()),
                    mpz_class(static_cast<unsigned long>(params.population())));
}

Rational variance(const Params& params) {
    const std::uint64_t big_n = params.population();
    if (big_n <= 1) return Rational(0);
    const auto z = [](std::uint64_t v) { return mpz_class(static_cast<unsigned long>(v)); };
    const mpz_class num = z(params.draws()) * z(params.whites()) * z(params.blacks()) * z(big_n - params.draws());
    const mpz_class den = z(big_n) * z(big_n) * z(big_n - 1);
    return Rational(num, den);
}

ExactProb upper_tail(const Params& params, std::int64_t k) {
    const Support s = support(params);
    if (k <= s.lo) return ExactProb::one();
    if (k > s.hi) return ExactProb::zero();
    return ratio_of_draws(params, count_draws(params, k, s.hi));
}

ExactProb lower_tail(const Params& params, std::int64_t k_prime) {
    const Support s = support(params);
    if (k_prime < s.lo) return ExactProb::zero();
    if (k_prime >= s.hi) return ExactProb::one();
    return ratio_of_draws(params, count_draws(params, s.lo, k_prime));
}

LogProb upper_tail_log(const Params& params, std::int64_t k) {
    const Support s = support(params);
    if (k <= s.lo) return LogProb::one();
    if (k > s.hi) return LogProb::zero();
    return log_sum_range(params, k, s.hi);
}

LogProb lower_tail_log(const Params& params, std::int64_t k_prime) {
    const Support s = support(params);
    if (k_prime < s.lo) return LogProb::zero();
    if (k_prime >= s.hi) return LogProb::one();
    return log_sum_range(params, s.lo, k_prime);
}

}  // namespace hypergeo
