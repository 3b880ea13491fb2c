#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hypergeo/params.hpp"
#include "hypergeo/rational.hpp"

namespace hypergeo {

/// Exact probability: a canonical rational in [0, 1].
class ExactProb {
public:
    ExactProb() = default;
    /// Throws DomainError when `value` lies outside [0, 1].
    explicit ExactProb(Rational value);

    static ExactProb zero() { return ExactProb(); }
    static ExactProb one() { return ExactProb(Rational(1)); }

    const Rational& rational() const { return value_; }
    mpz_class numerator() const { return value_.numerator(); }
    mpz_class denominator() const { return value_.denominator(); }
    std::string str() const { return value_.str(); }
    double to_double() const { return value_.to_double(); }
    /// ln(value); -infinity for zero.
    double log() const;
    bool is_zero() const { return value_.is_zero(); }

    friend bool operator==(const ExactProb&, const ExactProb&) = default;
    friend auto operator<=>(const ExactProb& a, const ExactProb& b) { return a.value_ <=> b.value_; }

private:
    Rational value_;
};

/// Probability held as its natural logarithm. Zero probability is
/// represented by -infinity.
class LogProb {
public:
    LogProb() = default;
    /// Values above 0 (rounding residue) are clamped to 0.
    explicit LogProb(double log_value);

    static LogProb zero() { return LogProb(); }
    static LogProb one() { return LogProb(0.0); }

    double value() const { return log_value_; }
    bool is_zero() const { return log_value_ == -std::numeric_limits<double>::infinity(); }
    double probability() const;

private:
    double log_value_ = -std::numeric_limits<double>::infinity();
};

/// C(a, b) with C(a, b) = 0 for b < 0 or b > a.
mpz_class binomial(std::int64_t a, std::int64_t b);

/// ln(k!) in extended precision. Values up to a fixed cap come from an
/// immutable table built on first use.
long double log_factorial(std::uint64_t k);

/// ln C(a, b) in extended precision; -infinity outside 0 <= b <= a.
long double log_binomial(std::uint64_t a, std::int64_t b);

/// Probability of exactly `i` whites: C(M,i) C(N-M,n-i) / C(N,n).
ExactProb pmf(const Params& params, std::int64_t i);

/// Log-domain pmf via log-factorials.
LogProb pmf_log(const Params& params, std::int64_t i);

/// pmf_log over the whole support; element j is white count support.lo + j.
std::vector<LogProb> pmf_log_support(const Params& params);

/// n M / N; 0 for an empty urn.
Rational mean(const Params& params);

/// n M (N-M) (N-n) / (N^2 (N-1)); 0 when N <= 1.
Rational variance(const Params& params);

/// Pr[i >= k]. 1 for k <= support.lo, 0 for k > support.hi.
ExactProb upper_tail(const Params& params, std::int64_t k);

/// Pr[i <= k_prime]. Satisfies lower_tail(k') + upper_tail(k'+1) == 1.
ExactProb lower_tail(const Params& params, std::int64_t k_prime);

/// Log-domain tails for populations too large for exact arithmetic. Terms
/// more than 64 nats below the largest are dropped.
LogProb upper_tail_log(const Params& params, std::int64_t k);
LogProb lower_tail_log(const Params& params, std::int64_t k_prime);

}  // namespace hypergeo
