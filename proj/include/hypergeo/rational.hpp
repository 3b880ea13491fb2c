#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypergeo {

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator, so equality is structural.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const mpz_class& numerator, const mpz_class& denominator);
    explicit Rational(mpq_class value);

    /// Accepts "a", "a/b", or a decimal literal such as "-0.125" or "1e-3";
    /// decimals convert exactly ("0.1" is 1/10).
    static Rational parse(std::string_view text);
    /// Exact value of a finite double.
    static Rational from_double(double value);

    /// "a" when the denominator is 1, otherwise "a/b".
    std::string str() const;

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& value() const { return value_; }

    /// Nearest double (round half to even).
    double to_double() const;
    /// Natural logarithm; requires a positive value.
    double log() const;

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    /// Smallest integer >= value / largest integer <= value.
    mpz_class ceil() const;
    mpz_class floor() const;

    Rational operator-() const { return Rational(mpq_class(-value_)); }
    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class value_{0};
};

/// Natural logarithm of a positive big integer, accurate to double precision
/// for magnitudes far outside the double range.
double log_of(const mpz_class& value);

}  // namespace hypergeo
