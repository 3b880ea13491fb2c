#include "hypergeo/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstring>
#include <numbers>
#include <utility>

#include "hypergeo/error.hpp"

namespace hypergeo {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s, std::string_view original) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed number: '" + std::string(original) + "'");
    mpz_class value(std::string(s), 10);
    return negative ? mpz_class(-value) : value;
}

mpz_class pow10(unsigned long exponent) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, exponent);
    return r;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        const mpz_class exp_value = parse_integer(s.substr(e + 1), text);
        if (!exp_value.fits_slong_p() || abs(exp_value) > 100000) {
            throw ParseError("exponent out of range: '" + std::string(text) + "'");
        }
        exponent = exp_value.get_si();
        s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw ParseError("malformed number: '" + std::string(text) + "'");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        throw ParseError("malformed number: '" + std::string(text) + "'");
    }
    mpz_class digits(std::string(int_part) + std::string(frac_part), 10);
    if (negative) digits = -digits;
    exponent -= static_cast<long>(frac_part.size());
    if (exponent >= 0) return Rational(mpz_class(digits * pow10(static_cast<unsigned long>(exponent))), mpz_class(1));
    return Rational(digits, pow10(static_cast<unsigned long>(-exponent)));
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(0) {
    mpz_set_si(value_.get_num_mpz_t(), static_cast<long>(value));
}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    value_.get_num() = numerator;
    value_.get_den() = denominator;
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty number");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const mpz_class num = parse_integer(text.substr(0, slash), text);
        const mpz_class den = parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
        return Rational(num, den);
    }
    return parse_decimal(text);
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("non-finite value has no rational form");
    return Rational(mpq_class(value));
}

std::string Rational::str() const { return value_.get_str(10); }

double Rational::to_double() const {
    // get_d truncates toward zero; the nearest double is either that value or
    // its neighbour away from zero.
    const double truncated = value_.get_d();
    if (!std::isfinite(truncated)) return truncated;
    const double away = std::nextafter(truncated, sign() < 0 ? -HUGE_VAL : HUGE_VAL);
    if (!std::isfinite(away)) return truncated;
    const mpq_class gap_truncated = abs(value_ - mpq_class(truncated));
    const mpq_class gap_away = abs(mpq_class(away) - value_);
    const int c = cmp(gap_away, gap_truncated);
    if (c < 0) return away;
    if (c > 0) return truncated;
    std::uint64_t bits = 0;
    std::memcpy(&bits, &truncated, sizeof bits);
    return (bits & 1u) == 0 ? truncated : away;
}

double Rational::log() const {
    if (sign() <= 0) throw DomainError("logarithm of a non-positive rational");
    return log_of(value_.get_num()) - log_of(value_.get_den());
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.value_ / b.value_));
}

double log_of(const mpz_class& value) {
    if (value <= 0) throw DomainError("logarithm of a non-positive integer");
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

}  // namespace hypergeo
