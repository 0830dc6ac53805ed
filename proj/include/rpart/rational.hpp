#pragma once

// Exact rational scalars over GMP.
//
// Every Rational is kept in canonical form: denominator > 0 and
// gcd(|num|, den) = 1. Zero is 0/1. Text form is always "num/den".

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

namespace rpart {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : v_(static_cast<long>(value)) {}  // NOLINT
    explicit Rational(const BigInt& value) : v_(value) {}

    /// Throws std::domain_error when den == 0.
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    /// Parses "num/den" or a bare integer "n". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    const BigInt& num() const { return v_.get_num(); }
    const BigInt& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) <=> 0;
    }

    std::string to_string() const;

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// q^e for any integer e; negative exponents need q != 0.
Rational pow(const Rational& base, long exponent);

Rational abs(const Rational& q);

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// j! / (parts[0]! ... parts[r-1]!). Throws std::invalid_argument if the
/// parts are negative or do not sum to j.
BigInt multinomial(long j, std::span<const long> parts);

BigInt factorial(long n);

}  // namespace rpart
