#include "rpart/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace rpart {

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view part) {
        std::string s(part);
        if (s.empty()) throw std::invalid_argument("empty integer in rational '" + std::string(text) + "'");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad rational '" + std::string(text) + "'");
        }
        if (s[0] == '+') s.erase(0, 1);
        return BigInt(s, 10);
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational out;
    out.v_ = -v_;
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    v_ += rhs.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    v_ -= rhs.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    v_ *= rhs.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= rhs.v_;
    return *this;
}

std::string Rational::to_string() const {
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base.is_zero()) throw std::domain_error("zero to a negative power");
        return Rational(1) / pow(base, -exponent);
    }
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

BigInt factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

BigInt multinomial(long j, std::span<const long> parts) {
    long total = 0;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("multinomial part is negative");
        total += p;
    }
    if (total != j) throw std::invalid_argument("multinomial parts do not sum to j");
    BigInt out = 1;
    long remaining = j;
    for (long p : parts) {
        out *= binomial(remaining, p);
        remaining -= p;
    }
    return out;
}

}  // namespace rpart
