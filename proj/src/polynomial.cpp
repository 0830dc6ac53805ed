#include "rpart/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace rpart {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rational& c) { return RatPoly(std::vector<Rational>{c}); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t power) {
    std::vector<Rational> v(power + 1);
    v[power] = c;
    return RatPoly(std::move(v));
}

RatPoly RatPoly::identity() { return monomial(1, 1); }

void RatPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RatPoly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

const Rational& RatPoly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return c_.back();
}

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

RatPoly RatPoly::operator-() const {
    RatPoly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] += rhs.c_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size());
    for (std::size_t k = 0; k < rhs.c_.size(); ++k) c_[k] -= rhs.c_[k];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> out(c_.size() + rhs.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) out[i + j] += c_[i] * rhs.c_[j];
    }
    c_ = std::move(out);
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& s) {
    if (s.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

RatPoly RatPoly::shifted(const Rational& c) const {
    // sum_k a_k (x+c)^k = sum_i x^i sum_{k>=i} a_k C(k,i) c^(k-i)
    if (c.is_zero() || c_.size() <= 1) return *this;
    const std::size_t n = c_.size();
    std::vector<Rational> powers(n);
    powers[0] = 1;
    for (std::size_t k = 1; k < n; ++k) powers[k] = powers[k - 1] * c;
    std::vector<Rational> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (c_[k].is_zero()) continue;
        for (std::size_t i = 0; i <= k; ++i) {
            out[i] += c_[k] * Rational(binomial(static_cast<long>(k), static_cast<long>(i))) * powers[k - i];
        }
    }
    return RatPoly(std::move(out));
}

RatPoly RatPoly::composed_affine(const Rational& scale, const Rational& offset) const {
    // p(s x + o) = q(x + o/s) with q(x) = p(s x), unless s = 0.
    if (scale.is_zero()) return constant((*this)(offset));
    std::vector<Rational> scaled = c_;
    Rational f = 1;
    for (auto& c : scaled) {
        c *= f;
        f *= scale;
    }
    return RatPoly(std::move(scaled)).shifted(offset / scale);
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return RatPoly(std::move(out));
}

RatPoly RatPoly::antiderivative() const {
    if (c_.empty()) return {};
    std::vector<Rational> out(c_.size() + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) out[k + 1] = c_[k] / Rational(static_cast<long>(k + 1));
    return RatPoly(std::move(out));
}

std::string RatPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k] << ")";
        if (k >= 1) os << "*x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

RatPoly pow(const RatPoly& base, unsigned exponent) {
    RatPoly out = RatPoly::constant(1);
    RatPoly b = base;
    while (exponent != 0) {
        if (exponent & 1u) out *= b;
        exponent >>= 1;
        if (exponent != 0) b *= b;
    }
    return out;
}

Rational poly_eval(const RatPoly& p, const Rational& x) { return p(x); }

Rational poly_integrate(const RatPoly& p, const Rational& lo, const Rational& hi) {
    RatPoly anti = p.antiderivative();
    return anti(hi) - anti(lo);
}

RatPoly falling_factorial(long count, const Rational& shift, const Rational& scale) {
    if (count < 0) throw std::invalid_argument("falling factorial with negative length");
    RatPoly out = RatPoly::constant(1);
    for (long i = 0; i < count; ++i) out *= RatPoly{shift - Rational(i), scale};
    return out;
}

RatPoly forward_diff(const RatPoly& p, const Rational& step) { return p.shifted(step) - p; }

}  // namespace rpart
