#pragma once

#include "rpart/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rpart {

/// Dense univariate polynomial over Rational. Coefficient k multiplies x^k;
/// the highest stored coefficient is nonzero and the zero polynomial has no
/// coefficients (degree -1).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

    static RatPoly constant(const Rational& c);
    static RatPoly monomial(const Rational& c, std::size_t power);
    /// The polynomial x.
    static RatPoly identity();

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Zero beyond the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;
    std::span<const Rational> coefficients() const { return c_; }

    Rational operator()(const Rational& x) const;

    RatPoly operator-() const;
    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const RatPoly& rhs);
    RatPoly& operator*=(const Rational& s);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
    friend RatPoly operator*(RatPoly a, const Rational& s) { return a *= s; }
    friend RatPoly operator*(const Rational& s, RatPoly a) { return a *= s; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

    /// p(x + c), by Taylor shift.
    RatPoly shifted(const Rational& c) const;
    /// p(scale * x + offset).
    RatPoly composed_affine(const Rational& scale, const Rational& offset) const;
    RatPoly derivative() const;
    /// Antiderivative with zero constant term.
    RatPoly antiderivative() const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

RatPoly pow(const RatPoly& base, unsigned exponent);

Rational poly_eval(const RatPoly& p, const Rational& x);

/// Exact integral of p over [lo, hi].
Rational poly_integrate(const RatPoly& p, const Rational& lo, const Rational& hi);

/// (scale*x + shift)(scale*x + shift - 1)...(scale*x + shift - count + 1).
/// count == 0 gives the constant 1.
RatPoly falling_factorial(long count, const Rational& shift = 0, const Rational& scale = 1);

/// p(x + step) - p(x).
RatPoly forward_diff(const RatPoly& p, const Rational& step = 1);

}  // namespace rpart
