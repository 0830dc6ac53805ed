#pragma once

// Seeded random exact values for identity checks.

#include "rpart/matrix.hpp"
#include "rpart/polynomial.hpp"
#include "rpart/rational.hpp"

#include <random>

namespace rpart {

/// Numerator in [-bound, bound], denominator in [1, bound].
inline Rational random_rational(std::mt19937_64& rng, long bound = 50) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return Rational(num(rng), den(rng));
}

/// Exactly `degree` (nonzero leading coefficient) unless degree < 0.
inline RatPoly random_poly(std::mt19937_64& rng, int degree, long bound = 20) {
    if (degree < 0) return {};
    std::vector<Rational> c(degree + 1);
    for (auto& q : c) q = random_rational(rng, bound);
    while (c.back().is_zero()) c.back() = random_rational(rng, bound);
    return RatPoly(std::move(c));
}

inline RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 20) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng, bound);
    }
    return m;
}

}  // namespace rpart
