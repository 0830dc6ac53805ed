#pragma once

#include "rpart/polynomial.hpp"
#include "rpart/rational.hpp"

#include <compare>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace rpart {

/// Memoized Bernoulli numbers (B_1 = -1/2) and Bernoulli polynomials.
///
/// Tables only grow. An extension builds a new table from the current one
/// and publishes it under the lock, so a reader either sees the old table
/// or the complete new one.
class BernoulliCache {
public:
    static BernoulliCache& global();

    Rational number(std::size_t n);
    RatPoly poly(std::size_t n);

    /// Number of B_n currently memoized.
    std::size_t size() const;

private:
    struct Table {
        std::vector<Rational> numbers;
        std::vector<RatPoly> polys;
    };

    std::shared_ptr<const Table> snapshot_covering(std::size_t n);

    mutable std::mutex mu_;
    std::shared_ptr<const Table> table_ = std::make_shared<const Table>();
};

/// B_n via sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1.
Rational bernoulli_number(long n);

/// B_n(x) = sum_k C(n, k) B_{n-k} x^k.
RatPoly bernoulli_poly(long n);

/// 2-adic valuation, with a distinguished value for v2(0) = -infinity.
class Valuation {
public:
    static Valuation neg_infinity() { return Valuation(); }
    explicit Valuation(long v) : finite_(true), value_(v) {}

    bool is_finite() const { return finite_; }
    /// Throws std::logic_error for -infinity.
    long value() const;

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const;

private:
    Valuation() = default;
    bool finite_ = false;
    long value_ = 0;
};

Valuation v2(const BigInt& n);
Valuation v2(const Rational& q);

/// Product of the primes p with (p - 1) | n. Throws std::invalid_argument
/// unless n is even and n >= 2.
BigInt staudt_clausen_denominator(long n);

}  // namespace rpart
