#include "rpart/bernoulli.hpp"

#include <stdexcept>

namespace rpart {

BernoulliCache& BernoulliCache::global() {
    static BernoulliCache cache;
    return cache;
}

std::shared_ptr<const BernoulliCache::Table> BernoulliCache::snapshot_covering(std::size_t n) {
    std::lock_guard lock(mu_);
    if (table_->numbers.size() > n) return table_;

    auto next = std::make_shared<Table>(*table_);
    auto& b = next->numbers;
    auto& polys = next->polys;
    while (b.size() <= n) {
        const long m = static_cast<long>(b.size());
        if (m == 0) {
            b.emplace_back(1);
        } else {
            Rational acc;
            for (long k = 0; k < m; ++k) {
                if (b[k].is_zero()) continue;
                acc += Rational(binomial(m + 1, k)) * b[k];
            }
            b.push_back(-acc / Rational(m + 1));
        }
        std::vector<Rational> coeffs(m + 1);
        for (long k = 0; k <= m; ++k) coeffs[k] = Rational(binomial(m, k)) * b[m - k];
        polys.emplace_back(std::move(coeffs));
    }
    table_ = std::move(next);
    return table_;
}

Rational BernoulliCache::number(std::size_t n) { return snapshot_covering(n)->numbers[n]; }

RatPoly BernoulliCache::poly(std::size_t n) { return snapshot_covering(n)->polys[n]; }

std::size_t BernoulliCache::size() const {
    std::lock_guard lock(mu_);
    return table_->numbers.size();
}

Rational bernoulli_number(long n) {
    if (n < 0) throw std::invalid_argument("Bernoulli number index must be non-negative");
    return BernoulliCache::global().number(static_cast<std::size_t>(n));
}

RatPoly bernoulli_poly(long n) {
    if (n < 0) throw std::invalid_argument("Bernoulli polynomial index must be non-negative");
    return BernoulliCache::global().poly(static_cast<std::size_t>(n));
}

long Valuation::value() const {
    if (!finite_) throw std::logic_error("value of an infinite valuation");
    return value_;
}

std::string Valuation::to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

Valuation v2(const BigInt& n) {
    if (n == 0) return Valuation::neg_infinity();
    return Valuation(static_cast<long>(mpz_scan1(n.get_mpz_t(), 0)));
}

Valuation v2(const Rational& q) {
    if (q.is_zero()) return Valuation::neg_infinity();
    return Valuation(v2(q.num()).value() - v2(q.den()).value());
}

BigInt staudt_clausen_denominator(long n) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("von Staudt-Clausen denominator needs an even n >= 2");
    BigInt out = 1;
    for (long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        BigInt p = d + 1;
        if (mpz_probab_prime_p(p.get_mpz_t(), 30) != 0) out *= p;
    }
    return out;
}

}  // namespace rpart
