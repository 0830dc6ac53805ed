#include "rpart/barnes.hpp"

#include "rpart/bernoulli.hpp"

#include <stdexcept>

namespace rpart {

namespace {

// Lexicographic walk over compositions of `remaining` into the parts
// [pos, r); odd Bernoulli indices >= 3 vanish and prune the branch.
void accumulate(const PartitionSpec& spec, long j, std::vector<long>& parts, std::size_t pos, long remaining,
                const std::vector<Rational>& b, Rational& sum) {
    const auto a = spec.weights();
    if (pos + 1 == a.size()) {
        parts[pos] = remaining;
        if (b[remaining].is_zero()) return;
        Rational term(multinomial(j, parts));
        for (std::size_t i = 0; i < a.size(); ++i) term *= b[parts[i]] * pow(Rational(a[i]), parts[i] - 1);
        sum += term;
        return;
    }
    for (long i = 0; i <= remaining; ++i) {
        if (b[i].is_zero()) continue;
        parts[pos] = i;
        accumulate(spec, j, parts, pos + 1, remaining - i, b, sum);
    }
}

}  // namespace

Rational barnes_number(long j, const PartitionSpec& spec) {
    if (j < 0) throw std::invalid_argument("Barnes number index must be non-negative");
    std::vector<Rational> b(j + 1);
    for (long i = 0; i <= j; ++i) b[i] = bernoulli_number(i);
    std::vector<long> parts(spec.weights().size());
    Rational sum;
    accumulate(spec, j, parts, 0, j, b, sum);
    return sum;
}

Rational barnes_number_via_series(long j, const PartitionSpec& spec) {
    if (j < 0) throw std::invalid_argument("Barnes number index must be non-negative");
    // series[n] = coefficient of z^n, truncated at z^j.
    std::vector<Rational> product(j + 1);
    product[0] = 1;
    for (long a : spec.weights()) {
        std::vector<Rational> factor(j + 1);
        for (long n = 0; n <= j; ++n) {
            factor[n] = bernoulli_number(n) * pow(Rational(a), n - 1) / Rational(factorial(n));
        }
        std::vector<Rational> next(j + 1);
        for (long p = 0; p <= j; ++p) {
            if (product[p].is_zero()) continue;
            for (long q = 0; p + q <= j; ++q) next[p + q] += product[p] * factor[q];
        }
        product = std::move(next);
    }
    return product[j] * Rational(factorial(j));
}

Rational zeta_special(long n, const PartitionSpec& spec) {
    if (n < 0) throw std::invalid_argument("zeta_special needs n >= 0");
    const long r = spec.r();
    Rational value = Rational(factorial(n), factorial(n + r)) * barnes_number(r + n, spec);
    if (r % 2 == 1) value = -value;
    if (n == 0) value -= 1;
    return value;
}

}  // namespace rpart
