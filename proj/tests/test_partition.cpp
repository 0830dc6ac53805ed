#include "rpart/partition.hpp"

#include <doctest.h>

#include <numeric>

using namespace rpart;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("dp_count examples") {
    CHECK(dp_count(PartitionSpec({1, 2}), 4) == ints({1, 1, 2, 2, 3}));
    CHECK(dp_count(PartitionSpec({2, 3, 5}), 0) == ints({1}));
    CHECK(dp_count(PartitionSpec({2, 3}), 1) == ints({1, 0}));
    // repeated weights count solution vectors, not multisets
    CHECK(dp_count(PartitionSpec({1, 1}), 3) == ints({1, 2, 3, 4}));
    CHECK_THROWS(dp_count(PartitionSpec({1}), -1));
}

TEST_CASE("dp_count for all-ones weights is a binomial") {
    for (long r = 1; r <= 5; ++r) {
        const auto counts = dp_count(PartitionSpec(std::vector<long>(r, 1)), 30);
        for (long n = 0; n <= 30; ++n) CHECK(counts[n] == binomial(n + r - 1, r - 1));
    }
}

TEST_CASE("dp_count agrees with brute-force enumeration") {
    const PartitionSpec spec({2, 3, 5});
    const auto counts = dp_count(spec, 40);
    for (long n = 0; n <= 40; ++n) {
        long brute = 0;
        for (long x = 0; 2 * x <= n; ++x) {
            for (long y = 0; 2 * x + 3 * y <= n; ++y) brute += (n - 2 * x - 3 * y) % 5 == 0 ? 1 : 0;
        }
        CHECK(counts[n] == brute);
    }
}

TEST_CASE("qp_eval on hand-built tables") {
    const QuasiPolynomial one(PartitionSpec({1}), {{Rational(1)}});
    for (long n = 0; n <= 10; ++n) CHECK(qp_eval(one, n) == Rational(1));

    const QuasiPolynomial two(PartitionSpec({2}), {{Rational(0), Rational(1)}});
    for (long n = 0; n <= 10; ++n) CHECK(qp_eval(two, n) == Rational(n % 2 == 0 ? 1 : 0));
    CHECK(two.residue(0) == 2);
    CHECK(two.residue(3) == 1);

    const QuasiPolynomial ones(PartitionSpec({1, 1}), {{Rational(1)}, {Rational(1)}});
    for (long n = 0; n <= 10; ++n) CHECK(qp_eval(ones, n) == Rational(n + 1));

    CHECK_THROWS_AS(ones.coefficient(2, 1), std::out_of_range);
    CHECK_THROWS_AS(ones.coefficient(0, 0), std::out_of_range);
    CHECK_THROWS(QuasiPolynomial(PartitionSpec({1, 1}), {{Rational(1)}}));
    CHECK_THROWS(QuasiPolynomial(PartitionSpec({2}), {{Rational(1)}}));
    CHECK_THROWS(qp_eval(one, -1));
}

TEST_CASE("interpolation oracle") {
    CHECK(qp_fit_oracle(PartitionSpec({1})).coefficient(0, 1) == Rational(1));
    const QuasiPolynomial q11 = qp_fit_oracle(PartitionSpec({1, 1}));
    CHECK(q11.coefficient(1, 1) == Rational(1));
    CHECK(q11.coefficient(0, 1) == Rational(1));
    const QuasiPolynomial q2 = qp_fit_oracle(PartitionSpec({2}));
    CHECK(q2.coefficient(0, 1) == Rational(0));
    CHECK(q2.coefficient(0, 2) == Rational(1));

    for (const auto& spec : corpus_specs()) {
        const QuasiPolynomial q = qp_fit_oracle(spec);
        const long n_max = std::max(5 * spec.period(), 2 * spec.r() * spec.period());
        const auto counts = dp_count(spec, n_max);
        for (long n = 0; n <= n_max; ++n) CHECK_MESSAGE(qp_eval(q, n) == Rational(counts[n]), spec.to_string());
    }
}

TEST_CASE("leading coefficient") {
    // gcd(a) = 1: the same 1/((r-1)! a_1...a_r) in every residue class
    for (const auto& spec : corpus_specs()) {
        long g = 0;
        for (long a : spec.weights()) g = std::gcd(g, a);
        Rational expected = Rational(1) / Rational(factorial(spec.r() - 1));
        for (long a : spec.weights()) expected /= Rational(a);
        const QuasiPolynomial q = qp_fit_oracle(spec);
        for (long v = 1; v <= spec.period(); ++v) {
            const Rational want = g == 1 ? expected : (v % g == 0 ? expected * Rational(g) : Rational(0));
            CHECK_MESSAGE(q.coefficient(spec.r() - 1, v) == want, spec.to_string(), " v=", v);
        }
    }
}

TEST_CASE("json round trip") {
    const QuasiPolynomial q = qp_fit_oracle(PartitionSpec({2, 3}));
    const auto doc = to_json(q);
    CHECK(doc["schema"] == 1);
    CHECK(doc["D"] == 6);
    CHECK(doc["d"]["1"]["6"] == "1/6");
    CHECK(quasi_polynomial_from_json(nlohmann::json::parse(doc.dump())) == q);
    CHECK_THROWS(quasi_polynomial_from_json(nlohmann::json::parse(R"({"schema":2})")));
}
