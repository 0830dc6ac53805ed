#include "rpart/partition.hpp"

#include "rpart/matrix.hpp"

#include <stdexcept>
#include <string>

namespace rpart {

std::vector<BigInt> dp_count(const PartitionSpec& spec, long n_max) {
    if (n_max < 0) throw std::invalid_argument("dp_count needs n_max >= 0");
    std::vector<BigInt> dp(n_max + 1);
    dp[0] = 1;
    for (long a : spec.weights()) {
        for (long s = a; s <= n_max; ++s) dp[s] += dp[s - a];
    }
    return dp;
}

QuasiPolynomial::QuasiPolynomial(PartitionSpec spec, std::vector<std::vector<Rational>> table)
    : spec_(std::move(spec)), d_(std::move(table)) {
    if (static_cast<long>(d_.size()) != spec_.r()) throw std::invalid_argument("coefficient table needs r rows");
    for (const auto& row : d_) {
        if (static_cast<long>(row.size()) != spec_.period()) {
            throw std::invalid_argument("coefficient table rows need D entries");
        }
    }
}

const Rational& QuasiPolynomial::coefficient(long m, long v) const {
    if (m < 0 || m >= spec_.r() || v < 1 || v > spec_.period()) {
        throw std::out_of_range("coefficient index (" + std::to_string(m) + "," + std::to_string(v) + ")");
    }
    return d_[m][v - 1];
}

long QuasiPolynomial::residue(long n) const {
    const long D = spec_.period();
    long v = n % D;
    if (v <= 0) v += D;
    return v;
}

Rational qp_eval(const QuasiPolynomial& q, long n) {
    if (n < 0) throw std::invalid_argument("qp_eval needs n >= 0");
    const long v = q.residue(n);
    Rational acc;
    for (long m = q.spec().r() - 1; m >= 0; --m) {
        acc *= Rational(n);
        acc += q.coefficient(m, v);
    }
    return acc;
}

QuasiPolynomial qp_fit_oracle(const PartitionSpec& spec) {
    const long r = spec.r();
    const long D = spec.period();
    const auto counts = dp_count(spec, D * r);
    std::vector<std::vector<Rational>> table(r, std::vector<Rational>(D));
    for (long v = 1; v <= D; ++v) {
        RatMatrix vandermonde(r, r);
        std::vector<Rational> rhs(r);
        for (long i = 0; i < r; ++i) {
            const long n = v + i * D;
            Rational power = 1;
            for (long m = 0; m < r; ++m) {
                vandermonde(i, m) = power;
                power *= Rational(n);
            }
            rhs[i] = Rational(counts[n]);
        }
        auto solution = solve_gaussian(vandermonde, rhs);
        if (!solution) throw std::logic_error("singular Vandermonde system");
        for (long m = 0; m < r; ++m) table[m][v - 1] = (*solution)[m];
    }
    return QuasiPolynomial(spec, std::move(table));
}

nlohmann::ordered_json to_json(const QuasiPolynomial& q) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["a"] = std::vector<long>(q.spec().weights().begin(), q.spec().weights().end());
    doc["r"] = q.spec().r();
    doc["D"] = q.spec().period();
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (long m = 0; m < q.spec().r(); ++m) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (long v = 1; v <= q.spec().period(); ++v) row[std::to_string(v)] = q.coefficient(m, v).to_string();
        d[std::to_string(m)] = std::move(row);
    }
    doc["d"] = std::move(d);
    return doc;
}

QuasiPolynomial quasi_polynomial_from_json(const nlohmann::json& doc) {
    if (doc.value("schema", 0) != 1) throw std::invalid_argument("unsupported quasi-polynomial schema");
    PartitionSpec spec(doc.at("a").get<std::vector<long>>(), doc.at("D").get<long>());
    std::vector<std::vector<Rational>> table(spec.r(), std::vector<Rational>(spec.period()));
    const auto& d = doc.at("d");
    for (long m = 0; m < spec.r(); ++m) {
        for (long v = 1; v <= spec.period(); ++v) {
            table[m][v - 1] = Rational::parse(d.at(std::to_string(m)).at(std::to_string(v)).get<std::string>());
        }
    }
    return QuasiPolynomial(std::move(spec), std::move(table));
}

}  // namespace rpart
