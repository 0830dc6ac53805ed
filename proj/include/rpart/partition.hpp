#pragma once

#include "rpart/partition_spec.hpp"
#include "rpart/rational.hpp"

#include <json.hpp>

#include <vector>

namespace rpart {

/// p_a(0..n_max) by coin-style dynamic programming.
std::vector<BigInt> dp_count(const PartitionSpec& spec, long n_max);

/// p_a(n) = sum_m d(m, v) n^m, where v in {1..D} and v = n (mod D).
class QuasiPolynomial {
public:
    /// table[m][v - 1], 0 <= m < r, 1 <= v <= D. Throws std::invalid_argument
    /// on a shape mismatch.
    QuasiPolynomial(PartitionSpec spec, std::vector<std::vector<Rational>> table);

    const PartitionSpec& spec() const { return spec_; }
    /// 0 <= m < r, 1 <= v <= D.
    const Rational& coefficient(long m, long v) const;

    /// The residue representative in {1..D}.
    long residue(long n) const;

    friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

private:
    PartitionSpec spec_;
    std::vector<std::vector<Rational>> d_;
};

Rational qp_eval(const QuasiPolynomial& q, long n);

/// Recovers the coefficient table from dp_count alone: for each residue v,
/// the r-point interpolation through n = v, v + D, ..., v + (r-1)D, solved
/// as a Vandermonde system by rational Gaussian elimination.
QuasiPolynomial qp_fit_oracle(const PartitionSpec& spec);

/// {"schema":1,"a":[..],"r":..,"D":..,"d":{"<m>":{"<v>":"num/den"}}}
nlohmann::ordered_json to_json(const QuasiPolynomial& q);
QuasiPolynomial quasi_polynomial_from_json(const nlohmann::json& doc);

}  // namespace rpart
