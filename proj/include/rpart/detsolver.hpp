#pragma once

// The Bernoulli-polynomial linear system for the quasi-polynomial
// coefficients of p_a, its determinant Delta_{r,D}, and coefficient recovery
// by Cramer's rule.
//
// Row n (0 <= n < rD) and column (m*D + v) - 1 (0 <= m < r, 1 <= v <= D)
// hold D^(n+m) B_{n+m+1}(v/D) / (n+m+1). The right-hand side is
//
//     (-1)^(r-1) n!/(n+r)! B_{r+n}(a) + [n == 0],
//
// which is -zeta_a(-n). The Kronecker term enters with a plus sign; with a
// minus sign the a = (1) system gives d = -3 instead of p_(1)(n) = 1.

#include "rpart/matrix.hpp"
#include "rpart/partition.hpp"
#include "rpart/partition_spec.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rpart {

struct DetSystem {
    long r = 0;
    long D = 0;
    RatMatrix matrix;
    std::optional<std::vector<Rational>> rhs;

    std::size_t column_of(long m, long v) const { return static_cast<std::size_t>(m * D + v - 1); }
};

/// Thrown when Delta_{r,D} = 0. That would be a counterexample to the
/// non-vanishing conjecture, so it carries (r, D).
class ConjectureCounterexample : public std::runtime_error {
public:
    ConjectureCounterexample(long r, long D);
    long r() const { return r_; }
    long D() const { return D_; }

private:
    long r_;
    long D_;
};

enum class KroneckerSign {
    plus,   ///< Consistent with the counting function.
    minus,  ///< Kept only to regression-test the sign.
};

/// Throws std::invalid_argument unless r >= 1 and D >= 1.
DetSystem build_matrix(long r, long D);
std::vector<Rational> build_rhs(const PartitionSpec& spec, KroneckerSign sign = KroneckerSign::plus);
/// build_matrix(r, D) with rhs filled from spec.
DetSystem build_system(const PartitionSpec& spec, KroneckerSign sign = KroneckerSign::plus);

Rational determinant(const DetSystem& sys);

struct CramerOptions {
    unsigned workers = 1;  ///< 0 = available cores
    KroneckerSign sign = KroneckerSign::plus;
};

/// d(m, v) = Delta^{m,v} / Delta, where Delta^{m,v} replaces column
/// (m*D + v) (1-based) with the right-hand side. Throws
/// ConjectureCounterexample when Delta = 0. Results do not depend on the
/// worker count.
QuasiPolynomial cramer_solve(const PartitionSpec& spec, const CramerOptions& options = {});

/// Delta_{r,D} computed directly and through the reflection B_n(1-x) =
/// (-1)^n B_n(x):
///   (-1)^(rD(rD+r)/2) D^(rD(rD+r-2)/2) det(B_{n+m+1}((D-v)/D) / (n+m+1)).
std::pair<Rational, Rational> transform_check(long r, long D);

/// {"r":..,"D":..,"delta":"num/den","nonzero":bool}
nlohmann::ordered_json det_to_json(long r, long D, const Rational& delta);

}  // namespace rpart
