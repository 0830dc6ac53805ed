#pragma once

#include "rpart/partition_spec.hpp"
#include "rpart/rational.hpp"

namespace rpart {

/// Bernoulli-Barnes number B_j(a): the multinomial sum over compositions
/// i_1 + ... + i_r = j of C(j; i) B_{i_1}...B_{i_r} a_1^{i_1-1}...a_r^{i_r-1}.
/// Depends on the weights only, not on the period.
Rational barnes_number(long j, const PartitionSpec& spec);

/// The same number read off a power series: j! times the z^j coefficient of
/// prod_i (1/a_i) sum_n B_n (a_i z)^n / n!. Independent of barnes_number.
Rational barnes_number_via_series(long j, const PartitionSpec& spec);

/// Barnes zeta at a non-positive integer, zeta_a(-n):
/// (-1)^r n!/(n+r)! B_{r+n}(a), minus 1 when n = 0.
Rational zeta_special(long n, const PartitionSpec& spec);

}  // namespace rpart
