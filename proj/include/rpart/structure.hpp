#pragma once

// Structural facts around Delta_{r,D}:
//
//  * Phi_j(x) = sum_i b_i B_{i+j-1}(x) / (i+j-1) and its evaluation matrix,
//  * the shift polynomials A_{j,l} and their difference-operator identity,
//  * the reduced r x r determinant Delta'_{r,D} of the integrals
//    I_{j,t} = int_0^1 Phi_{j,t},
//  * the D = 1 Hankel determinant and its 2-adic non-vanishing certificate.

#include "rpart/bernoulli.hpp"
#include "rpart/matrix.hpp"
#include "rpart/polynomial.hpp"
#include "rpart/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace rpart {

struct PhiFamily {
    long r = 0;
    long D = 0;
    std::vector<Rational> b;  ///< b_1..b_{rD}
    std::vector<RatPoly> phi;  ///< Phi_1..Phi_r
};

/// Throws std::invalid_argument unless b has r*D entries.
PhiFamily make_phi_family(long r, long D, std::vector<Rational> b);

/// The rD x rD matrix taking b to (Phi_j(k/D)) with rows ordered (j, k),
/// 1 <= j <= r, 0 <= k < D. It is nonsingular exactly when Delta_{r,D} != 0.
RatMatrix phi_evaluation_matrix(long r, long D);

/// A_{j,l}(x) = (-1)^(r-1) sum_{t=0}^{l} (-1)^t C(r,t) (x+l-t)^(j-1),
/// 1 <= j <= r, 0 <= l <= r-1.
RatPoly A_poly(long r, long j, long ell);

/// x^(j-1) Delta^r S(x) == Delta(sum_l A_{j,l}(x) S(x+l)) as polynomials,
/// with Delta the unit forward difference.
bool difference_identity_check(long r, long j, const RatPoly& S);

/// A_{j,l}(x) == (-1)^(r+j) A_{j,r-1-l}(1-x).
bool A_symmetry_check(long r, long j, long ell);

/// Argument of the falling factorial inside S_t.
enum class FactorialScaling {
    scaled,    ///< (Dx)_{Dr}
    unscaled,  ///< (x)_{Dr}
};

/// S_0 = F, S_t = (x - r)(x - r/2)^(t-1) F for t >= 1, with F the falling
/// factorial of length Dr selected by `scaling`.
RatPoly S_t_poly(long r, long D, long t, FactorialScaling scaling = FactorialScaling::scaled);

/// Phi_{j,t} = sum_l A_{j,l}(x) S_t(x + l).
RatPoly phi_jt(long r, long D, long j, long t, FactorialScaling scaling = FactorialScaling::scaled);

Rational I_jt(long r, long D, long j, long t, FactorialScaling scaling = FactorialScaling::scaled);

/// det(I_{j,t}), 1 <= j <= r, 0 <= t <= r-1. For r = 1 this is I_{1,0}.
Rational delta_prime(long r, long D, FactorialScaling scaling = FactorialScaling::scaled);

/// t + (D+1)r + j odd. With the scaled S_t this selects exactly the cells
/// where I_{j,t} vanishes by the x -> 1-x reflection (t >= 1).
bool parity_vanishing_condition(long r, long D, long j, long t);

/// t + (D+1)t + j odd (equivalently Dt + j odd). Has counterexamples, e.g.
/// r = 2, D = 2, j = 1, t = 1; kept so the discrepancy stays measurable.
bool diagonal_parity_condition(long D, long j, long t);

/// int_0^D (x)_D dx, strictly positive for every D >= 1.
Rational falling_factorial_integral(long D);

/// (-1)^r det(B_{i+j-1} / (i+j-1)), 1 <= i, j <= r.
Rational hankel_d1(long r);

/// Hankel matrix of the given size whose (i, j) entry (1-based) is h_{i+j-1}
/// with h_1 = x_1, h_n = x_n for even n and 0 for odd n >= 3.
/// xs[i - 1] holds x_i; odd indices >= 3 are never read.
RatMatrix checkerboard_hankel(std::size_t size, std::span<const Rational> xs);

/// Both sides of the two checkerboard identities for a given k:
///  (1) det of the 2k x 2k pattern = (-1)^k det(x_{2(a+b)-2})^2,
///  (2) det of the (2k+1) x (2k+1) pattern = (-1)^k x_1 det(x_{2(a+b)})^2,
/// with a, b in 1..k. Needs xs.size() >= 4k.
struct CheckerboardSides {
    std::pair<Rational, Rational> even;
    std::pair<Rational, Rational> odd;
};
CheckerboardSides checkerboard_sides(long k, std::span<const Rational> xs);
bool checkerboard_check(long k, std::span<const Rational> xs);

enum class PermKind {
    sigma,  ///< score sum_j v2(j + s(j) - 1)
    tau,    ///< score sum_j v2(j + s(j))
};

/// The recursively defined maximizer: tail {m-k+1..k} reversed around
/// m + 1, head {1..m-k} recursing on k' = m - k. For sigma
/// m = 2^(floor(log2(k-1)) + 1), for tau m = 2^(floor(log2 k) + 1) - 1.
/// Returns the images s(1)..s(k), 1-based.
std::vector<long> sigma_tau(long k, PermKind kind);

/// Throws std::invalid_argument if perm is not a permutation of 1..k.
long perm_score(std::span<const long> perm, PermKind kind);

/// +1 or -1.
int perm_signature(std::span<const long> perm);

/// sum over s in S_k of sign(s) prod_i B_{2s(i)+2i-2} / (s(i)+i-1) (sigma),
/// or prod_i B_{2s(i)+2i} / (s(i)+i) (tau). Empty product for k = 0.
Rational permutation_sum(long k, PermKind kind);

/// The closed form for Delta_{r,1} as a square of permutation_sum:
/// r = 2k gives (-1)^k / 2^k S^2, r = 2k+1 gives (-1)^(k+1) / 2^(k+1) S^2.
/// The true determinant is this value times (-1)^r / 2^k.
Rational permutation_closed_form(long r);

/// 2-adic evidence that Delta_{r,1} != 0. The permutation terms of
/// permutation_sum all carry a finite valuation; if one term is strictly
/// 2-adically smallest the sum cannot vanish.
struct TwoAdicCertificate {
    long r = 0;
    Rational delta;
    Valuation v2_delta = Valuation::neg_infinity();
    bool enumerated = false;  ///< S_k was enumerated (k <= 8)
    long extremal_v2 = 0;     ///< minimal term valuation
    bool unique_extremal = false;
    bool extremal_is_sigma_tau = false;
    /// v2 implied by the unique extremal term: 2 * extremal_v2 - r.
    long predicted_v2 = 0;

    bool holds() const {
        return v2_delta.is_finite() && (!enumerated || (unique_extremal && extremal_is_sigma_tau &&
                                                        v2_delta.value() == predicted_v2));
    }
};

/// Throws ConjectureCounterexample if Delta_{r,1} = 0.
TwoAdicCertificate two_adic_certificate(long r);

}  // namespace rpart
