#include "rpart/detsolver.hpp"
#include "rpart/sampling.hpp"
#include "rpart/structure.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace rpart;

namespace {

RatPoly x_minus(const Rational& c) { return RatPoly{-c, Rational(1)}; }

}  // namespace

TEST_CASE("A polynomials") {
    for (long r = 1; r <= 6; ++r) {
        CHECK(A_poly(r, 1, 0) == RatPoly::constant(r % 2 == 1 ? 1 : -1));
        for (long j = 1; j <= r; ++j) {
            // A_{j,r-1}(x+1) = x^{j-1}
            CHECK(A_poly(r, j, r - 1).shifted(1) == RatPoly::monomial(Rational(1), j - 1));
            for (long ell = 0; ell < r; ++ell) {
                CHECK(A_poly(r, j, ell).degree() == j - 1);
                CHECK(A_symmetry_check(r, j, ell));
            }
        }
    }
    // (x+1) - 3x
    CHECK(A_poly(3, 2, 1) == RatPoly{Rational(1), Rational(-2)});
    CHECK(A_symmetry_check(2, 1, 0));
    CHECK(A_symmetry_check(3, 2, 1));
    CHECK(A_symmetry_check(4, 3, 0));
    CHECK_THROWS(A_poly(2, 3, 0));
    CHECK_THROWS(A_poly(2, 1, 2));
}

TEST_CASE("difference-operator identity") {
    CHECK(difference_identity_check(3, 2, RatPoly()));
    CHECK(difference_identity_check(2, 1, RatPoly::monomial(Rational(1), 4)));
    std::mt19937_64 rng(210);
    for (long r = 1; r <= 5; ++r) {
        for (long j = 1; j <= r; ++j) {
            for (int s = 0; s < 5; ++s) CHECK(difference_identity_check(r, j, random_poly(rng, 6)));
        }
    }
}

TEST_CASE("S_t and Phi_{j,t}") {
    for (long D = 1; D <= 4; ++D) {
        CHECK(S_t_poly(1, D, 0, FactorialScaling::unscaled) == falling_factorial(D));
        CHECK(S_t_poly(1, D, 0) == falling_factorial(D, 0, D));
    }
    CHECK(S_t_poly(2, 1, 1, FactorialScaling::unscaled) == x_minus(2) * falling_factorial(2));
    CHECK(S_t_poly(3, 2, 2) == x_minus(3) * x_minus(Rational(3, 2)) * falling_factorial(6, 0, 2));
    for (long r = 1; r <= 4; ++r) {
        for (long D = 1; D <= 3; ++D) {
            for (long t = 0; t < r; ++t) CHECK(S_t_poly(r, D, t).degree() == D * r + t);
        }
    }
    CHECK_THROWS(S_t_poly(2, 1, 2));

    CHECK(phi_jt(1, 3, 1, 0) == S_t_poly(1, 3, 0));
    const RatPoly ff2 = falling_factorial(2);
    CHECK(phi_jt(2, 1, 1, 0) == ff2.shifted(1) - ff2);
    // r=2, D=1, j=2, t=1 term by term: A_{2,0} = -x, A_{2,1} = x - 1
    const RatPoly s = S_t_poly(2, 1, 1);
    CHECK(phi_jt(2, 1, 2, 1) == -RatPoly::identity() * s + x_minus(1) * s.shifted(1));
}

TEST_CASE("integrals I_{j,t}") {
    CHECK(I_jt(1, 1, 1, 0) == Rational(1, 2));
    CHECK(I_jt(2, 1, 1, 0) == Rational(1));
    CHECK(I_jt(2, 2, 1, 1) == Rational(-2, 3));
    CHECK(I_jt(2, 2, 1, 1, FactorialScaling::unscaled) == Rational(-7, 6));
}

TEST_CASE("parity conditions") {
    // t + (D+1)t + j odd  <=>  Dt + j odd
    for (long D = 1; D <= 5; ++D) {
        for (long t = 1; t <= 4; ++t) {
            for (long j = 1; j <= 5; ++j) CHECK(diagonal_parity_condition(D, j, t) == ((D * t + j) % 2 == 1));
        }
    }
    CHECK(parity_vanishing_condition(2, 2, 1, 1) == false);
    CHECK(diagonal_parity_condition(2, 1, 1) == true);
}

TEST_CASE("I_{j,t} vanishes when t+(D+1)r+j is odd") {
    long selected = 0;
    for (long r = 2; r <= 4; ++r) {
        for (long D = 1; D <= 4; ++D) {
            for (long t = 1; t < r; ++t) {
                for (long j = 1; j <= r; ++j) {
                    if (!parity_vanishing_condition(r, D, j, t)) continue;
                    ++selected;
                    CHECK_MESSAGE(I_jt(r, D, j, t).is_zero(), "r=", r, " D=", D, " j=", j, " t=", t);
                }
            }
        }
    }
    CHECK(selected == 40);
}

TEST_CASE("reduced determinant") {
    for (long D = 1; D <= 6; ++D) CHECK(delta_prime(1, D) == falling_factorial_integral(D) / Rational(D));
    CHECK(delta_prime(1, 2) == Rational(1, 3));
    CHECK(delta_prime(2, 1) == Rational(-1, 12));
    CHECK(delta_prime(2, 2) == Rational(-4, 15));
    for (long r = 1; r <= 3; ++r) {
        for (long D = 1; D <= 4; ++D) {
            CHECK(determinant(build_matrix(r, D)).is_zero() == delta_prime(r, D).is_zero());
        }
    }
}

TEST_CASE("falling factorial integral") {
    CHECK(falling_factorial_integral(1) == Rational(1, 2));
    CHECK(falling_factorial_integral(2) == Rational(2, 3));
    CHECK(falling_factorial_integral(3) == Rational(9, 4));
    for (long D = 1; D <= 15; ++D) CHECK(falling_factorial_integral(D) > Rational(0));
    CHECK_THROWS(falling_factorial_integral(0));
}

TEST_CASE("Phi family and evaluation matrix") {
    const PhiFamily f = make_phi_family(2, 2, {Rational(1), Rational(0), Rational(0), Rational(2)});
    REQUIRE(f.phi.size() == 2);
    // Phi_1 = B_1/1 + 2 B_4/4, Phi_2 = B_2/2 + 2 B_5/5
    CHECK(f.phi[0] == bernoulli_poly(1) + bernoulli_poly(4) * Rational(1, 2));
    CHECK(f.phi[1] == bernoulli_poly(2) * Rational(1, 2) + bernoulli_poly(5) * Rational(2, 5));
    CHECK_THROWS(make_phi_family(2, 2, {Rational(1)}));

    for (long r = 1; r <= 3; ++r) {
        for (long D = 1; D <= 4; ++D) {
            const RatMatrix m = phi_evaluation_matrix(r, D);
            const bool full = rank(m) == static_cast<std::size_t>(r * D);
            CHECK(full == !determinant(build_matrix(r, D)).is_zero());
        }
    }
    // columns are Phi_j evaluated for b = e_i
    std::vector<Rational> b(6);
    b[4] = 1;
    const PhiFamily e = make_phi_family(2, 3, b);
    const RatMatrix m = phi_evaluation_matrix(2, 3);
    for (long j = 1; j <= 2; ++j) {
        for (long k = 0; k < 3; ++k) CHECK(m((j - 1) * 3 + k, 4) == e.phi[j - 1](Rational(k, 3)));
    }
}

TEST_CASE("Hankel form of Delta_{r,1}") {
    CHECK(hankel_d1(1) == Rational(1, 2));
    CHECK(hankel_d1(2) == Rational(-1, 144));
    for (long r = 1; r <= 6; ++r) CHECK(hankel_d1(r) == determinant(build_matrix(r, 1)));
}

TEST_CASE("checkerboard Hankel identities") {
    const std::vector<Rational> xs{Rational(2), Rational(3), Rational(5), Rational(7)};
    CHECK(det_bareiss(checkerboard_hankel(2, xs)) == Rational(-9));
    CHECK(det_bareiss(checkerboard_hankel(3, xs)) == Rational(-2 * 49));
    std::mt19937_64 rng(31);
    for (long k = 1; k <= 3; ++k) {
        for (int s = 0; s < 5; ++s) {
            std::vector<Rational> r(4 * k);
            for (auto& q : r) q = random_rational(rng);
            CHECK(checkerboard_check(k, r));
        }
    }
    CHECK_THROWS(checkerboard_sides(2, xs));
    CHECK_THROWS(checkerboard_hankel(3, std::span<const Rational>(xs).first(3)));
}

TEST_CASE("sigma and tau permutations") {
    CHECK(sigma_tau(1, PermKind::sigma) == std::vector<long>{1});
    CHECK(sigma_tau(2, PermKind::sigma) == std::vector<long>{2, 1});
    CHECK(sigma_tau(3, PermKind::sigma) == std::vector<long>{1, 3, 2});
    CHECK(sigma_tau(1, PermKind::tau) == std::vector<long>{1});

    const std::vector<long> swap{2, 1};
    const std::vector<long> id2{1, 2};
    const std::vector<long> id1{1};
    CHECK(perm_score(swap, PermKind::sigma) == 2);
    CHECK(perm_score(id2, PermKind::sigma) == 0);
    CHECK(perm_score(id1, PermKind::tau) == 1);
    CHECK(perm_signature(swap) == -1);
    CHECK(perm_signature(std::vector<long>{2, 3, 1}) == 1);
    CHECK_THROWS(perm_score(std::vector<long>{1, 1}, PermKind::sigma));
}

TEST_CASE("sigma_k and tau_k are unique maximizers, brute force") {
    for (long k = 1; k <= 6; ++k) {
        for (PermKind kind : {PermKind::sigma, PermKind::tau}) {
            const std::vector<long> best = sigma_tau(k, kind);
            const long best_score = perm_score(best, kind);
            std::vector<long> p(k);
            std::iota(p.begin(), p.end(), 1);
            long at_max = 0;
            long max_score = -1;
            do {
                const long s = perm_score(p, kind);
                if (s > max_score) {
                    max_score = s;
                    at_max = 0;
                }
                if (s == max_score) ++at_max;
            } while (std::next_permutation(p.begin(), p.end()));
            CHECK(best_score == max_score);
            CHECK(at_max == 1);
        }
    }
}

TEST_CASE("permutation-sum closed form, measured constant") {
    CHECK(permutation_closed_form(2) == Rational(-1, 72));
    for (long r = 2; r <= 7; ++r) {
        const long k = r / 2;
        const Rational factor = Rational(r % 2 == 0 ? 1 : -1) / pow(Rational(2), k);
        CHECK(hankel_d1(r) == permutation_closed_form(r) * factor);
    }
}

TEST_CASE("2-adic certificate") {
    const TwoAdicCertificate c1 = two_adic_certificate(1);
    CHECK(c1.v2_delta == Valuation(-1));
    const TwoAdicCertificate c2 = two_adic_certificate(2);
    CHECK(c2.delta == Rational(-1, 144));
    CHECK(c2.v2_delta == Valuation(-4));
    for (long r = 1; r <= 6; ++r) {
        const TwoAdicCertificate c = two_adic_certificate(r);
        CHECK(c.holds());
        CHECK(c.v2_delta.is_finite());
        if (r >= 2) {
            CHECK(c.enumerated);
            CHECK(c.unique_extremal);
            CHECK(c.extremal_is_sigma_tau);
        }
    }
}
