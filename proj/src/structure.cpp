#include "rpart/structure.hpp"

#include "rpart/detsolver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rpart {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// B_n(x) / n as a polynomial.
RatPoly scaled_bernoulli(long n) { return bernoulli_poly(n) * Rational(1, n); }

}  // namespace

PhiFamily make_phi_family(long r, long D, std::vector<Rational> b) {
    require(r >= 1 && D >= 1, "phi family needs r, D >= 1");
    require(static_cast<long>(b.size()) == r * D, "phi family needs r*D coefficients");
    PhiFamily family{r, D, std::move(b), {}};
    for (long j = 1; j <= r; ++j) {
        RatPoly phi;
        for (long i = 1; i <= r * D; ++i) {
            if (!family.b[i - 1].is_zero()) phi += scaled_bernoulli(i + j - 1) * family.b[i - 1];
        }
        family.phi.push_back(std::move(phi));
    }
    return family;
}

RatMatrix phi_evaluation_matrix(long r, long D) {
    require(r >= 1 && D >= 1, "evaluation matrix needs r, D >= 1");
    RatMatrix m(r * D, r * D);
    for (long j = 1; j <= r; ++j) {
        for (long i = 1; i <= r * D; ++i) {
            const RatPoly p = scaled_bernoulli(i + j - 1);
            for (long k = 0; k < D; ++k) m((j - 1) * D + k, i - 1) = p(Rational(k, D));
        }
    }
    return m;
}

RatPoly A_poly(long r, long j, long ell) {
    require(1 <= j && j <= r && 0 <= ell && ell <= r - 1, "A_poly index out of range");
    RatPoly out;
    for (long t = 0; t <= ell; ++t) {
        Rational c(binomial(r, t));
        if (t % 2 == 1) c = -c;
        out += pow(RatPoly{Rational(ell - t), Rational(1)}, static_cast<unsigned>(j - 1)) * c;
    }
    if ((r - 1) % 2 == 1) out = -out;
    return out;
}

bool difference_identity_check(long r, long j, const RatPoly& S) {
    RatPoly diff = S;
    for (long i = 0; i < r; ++i) diff = forward_diff(diff);
    const RatPoly lhs = RatPoly::monomial(1, static_cast<std::size_t>(j - 1)) * diff;

    RatPoly combo;
    for (long ell = 0; ell < r; ++ell) combo += A_poly(r, j, ell) * S.shifted(ell);
    return lhs == forward_diff(combo);
}

bool A_symmetry_check(long r, long j, long ell) {
    RatPoly reflected = A_poly(r, j, r - 1 - ell).composed_affine(-1, 1);
    if ((r + j) % 2 == 1) reflected = -reflected;
    return A_poly(r, j, ell) == reflected;
}

RatPoly S_t_poly(long r, long D, long t, FactorialScaling scaling) {
    require(r >= 1 && D >= 1 && 0 <= t && t <= r - 1, "S_t index out of range");
    const Rational scale = scaling == FactorialScaling::scaled ? Rational(D) : Rational(1);
    RatPoly out = falling_factorial(D * r, 0, scale);
    if (t >= 1) {
        out *= RatPoly{Rational(-r), Rational(1)};
        out *= pow(RatPoly{Rational(-r, 2), Rational(1)}, static_cast<unsigned>(t - 1));
    }
    return out;
}

RatPoly phi_jt(long r, long D, long j, long t, FactorialScaling scaling) {
    const RatPoly s = S_t_poly(r, D, t, scaling);
    RatPoly out;
    for (long ell = 0; ell < r; ++ell) out += A_poly(r, j, ell) * s.shifted(ell);
    return out;
}

Rational I_jt(long r, long D, long j, long t, FactorialScaling scaling) {
    return poly_integrate(phi_jt(r, D, j, t, scaling), 0, 1);
}

Rational delta_prime(long r, long D, FactorialScaling scaling) {
    require(r >= 1 && D >= 1, "delta_prime needs r, D >= 1");
    RatMatrix m(r, r);
    for (long j = 1; j <= r; ++j) {
        for (long t = 0; t < r; ++t) m(j - 1, t) = I_jt(r, D, j, t, scaling);
    }
    return det_bareiss(m);
}

bool parity_vanishing_condition(long r, long D, long j, long t) { return (t + (D + 1) * r + j) % 2 == 1; }

bool diagonal_parity_condition(long D, long j, long t) { return (t + (D + 1) * t + j) % 2 == 1; }

Rational falling_factorial_integral(long D) {
    require(D >= 1, "falling_factorial_integral needs D >= 1");
    return poly_integrate(falling_factorial(D), 0, D);
}

Rational hankel_d1(long r) {
    require(r >= 1, "hankel_d1 needs r >= 1");
    RatMatrix m(r, r);
    for (long i = 1; i <= r; ++i) {
        for (long j = 1; j <= r; ++j) m(i - 1, j - 1) = bernoulli_number(i + j - 1) / Rational(i + j - 1);
    }
    Rational d = det_bareiss(m);
    return r % 2 == 1 ? -d : d;
}

RatMatrix checkerboard_hankel(std::size_t size, std::span<const Rational> xs) {
    require(xs.size() >= std::max<std::size_t>(1, 2 * size - 2), "checkerboard_hankel needs x_1..x_{2 size - 2}");
    RatMatrix m(size, size);
    for (std::size_t i = 1; i <= size; ++i) {
        for (std::size_t j = 1; j <= size; ++j) {
            const std::size_t n = i + j - 1;
            if (n == 1 || n % 2 == 0) m(i - 1, j - 1) = xs[n - 1];
        }
    }
    return m;
}

CheckerboardSides checkerboard_sides(long k, std::span<const Rational> xs) {
    require(k >= 1 && static_cast<long>(xs.size()) >= 4 * k, "checkerboard identities need k >= 1 and x_1..x_{4k}");
    auto x = [&](long i) -> const Rational& { return xs[i - 1]; };
    const Rational sign = k % 2 == 0 ? Rational(1) : Rational(-1);

    RatMatrix e(k, k), g(k, k);
    for (long a = 1; a <= k; ++a) {
        for (long b = 1; b <= k; ++b) {
            e(a - 1, b - 1) = x(2 * (a + b) - 2);
            g(a - 1, b - 1) = x(2 * (a + b));
        }
    }
    const Rational de = det_gaussian(e);
    const Rational dg = det_gaussian(g);

    CheckerboardSides sides;
    sides.even = {det_bareiss(checkerboard_hankel(2 * k, xs)), sign * de * de};
    sides.odd = {det_bareiss(checkerboard_hankel(2 * k + 1, xs)), sign * x(1) * dg * dg};
    return sides;
}

bool checkerboard_check(long k, std::span<const Rational> xs) {
    const auto sides = checkerboard_sides(k, xs);
    return sides.even.first == sides.even.second && sides.odd.first == sides.odd.second;
}

std::vector<long> sigma_tau(long k, PermKind kind) {
    require(k >= 0, "sigma_tau needs k >= 0");
    std::vector<long> perm(k);
    if (k == 0) return perm;
    if (k == 1) {
        perm[0] = 1;
        return perm;
    }
    // smallest power of two exceeding k-1 (sigma) or k (tau)
    const long bound = kind == PermKind::sigma ? k - 1 : k;
    long pow2 = 1;
    while (pow2 <= bound) pow2 *= 2;
    const long m = kind == PermKind::sigma ? pow2 : pow2 - 1;
    const long head = m - k;
    const auto prefix = sigma_tau(head, kind);
    std::copy(prefix.begin(), prefix.end(), perm.begin());
    for (long j = head + 1; j <= k; ++j) perm[j - 1] = m + 1 - j;
    return perm;
}

namespace {

void require_permutation(std::span<const long> perm) {
    std::vector<bool> seen(perm.size() + 1, false);
    for (long v : perm) {
        require(v >= 1 && v <= static_cast<long>(perm.size()) && !seen[v], "not a permutation of 1..k");
        seen[v] = true;
    }
}

}  // namespace

long perm_score(std::span<const long> perm, PermKind kind) {
    require_permutation(perm);
    const long offset = kind == PermKind::sigma ? -1 : 0;
    long score = 0;
    for (std::size_t j = 1; j <= perm.size(); ++j) {
        score += v2(BigInt(static_cast<long>(j) + perm[j - 1] + offset)).value();
    }
    return score;
}

int perm_signature(std::span<const long> perm) {
    require_permutation(perm);
    std::vector<bool> visited(perm.size(), false);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (visited[i]) continue;
        std::size_t len = 0;
        for (std::size_t c = i; !visited[c]; c = static_cast<std::size_t>(perm[c] - 1)) {
            visited[c] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

namespace {

// The permutation term of permutation_sum without its sign.
Rational permutation_term(std::span<const long> perm, PermKind kind) {
    Rational term = 1;
    for (long i = 1; i <= static_cast<long>(perm.size()); ++i) {
        const long s = perm[i - 1];
        if (kind == PermKind::sigma) {
            term *= bernoulli_number(2 * s + 2 * i - 2) / Rational(s + i - 1);
        } else {
            term *= bernoulli_number(2 * s + 2 * i) / Rational(s + i);
        }
    }
    return term;
}

template <typename Visit>
void for_each_permutation(long k, Visit&& visit) {
    std::vector<long> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        visit(std::span<const long>(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Rational permutation_sum(long k, PermKind kind) {
    require(k >= 0, "permutation_sum needs k >= 0");
    Rational sum;
    for_each_permutation(k, [&](std::span<const long> perm) {
        const Rational term = permutation_term(perm, kind);
        sum += perm_signature(perm) > 0 ? term : -term;
    });
    return sum;
}

Rational permutation_closed_form(long r) {
    require(r >= 1, "permutation_closed_form needs r >= 1");
    const long k = r / 2;
    const bool odd = r % 2 == 1;
    const Rational s = permutation_sum(k, odd ? PermKind::tau : PermKind::sigma);
    const long e = odd ? k + 1 : k;
    Rational out = s * s / pow(Rational(2), e);
    return e % 2 == 0 ? out : -out;
}

TwoAdicCertificate two_adic_certificate(long r) {
    require(r >= 1, "two_adic_certificate needs r >= 1");
    TwoAdicCertificate cert;
    cert.r = r;
    cert.delta = determinant(build_matrix(r, 1));
    if (cert.delta.is_zero()) throw ConjectureCounterexample(r, 1);
    cert.v2_delta = v2(cert.delta);

    const long k = r / 2;
    if (k > 8) return cert;
    cert.enumerated = true;
    const PermKind kind = r % 2 == 0 ? PermKind::sigma : PermKind::tau;

    bool first = true;
    long count_at_min = 0;
    std::vector<long> argmin;
    for_each_permutation(k, [&](std::span<const long> perm) {
        const Valuation v = v2(permutation_term(perm, kind));
        const long value = v.value();
        if (first || value < cert.extremal_v2) {
            first = false;
            cert.extremal_v2 = value;
            count_at_min = 1;
            argmin.assign(perm.begin(), perm.end());
        } else if (value == cert.extremal_v2) {
            ++count_at_min;
        }
    });
    cert.unique_extremal = count_at_min == 1;
    cert.extremal_is_sigma_tau = argmin == sigma_tau(k, kind);
    cert.predicted_v2 = 2 * cert.extremal_v2 - r;
    return cert;
}

}  // namespace rpart
