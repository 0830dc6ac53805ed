#include "rpart/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace rpart {

void RatMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

RatMatrix RatMatrix::with_column(std::size_t j, const std::vector<Rational>& column) const {
    if (j >= cols_ || column.size() != rows_) throw std::invalid_argument("column replacement out of range");
    RatMatrix out = *this;
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = column[i];
    return out;
}

Rational det_bareiss(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    // Integer matrix: row i multiplied by lcm of its denominators.
    std::vector<BigInt> a(n * n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        scale *= l;
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& q = m(i, j);
            BigInt f;
            mpz_divexact(f.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
            a[i * n + j] = q.num() * f;
        }
    }
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return a[i * n + j]; };

    int sign = 1;
    BigInt prev = 1;
    BigInt t;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t p = k;
        while (p < n && at(p, k) == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(at(p, j), at(k, j));
            sign = -sign;
        }
        const BigInt& pivot = at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // a_ij <- (a_ij * pivot - a_ik * a_kj) / prev, exact.
                mpz_mul(t.get_mpz_t(), at(i, j).get_mpz_t(), pivot.get_mpz_t());
                mpz_submul(t.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, k) = 0;
        }
        prev = pivot;
    }
    BigInt det = at(n - 1, n - 1);
    if (sign < 0) det = -det;
    return Rational(det, scale);
}

namespace {

// Row echelon form in place; returns rank and accumulates the determinant
// factor (product of pivots with swap signs) when square.
std::size_t echelon(RatMatrix& a, Rational* det) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t r = 0;
    Rational d = 1;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a(p, c).is_zero()) ++p;
        if (p == rows) {
            d = 0;
            continue;
        }
        if (p != r) {
            a.swap_rows(p, r);
            d = -d;
        }
        const Rational pivot = a(r, c);
        d *= pivot;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a(i, c).is_zero()) continue;
            const Rational f = a(i, c) / pivot;
            for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    if (det != nullptr) *det = (r == rows) ? d : Rational(0);
    return r;
}

}  // namespace

Rational det_gaussian(const RatMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    RatMatrix a = m;
    Rational d;
    echelon(a, &d);
    return d;
}

std::size_t rank(const RatMatrix& m) {
    RatMatrix a = m;
    return echelon(a, nullptr);
}

std::optional<std::vector<Rational>> solve_gaussian(const RatMatrix& m, const std::vector<Rational>& b) {
    if (!m.is_square() || b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    const std::size_t n = m.rows();
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug(p, c).is_zero()) ++p;
        if (p == n) return std::nullopt;
        aug.swap_rows(p, c);
        const Rational inv = Rational(1) / aug(c, c);
        for (std::size_t j = c; j <= n; ++j) aug(c, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || aug(i, c).is_zero()) continue;
            const Rational f = aug(i, c);
            for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(c, j);
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

}  // namespace rpart
