#include "rpart/detsolver.hpp"

#include "rpart/barnes.hpp"
#include "rpart/bernoulli.hpp"
#include "rpart/parallel.hpp"

#include <string>

namespace rpart {

ConjectureCounterexample::ConjectureCounterexample(long r, long D)
    : std::runtime_error("Delta_{" + std::to_string(r) + "," + std::to_string(D) +
                         "} = 0: conjecture counterexample candidate"),
      r_(r),
      D_(D) {}

DetSystem build_matrix(long r, long D) {
    if (r < 1 || D < 1) throw std::invalid_argument("build_matrix needs r >= 1 and D >= 1");
    const long size = r * D;
    DetSystem sys{r, D, RatMatrix(size, size), std::nullopt};

    // B_k(v/D) for every k used, evaluated once per (k, v).
    const long k_max = size + r - 1;
    std::vector<std::vector<Rational>> values(k_max + 1, std::vector<Rational>(D + 1));
    for (long k = 1; k <= k_max; ++k) {
        const RatPoly b = bernoulli_poly(k);
        for (long v = 1; v <= D; ++v) values[k][v] = b(Rational(v, D));
    }
    for (long n = 0; n < size; ++n) {
        for (long m = 0; m < r; ++m) {
            const long k = n + m + 1;
            const Rational scale = pow(Rational(D), n + m) / Rational(k);
            for (long v = 1; v <= D; ++v) sys.matrix(n, sys.column_of(m, v)) = scale * values[k][v];
        }
    }
    return sys;
}

std::vector<Rational> build_rhs(const PartitionSpec& spec, KroneckerSign sign) {
    const long r = spec.r();
    const long size = r * spec.period();
    std::vector<Rational> rhs(size);
    for (long n = 0; n < size; ++n) {
        Rational value = Rational(factorial(n), factorial(n + r)) * barnes_number(r + n, spec);
        if ((r - 1) % 2 == 1) value = -value;
        if (n == 0) value += sign == KroneckerSign::plus ? Rational(1) : Rational(-1);
        rhs[n] = std::move(value);
    }
    return rhs;
}

DetSystem build_system(const PartitionSpec& spec, KroneckerSign sign) {
    DetSystem sys = build_matrix(spec.r(), spec.period());
    sys.rhs = build_rhs(spec, sign);
    return sys;
}

Rational determinant(const DetSystem& sys) { return det_bareiss(sys.matrix); }

QuasiPolynomial cramer_solve(const PartitionSpec& spec, const CramerOptions& options) {
    const DetSystem sys = build_system(spec, options.sign);
    const long r = sys.r;
    const long D = sys.D;
    const std::size_t columns = sys.matrix.cols();

    // Slot 0 is Delta itself; slot c + 1 is the numerator for column c.
    std::vector<Rational> dets(columns + 1);
    parallel_for(columns + 1, options.workers, [&](std::size_t i) {
        dets[i] = i == 0 ? det_bareiss(sys.matrix) : det_bareiss(sys.matrix.with_column(i - 1, *sys.rhs));
    });
    if (dets[0].is_zero()) throw ConjectureCounterexample(r, D);

    std::vector<std::vector<Rational>> table(r, std::vector<Rational>(D));
    for (long m = 0; m < r; ++m) {
        for (long v = 1; v <= D; ++v) table[m][v - 1] = dets[sys.column_of(m, v) + 1] / dets[0];
    }
    return QuasiPolynomial(spec, std::move(table));
}

std::pair<Rational, Rational> transform_check(long r, long D) {
    const DetSystem direct = build_matrix(r, D);
    const long size = r * D;
    RatMatrix reflected(size, size);
    for (long n = 0; n < size; ++n) {
        for (long m = 0; m < r; ++m) {
            const long k = n + m + 1;
            const RatPoly b = bernoulli_poly(k);
            for (long v = 1; v <= D; ++v) reflected(n, direct.column_of(m, v)) = b(Rational(D - v, D)) / Rational(k);
        }
    }
    Rational via_reflection = pow(Rational(D), size * (size + r - 2) / 2) * det_bareiss(reflected);
    if ((size * (size + r) / 2) % 2 == 1) via_reflection = -via_reflection;
    return {determinant(direct), via_reflection};
}

nlohmann::ordered_json det_to_json(long r, long D, const Rational& delta) {
    nlohmann::ordered_json doc;
    doc["r"] = r;
    doc["D"] = D;
    doc["delta"] = delta.to_string();
    doc["nonzero"] = !delta.is_zero();
    return doc;
}

}  // namespace rpart
