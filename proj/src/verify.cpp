#include "rpart/verify.hpp"

#include "rpart/barnes.hpp"
#include "rpart/bernoulli.hpp"
#include "rpart/detsolver.hpp"
#include "rpart/partition.hpp"
#include "rpart/sampling.hpp"
#include "rpart/structure.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rpart {

std::string CheckRecord::to_line() const {
    const char* tag = status == Status::pass ? "PASS" : status == Status::fail ? "FAIL" : "NOTE";
    std::string line = std::string(tag) + " " + suite + " " + name;
    if (!witness.empty()) line += " :: " + witness;
    return line;
}

std::vector<std::string> suite_names() { return {"bernoulli", "barnes", "partition", "detsolver", "structure", "all"}; }

bool all_passed(const std::vector<CheckRecord>& records) {
    return std::none_of(records.begin(), records.end(),
                        [](const CheckRecord& r) { return r.status == CheckRecord::Status::fail; });
}

namespace {

using Status = CheckRecord::Status;

class Recorder {
public:
    Recorder(std::string suite, std::vector<CheckRecord>& out) : suite_(std::move(suite)), out_(out) {}

    void check(std::string name, bool ok, std::string witness) {
        out_.push_back({suite_, std::move(name), ok ? Status::pass : Status::fail, std::move(witness)});
    }
    void note(std::string name, std::string witness) {
        out_.push_back({suite_, std::move(name), Status::note, std::move(witness)});
    }

private:
    std::string suite_;
    std::vector<CheckRecord>& out_;
};

// Case counter that keeps the first failing case as the witness.
struct Tally {
    long checked = 0;
    std::string first_failure;
    void fail(std::string what) {
        if (first_failure.empty()) first_failure = std::move(what);
    }
    bool ok() const { return first_failure.empty(); }
    std::string witness() const {
        return ok() ? std::to_string(checked) + " cases" : "first failure: " + first_failure;
    }
};

void bernoulli_suite(Recorder& rec) {
    std::mt19937_64 rng(20240601);
    {
        Tally t;
        for (long n = 1; n <= 40; ++n) {
            const RatPoly b = bernoulli_poly(n);
            for (int s = 0; s < 20; ++s) {
                const Rational x = random_rational(rng);
                ++t.checked;
                if (poly_integrate(b, x, x + Rational(1)) != pow(x, n)) t.fail("n=" + std::to_string(n) + " x=" + x.to_string());
            }
        }
        rec.check("unit-interval integral of B_n(t) from x to x+1 equals x^n, n<=40", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long n = 1; n <= 40; ++n) {
            ++t.checked;
            if (forward_diff(bernoulli_poly(n)) != RatPoly::monomial(n, n - 1)) t.fail("n=" + std::to_string(n));
        }
        rec.check("B_n(x+1) - B_n(x) = n x^(n-1), n<=40", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long n = 0; n <= 40; ++n) {
            ++t.checked;
            RatPoly reflected = bernoulli_poly(n).composed_affine(-1, 1);
            if (n % 2 == 1) reflected = -reflected;
            if (reflected != bernoulli_poly(n)) t.fail("n=" + std::to_string(n));
        }
        rec.check("B_n(1-x) = (-1)^n B_n(x), n<=40", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long n = 2; n <= 40; ++n) {
            ++t.checked;
            const RatPoly b = bernoulli_poly(n);
            if (b(0) != bernoulli_number(n) || b(1) != bernoulli_number(n)) t.fail("n=" + std::to_string(n));
        }
        const bool b1 = bernoulli_poly(1)(1) == Rational(1, 2) && bernoulli_poly(1)(0) == Rational(-1, 2);
        rec.check("B_n(0) = B_n(1) = B_n for n>=2; B_1(1) = 1/2", t.ok() && b1, t.witness());
    }
    {
        Tally t;
        for (long n = 3; n <= 61; n += 2) {
            ++t.checked;
            if (!bernoulli_number(n).is_zero()) t.fail("n=" + std::to_string(n));
        }
        rec.check("B_n = 0 for odd n>=3 (recurrence output)", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long n = 1; n <= 50; ++n) {
            ++t.checked;
            const Valuation v = v2(bernoulli_number(2 * n));
            if (v != Valuation(-1)) t.fail("2n=" + std::to_string(2 * n) + " v2=" + v.to_string());
        }
        rec.check("v2(B_2n) = -1, n<=50", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long n = 1; n <= 25; ++n) {
            ++t.checked;
            if (bernoulli_number(2 * n).den() != staudt_clausen_denominator(2 * n)) t.fail("2n=" + std::to_string(2 * n));
        }
        rec.check("denominator of B_2n = product of primes p with (p-1) | 2n, n<=25", t.ok(), t.witness());
    }
}

void barnes_suite(Recorder& rec) {
    {
        Tally t;
        for (const auto& spec : corpus_specs()) {
            for (long j = 0; j <= 20; ++j) {
                ++t.checked;
                if (barnes_number(j, spec) != barnes_number_via_series(j, spec)) {
                    t.fail(spec.to_string() + " j=" + std::to_string(j));
                }
            }
        }
        rec.check("multinomial sum = power-series product for j<=20 on the corpus", t.ok(), t.witness());
    }
    {
        std::mt19937_64 rng(77);
        Tally t;
        for (const auto& spec : corpus_specs()) {
            std::vector<long> a(spec.weights().begin(), spec.weights().end());
            std::shuffle(a.begin(), a.end(), rng);
            const PartitionSpec permuted(a);
            for (long j = 0; j <= 12; ++j) {
                ++t.checked;
                if (barnes_number(j, spec) != barnes_number(j, permuted)) t.fail(spec.to_string() + " j=" + std::to_string(j));
            }
        }
        rec.check("B_j(a) invariant under permutation of a", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long a = 1; a <= 6; ++a) {
            for (long j = 0; j <= 20; ++j) {
                ++t.checked;
                if (barnes_number(j, PartitionSpec({a})) != bernoulli_number(j) * pow(Rational(a), j - 1)) {
                    t.fail("a=" + std::to_string(a) + " j=" + std::to_string(j));
                }
            }
        }
        rec.check("B_j((a)) = B_j a^(j-1)", t.ok(), t.witness());
    }
}

void partition_suite(Recorder& rec) {
    {
        Tally t;
        for (const auto& spec : corpus_specs()) {
            const QuasiPolynomial q = qp_fit_oracle(spec);
            const long n_max = 5 * spec.period();
            const auto counts = dp_count(spec, n_max);
            for (long n = 0; n <= n_max; ++n) {
                ++t.checked;
                if (qp_eval(q, n) != Rational(counts[n])) t.fail(spec.to_string() + " n=" + std::to_string(n));
            }
        }
        rec.check("interpolated quasi-polynomial reproduces dp_count for n<=5D", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long r = 1; r <= 5; ++r) {
            const auto counts = dp_count(PartitionSpec(std::vector<long>(r, 1)), 30);
            for (long n = 0; n <= 30; ++n) {
                ++t.checked;
                if (counts[n] != binomial(n + r - 1, r - 1)) t.fail("r=" + std::to_string(r) + " n=" + std::to_string(n));
            }
        }
        rec.check("p_(1,..,1)(n) = C(n+r-1, r-1), r<=5, n<=30", t.ok(), t.witness());
    }
    {
        Tally t;
        Tally general;
        for (const auto& spec : corpus_specs()) {
            const QuasiPolynomial q = qp_fit_oracle(spec);
            Rational expected(1, 1);
            expected /= Rational(factorial(spec.r() - 1));
            for (long a : spec.weights()) expected /= Rational(a);
            long g = 0;
            for (long a : spec.weights()) g = std::gcd(g, a);
            for (long v = 1; v <= spec.period(); ++v) {
                const Rational& lead = q.coefficient(spec.r() - 1, v);
                if (g == 1) {
                    ++t.checked;
                    if (lead != expected) t.fail(spec.to_string() + " v=" + std::to_string(v));
                }
                // with g = gcd(a) > 1 only multiples of g are reachable
                ++general.checked;
                const Rational want = v % g == 0 ? expected * Rational(g) : Rational(0);
                if (lead != want) general.fail(spec.to_string() + " v=" + std::to_string(v));
            }
        }
        rec.check("leading coefficient = g/((r-1)! a_1...a_r) on residues divisible by g = gcd(a), else 0",
                  general.ok(), general.witness());
        rec.check("leading coefficient = 1/((r-1)! a_1...a_r) for every residue, gcd(a) = 1", t.ok(), t.witness());
    }
}

void detsolver_suite(Recorder& rec) {
    {
        Tally t;
        for (const auto& spec : corpus_specs()) {
            const QuasiPolynomial solved = cramer_solve(spec);
            const QuasiPolynomial oracle = qp_fit_oracle(spec);
            ++t.checked;
            if (!(solved == oracle)) t.fail(spec.to_string() + " table mismatch");
            const long n_max = 5 * spec.period();
            const auto counts = dp_count(spec, n_max);
            for (long n = 0; n <= n_max; ++n) {
                ++t.checked;
                if (qp_eval(solved, n) != Rational(counts[n])) t.fail(spec.to_string() + " n=" + std::to_string(n));
            }
        }
        rec.check("Cramer solution = interpolation oracle and dp_count on the corpus", t.ok(), t.witness());
    }
    {
        std::mt19937_64 rng(4242);
        Tally t;
        for (int s = 0; s < 10; ++s) {
            const RatMatrix m = random_matrix(rng, 6, 6);
            ++t.checked;
            if (det_bareiss(m) != det_gaussian(m)) t.fail("sample " + std::to_string(s));
        }
        rec.check("Bareiss determinant = rational Gaussian determinant on random 6x6", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long r = 1; r <= 3; ++r) {
            for (long D = 1; D <= 4; ++D) {
                ++t.checked;
                const auto [direct, reflected] = transform_check(r, D);
                if (direct != reflected) t.fail("r=" + std::to_string(r) + " D=" + std::to_string(D));
            }
        }
        rec.check("direct and reflected forms of Delta_{r,D} agree, r<=3, D<=4", t.ok(), t.witness());
    }
    {
        const Rational d11 = determinant(build_matrix(1, 1));
        const Rational d21 = determinant(build_matrix(2, 1));
        rec.check("Delta_{1,1} = 1/2 and Delta_{2,1} = -1/144", d11 == Rational(1, 2) && d21 == Rational(-1, 144),
                  d11.to_string() + ", " + d21.to_string());
    }
}

void structure_suite(Recorder& rec) {
    {
        Tally t;
        for (long r = 1; r <= 3; ++r) {
            for (long D = 1; D <= 4; ++D) {
                ++t.checked;
                const bool full = rank(phi_evaluation_matrix(r, D)) == static_cast<std::size_t>(r * D);
                const bool nonzero = !determinant(build_matrix(r, D)).is_zero();
                if (full != nonzero || !full) t.fail("r=" + std::to_string(r) + " D=" + std::to_string(D));
            }
        }
        rec.check("Phi evaluation matrix has full rank rD exactly when Delta_{r,D} != 0, r<=3, D<=4", t.ok(),
                  t.witness());
    }
    {
        Tally t;
        long diagonal_selected = 0;
        long diagonal_nonzero = 0;
        std::string diagonal_example;
        for (long r = 1; r <= 4; ++r) {
            for (long D = 1; D <= 4; ++D) {
                for (long t_ = 1; t_ <= r - 1; ++t_) {
                    for (long j = 1; j <= r; ++j) {
                        const Rational value = I_jt(r, D, j, t_);
                        const std::string cell = "(r,D,j,t)=(" + std::to_string(r) + "," + std::to_string(D) + "," +
                                                 std::to_string(j) + "," + std::to_string(t_) + ")";
                        if (parity_vanishing_condition(r, D, j, t_)) {
                            ++t.checked;
                            if (!value.is_zero()) t.fail(cell + " I=" + value.to_string());
                        }
                        if (diagonal_parity_condition(D, j, t_)) {
                            ++diagonal_selected;
                            if (!value.is_zero()) {
                                ++diagonal_nonzero;
                                if (diagonal_example.empty()) diagonal_example = cell + " I=" + value.to_string();
                            }
                        }
                    }
                }
            }
        }
        rec.check("I_{j,t} = 0 when t+(D+1)r+j is odd, r<=4, D<=4", t.ok(), t.witness());
        rec.note("I_{j,t} under the condition t+(D+1)t+j odd",
                 std::to_string(diagonal_nonzero) + " of " + std::to_string(diagonal_selected) +
                     " selected cells are nonzero, e.g. " + diagonal_example);
    }
    {
        Tally t;
        for (long r = 1; r <= 3; ++r) {
            for (long D = 1; D <= 4; ++D) {
                ++t.checked;
                const bool a = !determinant(build_matrix(r, D)).is_zero();
                const bool b = !delta_prime(r, D).is_zero();
                if (a != b) t.fail("r=" + std::to_string(r) + " D=" + std::to_string(D));
            }
        }
        rec.check("Delta_{r,D} != 0 iff Delta'_{r,D} != 0, r<=3, D<=4", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long D = 1; D <= 15; ++D) {
            ++t.checked;
            if (falling_factorial_integral(D).sign() <= 0) t.fail("D=" + std::to_string(D));
        }
        rec.check("int_0^D (x)_D dx > 0, D<=15", t.ok(), t.witness());
    }
    {
        std::mt19937_64 rng(2010);
        Tally t;
        for (long r = 1; r <= 5; ++r) {
            for (long j = 1; j <= r; ++j) {
                for (int s = 0; s < 5; ++s) {
                    ++t.checked;
                    const RatPoly S = random_poly(rng, static_cast<int>(rng() % 7));
                    if (!difference_identity_check(r, j, S)) t.fail("r=" + std::to_string(r) + " j=" + std::to_string(j));
                }
            }
        }
        rec.check("x^(j-1) Delta^r S = Delta(sum_l A_{j,l} S(x+l)) on random S, r<=5", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long r = 1; r <= 6; ++r) {
            for (long j = 1; j <= r; ++j) {
                for (long ell = 0; ell < r; ++ell) {
                    ++t.checked;
                    if (!A_symmetry_check(r, j, ell)) {
                        t.fail("r=" + std::to_string(r) + " j=" + std::to_string(j) + " l=" + std::to_string(ell));
                    }
                }
            }
        }
        rec.check("A_{j,l}(x) = (-1)^(r+j) A_{j,r-1-l}(1-x), r<=6", t.ok(), t.witness());
    }
    {
        std::mt19937_64 rng(31);
        Tally t;
        for (long k = 1; k <= 3; ++k) {
            for (int s = 0; s < 5; ++s) {
                std::vector<Rational> xs(4 * k);
                for (auto& x : xs) x = random_rational(rng);
                ++t.checked;
                if (!checkerboard_check(k, xs)) t.fail("k=" + std::to_string(k));
            }
        }
        rec.check("checkerboard Hankel determinant identities on random rationals, k<=3", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long k = 1; k <= 6; ++k) {
            for (PermKind kind : {PermKind::sigma, PermKind::tau}) {
                ++t.checked;
                std::vector<long> perm(k);
                std::iota(perm.begin(), perm.end(), 1);
                long best = -1;
                long count = 0;
                std::vector<long> argmax;
                do {
                    const long s = perm_score(perm, kind);
                    if (s > best) {
                        best = s;
                        count = 1;
                        argmax = perm;
                    } else if (s == best) {
                        ++count;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (count != 1 || argmax != sigma_tau(k, kind)) {
                    t.fail("k=" + std::to_string(k) + (kind == PermKind::sigma ? " sigma" : " tau"));
                }
            }
        }
        rec.check("sigma_k and tau_k are the unique score maximizers, k<=6", t.ok(), t.witness());
    }
    {
        Tally t;
        for (long r = 1; r <= 6; ++r) {
            ++t.checked;
            if (hankel_d1(r) != determinant(build_matrix(r, 1))) t.fail("r=" + std::to_string(r));
        }
        rec.check("Hankel form equals Delta_{r,1}, r<=6", t.ok(), t.witness());
    }
    {
        std::ostringstream ratios;
        bool ok = true;
        for (long r = 2; r <= 7; ++r) {
            const long k = r / 2;
            const Rational ratio = determinant(build_matrix(r, 1)) / permutation_closed_form(r);
            Rational expected = Rational(1) / pow(Rational(2), k);
            if (r % 2 == 1) expected = -expected;
            ratios << (r > 2 ? " " : "") << "r=" << r << ":" << ratio;
            ok = ok && ratio == expected;
        }
        rec.check("Delta_{r,1} / permutation-sum closed form = (-1)^r / 2^floor(r/2), r<=7", ok, ratios.str());
    }
    {
        Tally t;
        std::ostringstream vals;
        for (long r = 1; r <= 6; ++r) {
            ++t.checked;
            const TwoAdicCertificate cert = two_adic_certificate(r);
            vals << (r > 1 ? " " : "") << "v2(Delta_" << r << ",1)=" << cert.v2_delta.to_string();
            if (!cert.holds()) t.fail("r=" + std::to_string(r));
        }
        rec.check("unique 2-adically minimal permutation term certifies Delta_{r,1} != 0, r<=6", t.ok(),
                  t.ok() ? vals.str() : t.witness());
    }
}

}  // namespace

std::vector<CheckRecord> run_suite(std::string_view suite) {
    std::vector<CheckRecord> out;
    auto run = [&](std::string_view name) {
        Recorder rec{std::string(name), out};
        if (name == "bernoulli") bernoulli_suite(rec);
        else if (name == "barnes") barnes_suite(rec);
        else if (name == "partition") partition_suite(rec);
        else if (name == "detsolver") detsolver_suite(rec);
        else if (name == "structure") structure_suite(rec);
    };
    if (suite == "all") {
        for (const auto& name : suite_names()) {
            if (name != "all") run(name);
        }
        return out;
    }
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
    }
    run(suite);
    return out;
}

}  // namespace rpart
