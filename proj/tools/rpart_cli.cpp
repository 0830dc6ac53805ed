// rpart: restricted partition counts, Bernoulli determinants, sweeps and
// verification suites from the command line.
//
// Exit codes: 0 success, 1 verification or consistency failure, 2 usage
// error, 3 zero determinant (conjecture counterexample candidate).

#include "rpart/detsolver.hpp"
#include "rpart/partition.hpp"
#include "rpart/sweep.hpp"
#include "rpart/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCounterexample = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

rpart::PartitionSpec make_spec(const std::string& csv, std::optional<long> period) {
    try {
        return period ? rpart::PartitionSpec::parse(csv, *period) : rpart::PartitionSpec::parse(csv);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

int cmd_compute(const std::string& a, long n, const std::string& method, std::optional<long> period,
                unsigned workers) {
    if (n < 0) throw UsageError("--n must be >= 0");
    const auto spec = make_spec(a, period);
    if (method == "dp") {
        std::cout << rpart::dp_count(spec, n)[n].get_str() << '\n';
        return kExitOk;
    }
    const auto q = rpart::cramer_solve(spec, {.workers = workers});
    const rpart::Rational value = rpart::qp_eval(q, n);
    if (!value.is_integer() || value.sign() < 0) {
        throw ConsistencyError("determinant route produced " + value.to_string() + " for p_a(" + std::to_string(n) +
                               "), not a count");
    }
    std::cout << value.num().get_str() << '\n';
    return kExitOk;
}

int cmd_coeffs(const std::string& a, std::optional<long> period, const std::string& format, unsigned workers) {
    const auto spec = make_spec(a, period);
    const auto q = rpart::cramer_solve(spec, {.workers = workers});
    if (format == "csv") {
        std::cout << "m,v,d\n";
        for (long m = 0; m < spec.r(); ++m) {
            for (long v = 1; v <= spec.period(); ++v) std::cout << m << ',' << v << ',' << q.coefficient(m, v) << '\n';
        }
    } else {
        std::cout << rpart::to_json(q).dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_det(long r, long D) {
    if (r < 1 || D < 1) throw UsageError("--r and --D must be >= 1");
    const rpart::Rational delta = rpart::determinant(rpart::build_matrix(r, D));
    std::cout << rpart::det_to_json(r, D, delta).dump() << '\n';
    return delta.is_zero() ? kExitCounterexample : kExitOk;
}

int cmd_sweep(long r_max, long d_max, unsigned workers, const std::string& out, const std::string& format,
              bool reproducible) {
    if (r_max < 1 || d_max < 1) throw UsageError("--r-max and --d-max must be >= 1");
    const auto report = rpart::run_sweep({r_max, d_max, workers, reproducible});
    const std::string body = format == "csv" ? rpart::sweep_to_csv(report) : rpart::sweep_to_json(report).dump(2) + "\n";
    if (out.empty() || out == "-") {
        std::cout << body;
    } else {
        std::ofstream file(out, std::ios::binary | std::ios::trunc);
        if (!file) throw UsageError("cannot open '" + out + "' for writing");
        file << body;
        file.flush();
        if (!file) throw UsageError("failed writing '" + out + "'");
        long zeros = 0;
        for (const auto& c : report.cells) zeros += c.nonzero ? 0 : 1;
        std::cerr << "sweep: " << report.cells.size() << " cells, " << zeros << " zero, written to " << out << '\n';
    }
    for (const auto& c : report.cells) {
        if (!c.nonzero) std::cerr << "zero determinant at r=" << c.r << " D=" << c.D << '\n';
    }
    return report.any_zero() ? kExitCounterexample : kExitOk;
}

int cmd_verify(const std::string& suite) {
    std::vector<rpart::CheckRecord> records;
    try {
        records = rpart::run_suite(suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    for (const auto& rec : records) std::cout << rec.to_line() << '\n';
    const bool ok = rpart::all_passed(records);
    std::cout << (ok ? "PASS" : "FAIL") << " suite " << suite << '\n';
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Restricted partition function via Bernoulli-polynomial determinants"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(rpart::kToolVersion));

    std::string a;
    long n = 0;
    std::string method = "det";
    std::optional<long> period;
    long r = 1;
    long r_max = 1;
    long d_max = 1;
    unsigned workers = 1;
    std::string out;
    std::string format = "json";
    std::string suite = "all";
    bool reproducible = false;

    auto* compute = app.add_subcommand("compute", "Print p_a(n)");
    compute->add_option("--a", a, "Comma-separated weights, e.g. 2,3,5")->required();
    compute->add_option("--n", n, "Argument n >= 0")->required();
    compute->add_option("--method", method, "det (Cramer's rule) or dp (direct count)")
        ->check(CLI::IsMember({"det", "dp"}));
    compute->add_option("--D", period, "Period, a common multiple of the weights (default lcm)");
    compute->add_option("--parallel", workers, "Worker threads for the determinants (0 = all cores)");

    auto* coeffs = app.add_subcommand("coeffs", "Print the quasi-polynomial coefficient table");
    coeffs->add_option("--a", a, "Comma-separated weights")->required();
    coeffs->add_option("--D", period, "Period, a common multiple of the weights (default lcm)");
    coeffs->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    coeffs->add_option("--parallel", workers, "Worker threads (0 = all cores)");

    auto* det = app.add_subcommand("det", "Print Delta_{r,D}");
    det->add_option("--r", r, "r >= 1")->required();
    det->add_option("--D", period, "D >= 1")->required();

    auto* sweep = app.add_subcommand("sweep", "Exact Delta_{r,D} over a grid");
    sweep->add_option("--r-max", r_max, "Largest r")->required();
    sweep->add_option("--d-max", d_max, "Largest D")->required();
    sweep->add_option("--parallel", workers, "Worker threads (0 = all cores)");
    sweep->add_option("--out", out, "Report path (default stdout)");
    sweep->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sweep->add_flag("--reproducible", reproducible, "Omit timestamp and timings");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", suite, "bernoulli, barnes, partition, detsolver, structure or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compute) return cmd_compute(a, n, method, period, workers);
        if (*coeffs) return cmd_coeffs(a, period, format, workers);
        if (*det) return cmd_det(r, period.value_or(1));
        if (*sweep) return cmd_sweep(r_max, d_max, workers, out, format, reproducible);
        if (*verify) return cmd_verify(suite);
    } catch (const rpart::ConjectureCounterexample& e) {
        std::cerr << "error: " << e.what() << " (r=" << e.r() << ", D=" << e.D() << ")\n";
        return kExitCounterexample;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
