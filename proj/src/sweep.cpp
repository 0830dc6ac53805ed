#include "rpart/sweep.hpp"

#include "rpart/detsolver.hpp"
#include "rpart/parallel.hpp"

#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>

namespace rpart {

bool SweepReport::any_zero() const {
    for (const auto& c : cells) {
        if (!c.nonzero) return true;
    }
    return false;
}

namespace {

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace

SweepReport run_sweep(const SweepOptions& options) {
    if (options.r_max < 1 || options.d_max < 1) throw std::invalid_argument("sweep bounds must be >= 1");
    SweepReport report;
    report.meta.r_max = options.r_max;
    report.meta.d_max = options.d_max;
    if (!options.reproducible) report.meta.timestamp = utc_timestamp();

    report.cells.resize(static_cast<std::size_t>(options.r_max * options.d_max));
    parallel_for(report.cells.size(), options.workers, [&](std::size_t i) {
        SweepCell& cell = report.cells[i];
        cell.r = static_cast<long>(i) / options.d_max + 1;
        cell.D = static_cast<long>(i) % options.d_max + 1;
        const auto start = std::chrono::steady_clock::now();
        cell.delta = determinant(build_matrix(cell.r, cell.D));
        const auto stop = std::chrono::steady_clock::now();
        cell.nonzero = !cell.delta.is_zero();
        cell.elapsed_ms =
            options.reproducible ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    });
    return report;
}

namespace {

nlohmann::ordered_json cell_json(const SweepCell& c, bool with_timing) {
    nlohmann::ordered_json j = det_to_json(c.r, c.D, c.delta);
    if (with_timing) j["elapsed_ms"] = c.elapsed_ms;
    return j;
}

}  // namespace

nlohmann::ordered_json sweep_to_json(const SweepReport& report) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["tool"] = report.meta.tool;
    doc["version"] = report.meta.version;
    doc["timestamp"] = report.meta.timestamp;
    doc["grid"] = {{"r_max", report.meta.r_max}, {"d_max", report.meta.d_max}};
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& c : report.cells) cells.push_back(cell_json(c, true));
    doc["cells"] = std::move(cells);
    return doc;
}

std::string sweep_to_csv(const SweepReport& report) {
    std::ostringstream os;
    os << "r,D,delta,nonzero,elapsed_ms\n";
    for (const auto& c : report.cells) {
        os << c.r << ',' << c.D << ',' << c.delta << ',' << (c.nonzero ? "true" : "false") << ',' << c.elapsed_ms
           << '\n';
    }
    return os.str();
}

std::string cells_payload(const SweepReport& report) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const auto& c : report.cells) cells.push_back(cell_json(c, false));
    return cells.dump();
}

}  // namespace rpart
