#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace rpart {

struct CheckRecord {
    enum class Status { pass, fail, note };

    std::string suite;
    std::string name;
    Status status = Status::pass;
    std::string witness;  ///< exact values backing the verdict

    /// "PASS <suite> <name> :: <witness>"
    std::string to_line() const;
};

/// bernoulli, barnes, partition, detsolver, structure, all.
std::vector<std::string> suite_names();

/// Runs one suite (or all of them). Throws std::invalid_argument for an
/// unknown name. `note` records never count as failures.
std::vector<CheckRecord> run_suite(std::string_view suite);

bool all_passed(const std::vector<CheckRecord>& records);

}  // namespace rpart
