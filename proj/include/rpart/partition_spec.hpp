#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rpart {

/// The weights a = (a_1, ..., a_r) of a restricted partition problem and a
/// period D that every a_i divides.
class PartitionSpec {
public:
    /// Period defaults to lcm(a). Throws std::invalid_argument on an empty
    /// list or a non-positive weight.
    explicit PartitionSpec(std::vector<long> weights);
    /// Throws std::invalid_argument if some a_i does not divide period.
    PartitionSpec(std::vector<long> weights, long period);

    /// Parses "2,3,5".
    static PartitionSpec parse(std::string_view csv);
    static PartitionSpec parse(std::string_view csv, long period);

    std::span<const long> weights() const { return a_; }
    long r() const { return static_cast<long>(a_.size()); }
    long period() const { return period_; }

    std::string to_string() const;

    friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;

private:
    std::vector<long> a_;
    long period_;
};

long lcm_of(std::span<const long> values);

/// The fixed test corpus: (1), (2), (3), (1,1), (1,2), (2,3), (1,1,1),
/// (1,2,3), (2,3,4), (4,6), (1,2,3,4), each with period lcm(a).
std::vector<PartitionSpec> corpus_specs();

}  // namespace rpart
