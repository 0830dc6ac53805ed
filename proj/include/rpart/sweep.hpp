#pragma once

#include "rpart/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace rpart {

inline constexpr const char* kToolName = "rpart";
inline constexpr const char* kToolVersion = "0.1.0";

struct SweepCell {
    long r = 0;
    long D = 0;
    Rational delta;
    bool nonzero = false;
    long elapsed_ms = 0;
};

struct SweepMetadata {
    std::string tool = kToolName;
    std::string version = kToolVersion;
    std::string timestamp;  ///< ISO 8601 UTC, empty in reproducible mode
    long r_max = 0;
    long d_max = 0;
};

struct SweepReport {
    SweepMetadata meta;
    std::vector<SweepCell> cells;  ///< sorted by (r, D)

    bool any_zero() const;
};

struct SweepOptions {
    long r_max = 1;
    long d_max = 1;
    unsigned workers = 1;  ///< 0 = available cores
    /// Zero every elapsed_ms and leave the timestamp empty, so whole
    /// reports are byte-comparable.
    bool reproducible = false;
};

/// Exact Delta_{r,D} for 1 <= r <= r_max, 1 <= D <= d_max. Throws
/// std::invalid_argument on bounds < 1.
SweepReport run_sweep(const SweepOptions& options);

/// {"schema":1,"tool":..,"version":..,"timestamp":..,"grid":{..},
///  "cells":[{"r","D","delta","nonzero","elapsed_ms"}]}
nlohmann::ordered_json sweep_to_json(const SweepReport& report);

/// Header r,D,delta,nonzero,elapsed_ms.
std::string sweep_to_csv(const SweepReport& report);

/// Cells serialized without timing, for comparing runs.
std::string cells_payload(const SweepReport& report);

}  // namespace rpart
