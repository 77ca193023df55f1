#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isoext/pointset.hpp"
#include "isoext/space.hpp"
#include "isoext/tolerances.hpp"

namespace isoext {

/// Per-field tolerance overrides as they appear in an instance file.
struct ToleranceOverrides {
    std::optional<double> isometry;
    std::optional<double> rank;
    std::optional<double> membership;
};

/// Resolution order: defaults, then instance overrides, then the master
/// tolerance (which sets all three when given).
Tolerances resolve_tolerances(const ToleranceOverrides& overrides,
                              std::optional<double> master);

/// One problem instance, mirroring the JSON schema:
///   {
///     "weights":    [positive numbers],
///     "pairs":      [{"x": [...], "y": [...]}, ...],
///     "base_index": 0,
///     "queries":    [[...], ...],
///     "tol":        {"isometry": ..., "rank": ..., "membership": ...},
///     "seed":       integer
///   }
/// base_index, queries, tol and seed are optional.
struct ProblemInstance {
    std::vector<double> weights;
    std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
    std::size_t base_index = 0;
    std::vector<std::vector<double>> queries;
    ToleranceOverrides tol;
    std::optional<std::uint64_t> seed;
};

/// Parses instance JSON; SchemaError on malformed input (wrong types,
/// non-positive weights, ragged arrays, base_index out of range).
ProblemInstance parse_instance(const std::string& json_text);

/// Serializes back to the schema above, numbers at 17 significant digits.
/// Optional fields are emitted only when set (queries/tol when non-empty).
std::string write_instance(const ProblemInstance& inst);

Weights instance_weights(const ProblemInstance& inst);
PairedSample instance_sample(const Weights& a, const ProblemInstance& inst);
std::vector<WeightedVector> instance_queries(const ProblemInstance& inst);

} // namespace isoext
