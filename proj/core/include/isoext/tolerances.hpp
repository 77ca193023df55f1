#pragma once

namespace isoext {

/// Default tolerances used across the pipeline. All three are relative:
/// residuals are compared against tol * max(1, scale of the data).
struct Tolerances {
    double isometry = 1e-9;   // pairwise distance residual in validate_isometry
    double rank = 1e-8;       // Gram-Schmidt admission threshold (build_span)
    double membership = 1e-9; // projection residual in contains()

    static Tolerances defaults() { return {}; }
};

/// Points of a set closer than this (in d_a) count as duplicates and are
/// rejected: near-duplicates make Gram matrices numerically singular.
inline constexpr double kDedupTolerance = 1e-12;

/// Centered-Gram discrepancy (relative) above which an extension build is
/// aborted with IsometryViolation. Between the isometry tolerance and this
/// value the build proceeds but flags a warning in its diagnostics.
inline constexpr double kHardConsistencyThreshold = 1e-4;

} // namespace isoext
