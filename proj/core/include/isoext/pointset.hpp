#pragma once

#include <cstddef>
#include <vector>

#include "isoext/space.hpp"
#include "isoext/tolerances.hpp"

namespace isoext {

/// A finite set of points of the truncated space. Construction checks
/// conformance with the weights and rejects near-duplicate points (pairwise
/// d_a distance must exceed the dedup tolerance). Immutable afterwards.
class PointSet {
public:
    PointSet(const Weights& a, std::vector<WeightedVector> points,
             double dedup_tol = kDedupTolerance);

    std::size_t size() const { return points_.size(); }
    const WeightedVector& operator[](std::size_t k) const { return points_[k]; }
    const std::vector<WeightedVector>& points() const { return points_; }

private:
    std::vector<WeightedVector> points_;
};

struct PointPair {
    WeightedVector source;
    WeightedVector target;
};

/// The local isometry f as explicit (source, target) pairs. Sources must be
/// pairwise distinct and targets pairwise distinct (f is a bijection onto
/// its image); base_index selects the distinguished pair (p, q) with
/// q = f(p). Whether the pairing actually preserves distances is checked
/// separately by validate_isometry.
class PairedSample {
public:
    PairedSample(const Weights& a, std::vector<PointPair> pairs,
                 std::size_t base_index = 0,
                 double dedup_tol = kDedupTolerance);

    std::size_t size() const { return pairs_.size(); }
    const std::vector<PointPair>& pairs() const { return pairs_; }
    std::size_t base_index() const { return base_index_; }

    const WeightedVector& base_source() const { return pairs_[base_index_].source; }
    const WeightedVector& base_target() const { return pairs_[base_index_].target; }

    std::vector<WeightedVector> source_points() const;
    std::vector<WeightedVector> target_points() const;

    /// Same pairing with source/target roles swapped (f^-1).
    PairedSample reversed(const Weights& a) const;

    /// Same pairing anchored at a different base pair.
    PairedSample with_base_index(const Weights& a, std::size_t base_index) const;

private:
    std::vector<PointPair> pairs_;
    std::size_t base_index_;
};

struct ValidationReport {
    double max_abs_residual = 0.0;  // max over pairs |d(f x, f y) - d(x, y)|
    double max_rel_residual = 0.0;  // per-pair residual / max(1, d(x, y))
    double gram_residual = 0.0;     // max |<fx-q, fy-q>_a - <x-p, y-p>_a|
    double gram_residual_rel = 0.0; // scaled by max(1, largest |Gram entry|)
    double tolerance = 0.0;
    bool pass = false;
};

/// Checks d_a(f(x), f(y)) = d_a(x, y) over all pairs, plus the centered
/// Gram discrepancy (distance preservation forces inner-product
/// preservation, so the two residuals travel together).
ValidationReport validate_isometry(const Weights& a, const PairedSample& s, double tol);

struct CubeViolation {
    std::size_t point;      // 0-based index into the set
    std::size_t coordinate; // 1-based
    double value;
};

struct CubeReport {
    bool inside = true;
    std::vector<CubeViolation> violations;
};

/// Reports whether every coordinate of every point lies in [0,1]. The
/// constructions only need boundedness, so this is informational.
CubeReport cube_check(const PointSet& ps);

struct RadiusReport {
    double max_distance = 0.0;      // max_x d_a(x, p)
    double enclosing_radius = 0.0;  // strictly larger, suitable for B_r(p)
};

RadiusReport bounding_radius(const Weights& a, const PointSet& ps,
                             const WeightedVector& p);

} // namespace isoext
