#include "isoext/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace isoext {

namespace {

void check_distinct(const Weights& a, const std::vector<WeightedVector>& pts,
                    double dedup_tol, const char* what) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (distance(a, pts[i], pts[j]) <= dedup_tol) {
                throw DuplicatePoint(std::string(what) + ": points " +
                                     std::to_string(i) + " and " + std::to_string(j) +
                                     " coincide within the dedup tolerance");
            }
        }
    }
}

} // namespace

PointSet::PointSet(const Weights& a, std::vector<WeightedVector> points,
                   double dedup_tol)
    : points_(std::move(points)) {
    if (points_.empty()) {
        throw InvalidValue("point set: need at least one point");
    }
    for (const auto& p : points_) detail::require_conformant(a, p);
    check_distinct(a, points_, dedup_tol, "point set");
}

PairedSample::PairedSample(const Weights& a, std::vector<PointPair> pairs,
                           std::size_t base_index, double dedup_tol)
    : pairs_(std::move(pairs)), base_index_(base_index) {
    if (pairs_.empty()) {
        throw InvalidValue("pairing: need at least one pair");
    }
    if (base_index_ >= pairs_.size()) {
        throw IndexError("pairing: base_index " + std::to_string(base_index_) +
                         " outside 0.." + std::to_string(pairs_.size() - 1));
    }
    for (const auto& pr : pairs_) {
        detail::require_conformant(a, pr.source);
        detail::require_conformant(a, pr.target);
    }
    try {
        check_distinct(a, source_points(), dedup_tol, "sources");
        check_distinct(a, target_points(), dedup_tol, "targets");
    } catch (const DuplicatePoint& e) {
        throw MalformedPairing(e.what());
    }
}

std::vector<WeightedVector> PairedSample::source_points() const {
    std::vector<WeightedVector> out;
    out.reserve(pairs_.size());
    for (const auto& pr : pairs_) out.push_back(pr.source);
    return out;
}

std::vector<WeightedVector> PairedSample::target_points() const {
    std::vector<WeightedVector> out;
    out.reserve(pairs_.size());
    for (const auto& pr : pairs_) out.push_back(pr.target);
    return out;
}

PairedSample PairedSample::reversed(const Weights& a) const {
    std::vector<PointPair> swapped;
    swapped.reserve(pairs_.size());
    for (const auto& pr : pairs_) swapped.push_back({pr.target, pr.source});
    return PairedSample(a, std::move(swapped), base_index_);
}

PairedSample PairedSample::with_base_index(const Weights& a,
                                           std::size_t base_index) const {
    return PairedSample(a, pairs_, base_index);
}

ValidationReport validate_isometry(const Weights& a, const PairedSample& s,
                                   double tol) {
    if (tol <= 0.0) {
        throw InvalidValue("validate_isometry: tolerance must be positive");
    }
    ValidationReport report;
    report.tolerance = tol;

    const auto& pairs = s.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const double ds = distance(a, pairs[i].source, pairs[j].source);
            const double dt = distance(a, pairs[i].target, pairs[j].target);
            const double abs_res = std::abs(dt - ds);
            report.max_abs_residual = std::max(report.max_abs_residual, abs_res);
            report.max_rel_residual =
                std::max(report.max_rel_residual, abs_res / std::max(1.0, ds));
        }
    }

    // Centered Gram discrepancy: distance preservation forces
    // <f(x)-q, f(y)-q>_a = <x-p, y-p>_a, so this residual must track the
    // distance residual.
    const WeightedVector& p = s.base_source();
    const WeightedVector& q = s.base_target();
    double scale = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const WeightedVector dsi = subtract(pairs[i].source, p);
        const WeightedVector dti = subtract(pairs[i].target, q);
        for (std::size_t j = i; j < pairs.size(); ++j) {
            const WeightedVector dsj = subtract(pairs[j].source, p);
            const WeightedVector dtj = subtract(pairs[j].target, q);
            const double gs = inner(a, dsi, dsj);
            const double gt = inner(a, dti, dtj);
            report.gram_residual = std::max(report.gram_residual, std::abs(gt - gs));
            scale = std::max(scale, std::abs(gs));
        }
    }
    report.gram_residual_rel = report.gram_residual / std::max(1.0, scale);

    report.pass = report.max_rel_residual <= tol;
    return report;
}

CubeReport cube_check(const PointSet& ps) {
    CubeReport report;
    for (std::size_t k = 0; k < ps.size(); ++k) {
        const auto& pt = ps[k];
        for (std::size_t c = 0; c < pt.dim(); ++c) {
            if (pt[c] < 0.0 || pt[c] > 1.0) {
                report.violations.push_back({k, c + 1, pt[c]});
            }
        }
    }
    report.inside = report.violations.empty();
    return report;
}

RadiusReport bounding_radius(const Weights& a, const PointSet& ps,
                             const WeightedVector& p) {
    detail::require_conformant(a, p);
    RadiusReport report;
    for (const auto& x : ps.points()) {
        report.max_distance = std::max(report.max_distance, distance(a, x, p));
    }
    report.enclosing_radius =
        report.max_distance > 0.0 ? report.max_distance * (1.0 + 1e-6) : 1.0;
    return report;
}

} // namespace isoext
