#include "isoext/span.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace isoext {

IndexSet::IndexSet(std::vector<std::size_t> indices, Kind kind, std::size_t dim)
    : indices_(std::move(indices)), kind_(kind), dim_(dim) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
    for (std::size_t i : indices_) {
        if (i < 1 || i > dim_) {
            throw IndexError("index set entry " + std::to_string(i) +
                             " outside 1.." + std::to_string(dim_));
        }
    }
}

bool IndexSet::contains(std::size_t i) const {
    return std::binary_search(indices_.begin(), indices_.end(), i);
}

AffineSpan::AffineSpan(WeightedVector base, std::vector<WeightedVector> basis,
                       int order)
    : base_(std::move(base)), basis_(std::move(basis)), order_(order) {
    for (const auto& b : basis_) detail::require_same_dim(base_, b);
    if (order_ < 1) {
        throw InvalidValue("span order must be at least 1");
    }
}

GramSchmidtResult orthonormalize(const Weights& a,
                                 const std::vector<WeightedVector>& vectors,
                                 double rel_tol) {
    GramSchmidtResult result;
    const std::size_t m = vectors.size();
    if (m == 0) return result;
    for (const auto& v : vectors) detail::require_conformant(a, v);

    // Working residuals plus their expansions in the inputs. Every update to
    // a residual is mirrored on its coefficient row, so basis[k] stays equal
    // to sum_j coefficients[k][j] * vectors[j].
    std::vector<WeightedVector> residual(vectors);
    std::vector<std::vector<double>> coeff(m, std::vector<double>(m, 0.0));
    std::vector<bool> used(m, false);
    std::vector<double> norms(m, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
        coeff[j][j] = 1.0;
        norms[j] = norm(a, residual[j]);
        result.largest_input_norm = std::max(result.largest_input_norm, norms[j]);
    }

    const double threshold = rel_tol * result.largest_input_norm;

    for (;;) {
        std::size_t pivot = m;
        double best = threshold;
        for (std::size_t j = 0; j < m; ++j) {
            if (!used[j] && norms[j] > best) {
                pivot = j;
                best = norms[j];
            }
        }
        if (pivot == m) break;
        used[pivot] = true;

        WeightedVector v = residual[pivot];
        std::vector<double> c = coeff[pivot];
        // One full re-orthogonalization pass against the accepted basis
        // before normalizing; the running MGS updates below leave only
        // first-order defects for this pass to clean up.
        for (std::size_t k = 0; k < result.basis.size(); ++k) {
            const double s = inner(a, v, result.basis[k]);
            axpy(-s, result.basis[k], v);
            for (std::size_t j = 0; j < m; ++j) c[j] -= s * result.coefficients[k][j];
        }
        const double nv = norm(a, v);
        if (nv <= threshold) continue;

        const double inv = 1.0 / nv;
        v = scale(inv, v);
        for (double& cj : c) cj *= inv;
        result.basis.push_back(v);
        result.coefficients.push_back(std::move(c));
        result.pivots.push_back(pivot);

        for (std::size_t j = 0; j < m; ++j) {
            if (used[j]) continue;
            const double s = inner(a, residual[j], v);
            axpy(-s, v, residual[j]);
            for (std::size_t l = 0; l < m; ++l) {
                coeff[j][l] -= s * result.coefficients.back()[l];
            }
            norms[j] = norm(a, residual[j]);
        }
    }
    return result;
}

AffineSpan build_span(const Weights& a, const PointSet& E,
                      const WeightedVector& p, double tol) {
    detail::require_conformant(a, p);
    if (tol <= 0.0) {
        throw InvalidValue("build_span: rank tolerance must be positive");
    }
    bool base_found = false;
    for (const auto& x : E.points()) {
        if (distance(a, x, p) <= kDedupTolerance) {
            base_found = true;
            break;
        }
    }
    if (!base_found) {
        throw BaseNotInSet("build_span: base point is not a point of the set");
    }

    std::vector<WeightedVector> differences;
    differences.reserve(E.size());
    for (const auto& x : E.points()) {
        differences.push_back(subtract(x, p));
    }
    GramSchmidtResult gs = orthonormalize(a, differences, tol);
    return AffineSpan(p, std::move(gs.basis), 1);
}

double membership_residual(const Weights& a, const AffineSpan& S,
                           const WeightedVector& u) {
    detail::require_conformant(a, u);
    WeightedVector d = subtract(u, S.base());
    for (const auto& b : S.basis()) {
        axpy(-inner(a, d, b), b, d);
    }
    return norm(a, d);
}

bool contains(const Weights& a, const AffineSpan& S, const WeightedVector& u,
              double tol) {
    const double offset = distance(a, u, S.base());
    return membership_residual(a, S, u) <= tol * std::max(1.0, offset);
}

WeightedVector project(const Weights& a, const AffineSpan& S,
                       const WeightedVector& u) {
    detail::require_conformant(a, u);
    const WeightedVector d = subtract(u, S.base());
    WeightedVector out = S.base();
    for (const auto& b : S.basis()) {
        axpy(inner(a, d, b), b, out);
    }
    return out;
}

IndexSet index_set_finite(const Weights& a, const PointSet& E, double tol) {
    const std::size_t n = a.dim();
    std::vector<std::size_t> found;
    const auto& pts = E.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            std::size_t differing = 0;
            std::size_t where = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (std::abs(pts[i][c] - pts[j][c]) > tol) {
                    ++differing;
                    where = c + 1;
                    if (differing > 1) break;
                }
            }
            if (differing == 1) found.push_back(where);
        }
    }
    return IndexSet(std::move(found), IndexSet::Kind::Combinatorial, n);
}

IndexSet index_set_span(const Weights& a, const AffineSpan& S, double tol) {
    if (tol <= 0.0) {
        throw InvalidValue("index_set_span: tolerance must be positive");
    }
    std::vector<std::size_t> found;
    for (std::size_t i = 1; i <= a.dim(); ++i) {
        WeightedVector u = S.base();
        u[i - 1] += 1.0;
        if (contains(a, S, u, tol)) found.push_back(i);
    }
    return IndexSet(std::move(found), IndexSet::Kind::Subspace, a.dim());
}

AffineSpan gs_power(const Weights& a, const PointSet& E, const WeightedVector& p,
                    int order, double radius, double tol) {
    if (order < 1) {
        throw InvalidValue("gs_power: order must be at least 1");
    }
    const RadiusReport enclosure = bounding_radius(a, E, p);
    if (radius <= enclosure.max_distance) {
        throw RadiusTooSmall("gs_power: radius " + std::to_string(radius) +
                             " does not enclose the set (max distance " +
                             std::to_string(enclosure.max_distance) + ")");
    }

    AffineSpan current = build_span(a, E, p, tol);
    for (int n = 2; n <= order; ++n) {
        // Intersect with B_radius(p): each direction is represented by a
        // point p + (radius/2) b inside the ball, then re-spanned.
        std::vector<WeightedVector> points;
        points.reserve(current.rank() + 1);
        points.push_back(p);
        for (const auto& b : current.basis()) {
            WeightedVector x = p;
            axpy(0.5 * radius, b, x);
            points.push_back(std::move(x));
        }
        AffineSpan next = build_span(a, PointSet(a, std::move(points)), p, tol);
        current = AffineSpan(p, next.basis(), n);
    }
    return current;
}

double subspace_residual(const Weights& a, const AffineSpan& S,
                         const AffineSpan& T) {
    double worst = 0.0;
    auto side = [&](const AffineSpan& from, const AffineSpan& onto) {
        for (const auto& b : from.basis()) {
            WeightedVector r = b;
            for (const auto& c : onto.basis()) {
                axpy(-inner(a, r, c), c, r);
            }
            worst = std::max(worst, norm(a, r));
        }
    };
    side(S, T);
    side(T, S);
    return worst;
}

namespace {

void check_interval(const CoordinateInterval& f, const std::string& at) {
    switch (f.kind) {
    case CoordinateInterval::Kind::LowerSlab:
        if (!(f.lower == 0.0 && 0.0 < f.upper && f.upper < 1.0))
            throw InvalidValue("cylinder: [0,c] needs 0 < c < 1" + at);
        break;
    case CoordinateInterval::Kind::Inner:
        if (!(0.0 < f.lower && f.lower < f.upper && f.upper < 1.0))
            throw InvalidValue("cylinder: [lo,hi] needs 0 < lo < hi < 1" + at);
        break;
    case CoordinateInterval::Kind::UpperSlab:
        if (!(0.0 < f.lower && f.lower < 1.0 && f.upper == 1.0))
            throw InvalidValue("cylinder: [c,1] needs 0 < c < 1" + at);
        break;
    case CoordinateInterval::Kind::Point:
        if (!(0.0 <= f.lower && f.lower <= 1.0 && f.lower == f.upper))
            throw InvalidValue("cylinder: point needs 0 <= c <= 1" + at);
        break;
    case CoordinateInterval::Kind::Full:
        if (!(f.lower == 0.0 && f.upper == 1.0))
            throw InvalidValue("cylinder: full factor must be [0,1]" + at);
        break;
    }
}

CoordinateInterval checked(CoordinateInterval f) {
    check_interval(f, "");
    return f;
}

} // namespace

CoordinateInterval CoordinateInterval::lower_slab(double hi) {
    return checked({Kind::LowerSlab, 0.0, hi});
}
CoordinateInterval CoordinateInterval::inner(double lo, double hi) {
    return checked({Kind::Inner, lo, hi});
}
CoordinateInterval CoordinateInterval::upper_slab(double lo) {
    return checked({Kind::UpperSlab, lo, 1.0});
}
CoordinateInterval CoordinateInterval::point(double at) {
    return checked({Kind::Point, at, at});
}
CoordinateInterval CoordinateInterval::full() {
    return {Kind::Full, 0.0, 1.0};
}

BasicCylinder::BasicCylinder(std::vector<CoordinateInterval> intervals)
    : intervals_(std::move(intervals)) {
    if (intervals_.empty()) {
        throw InvalidValue("cylinder: need at least one coordinate");
    }
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        check_interval(intervals_[i], " at coordinate " + std::to_string(i + 1));
    }
}

BasicCylinder::Classification BasicCylinder::classification() const {
    std::size_t points = 0;
    for (const auto& f : intervals_) {
        if (f.kind == CoordinateInterval::Kind::Point) ++points;
    }
    if (points == 0) return Classification::NonDegenerate;
    if (2 * points > intervals_.size()) return Classification::IntervalLike;
    return Classification::Degenerate;
}

bool BasicCylinder::contains_point(const WeightedVector& p) const {
    if (p.dim() != intervals_.size()) {
        throw DimensionError("cylinder containment: dimension mismatch");
    }
    for (std::size_t k = 0; k < intervals_.size(); ++k) {
        if (p[k] < intervals_[k].lower || p[k] > intervals_[k].upper) return false;
    }
    return true;
}

IndexSet cylinder_index_set(const BasicCylinder& J) {
    std::vector<std::size_t> free;
    for (std::size_t i = 1; i <= J.dim(); ++i) {
        if (J.interval(i).kind != CoordinateInterval::Kind::Point) free.push_back(i);
    }
    return IndexSet(std::move(free), IndexSet::Kind::Combinatorial, J.dim());
}

AffineSpan cylinder_span(const Weights& a, const BasicCylinder& J,
                         const WeightedVector& p, double tol) {
    detail::require_conformant(a, p);
    if (a.dim() != J.dim()) {
        throw DimensionError("cylinder_span: weights/cylinder dimension mismatch");
    }
    (void)tol; // the axis basis is orthonormal by construction
    if (!J.contains_point(p)) {
        throw BaseNotInSet("cylinder_span: base point lies outside the cylinder");
    }
    std::vector<WeightedVector> basis;
    const IndexSet free = cylinder_index_set(J);
    for (std::size_t i : free.indices()) {
        basis.push_back(unit_basis(a, i));
    }
    return AffineSpan(p, std::move(basis), 1);
}

} // namespace isoext
