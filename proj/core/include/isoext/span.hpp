#pragma once

#include <cstddef>
#include <vector>

#include "isoext/pointset.hpp"
#include "isoext/space.hpp"
#include "isoext/tolerances.hpp"

namespace isoext {

/// Sorted duplicate-free set of coordinate indices (1-based, within 1..N).
class IndexSet {
public:
    enum class Kind {
        Combinatorial, // axis-aligned point pairs of a finite set
        Subspace       // axis directions contained in a span
    };

    IndexSet(std::vector<std::size_t> indices, Kind kind, std::size_t dim);

    const std::vector<std::size_t>& indices() const { return indices_; }
    Kind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    std::size_t size() const { return indices_.size(); }
    bool contains(std::size_t i) const;

    bool operator==(const IndexSet& other) const {
        return indices_ == other.indices_;
    }

private:
    std::vector<std::size_t> indices_;
    Kind kind_;
    std::size_t dim_;
};

/// An affine subspace base + span{basis}, with the basis orthonormal with
/// respect to <.,.>_a. Represents the generalized linear span of a point
/// set: at finite truncation the finite linear combinations of differences
/// form exactly this (automatically closed) subspace, so closed() is
/// constitutively true; the order records which iterate of the span
/// recursion produced the object.
class AffineSpan {
public:
    AffineSpan(WeightedVector base, std::vector<WeightedVector> basis, int order);

    const WeightedVector& base() const { return base_; }
    const std::vector<WeightedVector>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.size(); }
    int order() const { return order_; }
    bool closed() const { return true; }

private:
    WeightedVector base_;
    std::vector<WeightedVector> basis_;
    int order_;
};

/// Output of the pivoted Gram-Schmidt pass, with provenance: basis[k] equals
/// sum_j coefficients[k][j] * input[j] (the coefficient rows are what lets
/// the extension module transport the orthonormalization onto the paired
/// target differences).
struct GramSchmidtResult {
    std::vector<WeightedVector> basis;
    std::vector<std::vector<double>> coefficients;
    std::vector<std::size_t> pivots;   // input index chosen at each step
    double largest_input_norm = 0.0;
};

/// Modified Gram-Schmidt with greedy pivoting (largest residual norm first,
/// ties to the lowest input index) and one full re-orthogonalization pass on
/// each pivot before normalization. A vector is admitted iff its residual
/// norm exceeds rel_tol * (largest input norm). Deterministic: the pivot
/// order is part of the contract.
GramSchmidtResult orthonormalize(const Weights& a,
                                 const std::vector<WeightedVector>& vectors,
                                 double rel_tol);

/// Orthonormal basis of span{x - p : x in E}. Requires p to be one of the
/// points of E (within the dedup tolerance).
AffineSpan build_span(const Weights& a, const PointSet& E,
                      const WeightedVector& p, double tol = Tolerances{}.rank);

/// Residual of u against the span: ||(u-base) - proj(u-base)||_a.
double membership_residual(const Weights& a, const AffineSpan& S,
                           const WeightedVector& u);

/// True iff the membership residual is at most tol * max(1, ||u - base||_a).
bool contains(const Weights& a, const AffineSpan& S, const WeightedVector& u,
              double tol = Tolerances{}.membership);

/// base + sum_k <u - base, b_k>_a b_k.
WeightedVector project(const Weights& a, const AffineSpan& S,
                       const WeightedVector& u);

/// Index set of a finite set: i is in the result iff some pair of points of
/// E differs along e_i only (above tol in coordinate i, at most tol
/// elsewhere). Exhaustive pair scan.
IndexSet index_set_finite(const Weights& a, const PointSet& E, double tol);

/// Index set of a translated subspace: i is in the result iff e_i lies in
/// the direction space, i.e. contains(S, base + e_i).
IndexSet index_set_span(const Weights& a, const AffineSpan& S, double tol);

/// The iterated span: order 1 is build_span; each further order intersects
/// the previous span with the ball B_r(p) (by rescaling direction
/// representatives into the ball) and re-spans. The direction subspace is
/// expected to be invariant across orders and radii; the recursion is run
/// literally so that invariance is a testable property, not an assumption.
AffineSpan gs_power(const Weights& a, const PointSet& E, const WeightedVector& p,
                    int order, double radius, double tol = Tolerances{}.rank);

/// Largest mutual projection residual between the two direction spaces
/// (0 for equal subspaces; used as the subspace-equality oracle).
double subspace_residual(const Weights& a, const AffineSpan& S, const AffineSpan& T);

/// Per-coordinate factor of a basic cylinder. Bounds follow the cylinder
/// definition: inner endpoints strictly inside (0,1), point coordinates
/// anywhere in [0,1].
struct CoordinateInterval {
    enum class Kind { LowerSlab, Inner, UpperSlab, Point, Full };
    Kind kind = Kind::Full;
    double lower = 0.0;
    double upper = 1.0;

    static CoordinateInterval lower_slab(double hi);        // [0, hi]
    static CoordinateInterval inner(double lo, double hi);  // [lo, hi]
    static CoordinateInterval upper_slab(double lo);        // [lo, 1]
    static CoordinateInterval point(double at);             // {at}
    static CoordinateInterval full();                       // [0, 1]
};

/// Product of per-coordinate intervals inside the unit cube. The point
/// coordinates play the role of the degenerate factor set: none makes the
/// cylinder non-degenerate, finitely many a degenerate cylinder. With more
/// than half the coordinates degenerate we label the object interval-like,
/// purely for reporting (the genuinely infinite case has no finite analog).
class BasicCylinder {
public:
    enum class Classification { NonDegenerate, Degenerate, IntervalLike };

    explicit BasicCylinder(std::vector<CoordinateInterval> intervals);

    std::size_t dim() const { return intervals_.size(); }
    const std::vector<CoordinateInterval>& intervals() const { return intervals_; }
    const CoordinateInterval& interval(std::size_t i) const { return intervals_[i - 1]; }

    Classification classification() const;
    bool contains_point(const WeightedVector& p) const;

private:
    std::vector<CoordinateInterval> intervals_;
};

/// The non-point coordinates of J.
IndexSet cylinder_index_set(const BasicCylinder& J);

/// Span of a cylinder through p: base p, basis {(1/a_i) e_i : i in
/// Lambda(J)}. Requires p in J coordinatewise.
AffineSpan cylinder_span(const Weights& a, const BasicCylinder& J,
                         const WeightedVector& p, double tol = Tolerances{}.rank);

} // namespace isoext
