#pragma once

#include <cstddef>
#include <vector>

#include "isoext/extension.hpp"
#include "isoext/space.hpp"
#include "isoext/span.hpp"
#include "isoext/tolerances.hpp"

namespace isoext {

/// Extends an orthonormal family to a complete orthonormal family of the
/// whole truncated space. Candidates are the axis vectors (1/a_i) e_i; at
/// each step the candidate with the largest residual after projection onto
/// the family built so far is orthonormalized and admitted, ties broken by
/// lowest index. Returns only the added vectors. Deterministic given inputs;
/// NotOrthonormal when the partial family fails its Gram check.
std::vector<WeightedVector> complete_basis(const Weights& a,
                                           const std::vector<WeightedVector>& partial,
                                           double tol = 1e-8);

/// A d_a-isometry of the whole truncated space: x -> q + L(x - p) with L the
/// weighted-orthogonal operator sending source_basis[k] to target_basis[k].
/// The first rank() members of each basis come from the span-level operator
/// (domain basis and its images); the rest are completion vectors.
class GlobalIsometry {
public:
    GlobalIsometry(WeightedVector p, WeightedVector q,
                   std::vector<WeightedVector> source_basis,
                   std::vector<WeightedVector> target_basis,
                   std::size_t span_rank,
                   std::vector<std::vector<double>> matrix);

    const WeightedVector& p() const { return p_; }
    const WeightedVector& q() const { return q_; }
    const std::vector<WeightedVector>& source_basis() const { return source_basis_; }
    const std::vector<WeightedVector>& target_basis() const { return target_basis_; }
    std::size_t span_rank() const { return span_rank_; }
    std::size_t dim() const { return source_basis_.size(); }

    /// L in ambient coordinates, row-major: L[i][j] is the i-th coordinate
    /// of the image of the ambient e_{j+1} direction.
    const std::vector<std::vector<double>>& matrix() const { return matrix_; }

private:
    WeightedVector p_, q_;
    std::vector<WeightedVector> source_basis_, target_basis_;
    std::size_t span_rank_;
    std::vector<std::vector<double>> matrix_;
};

/// Completes the span-level operator to a global isometry: both the domain
/// basis and its images are extended to complete orthonormal families by
/// complete_basis, and L is defined by the basis correspondence. Agrees with
/// F on F's domain span.
GlobalIsometry build_global(const Weights& a, const SpanIsometry& F,
                            double tol = 1e-8);

/// Assembles a global isometry directly from two complete orthonormal
/// families (computing the ambient matrix). The bases are trusted as given.
GlobalIsometry make_global_isometry(const Weights& a, WeightedVector p,
                                    WeightedVector q,
                                    std::vector<WeightedVector> source_basis,
                                    std::vector<WeightedVector> target_basis,
                                    std::size_t span_rank);

/// q + L(x - p), applied through the basis correspondence.
WeightedVector apply_global(const Weights& a, const GlobalIsometry& G,
                            const WeightedVector& x);

struct DecompositionReport {
    std::size_t span_dimension = 0;
    std::size_t complement_dimension = 0;
    std::size_t total_dimension = 0;
    double max_cross_inner = 0.0; // between image family and completion family
};

/// Direct-sum check: the image of the whole space splits into the image span
/// and the subspace spanned by the completion targets, orthogonal to each
/// other.
DecompositionReport decompose(const Weights& a, const GlobalIsometry& G,
                              const SpanIsometry& F);

/// The intermediate-lambda variant of the completion, for axis-aligned
/// domains: the operator is defined on the axis-aligned span over lambda
/// (which must contain the domain's axis set), mapping (1/a_i) e_i to the
/// F-image for domain axes and to successive completion vectors for the
/// rest. Returns a span-level operator since the domain is not the whole
/// space unless lambda = {1..N}.
SpanIsometry restrict_to_axes(const Weights& a, const SpanIsometry& F,
                              const IndexSet& lambda, double tol = 1e-8);

} // namespace isoext
