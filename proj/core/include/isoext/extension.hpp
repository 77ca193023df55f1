#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "isoext/pointset.hpp"
#include "isoext/span.hpp"
#include "isoext/tolerances.hpp"

namespace isoext {

struct ExtensionDiagnostics {
    double gram_residual = 0.0;       // max |Gram(sources-p) - Gram(targets-q)|
    double gram_residual_rel = 0.0;   // scaled by max(1, largest source Gram entry)
    double image_orthonormality = 0.0; // max |Gram(images) - I|
    bool warned = false;              // residual between tol and hard threshold
};

/// The linear isometry extending a paired sample from its source points to
/// their whole span: domain base p maps to codomain base q and the k-th
/// domain basis vector to basis_images[k]. level records which iterate of
/// the extension recursion built the operator (1 directly from the pairs).
class SpanIsometry {
public:
    SpanIsometry(AffineSpan domain, WeightedVector codomain_base,
                 std::vector<WeightedVector> basis_images, int level,
                 ExtensionDiagnostics diagnostics = {});

    const AffineSpan& domain() const { return domain_; }
    const WeightedVector& codomain_base() const { return codomain_base_; }
    const std::vector<WeightedVector>& basis_images() const { return basis_images_; }
    std::size_t rank() const { return basis_images_.size(); }
    int level() const { return level_; }
    const ExtensionDiagnostics& diagnostics() const { return diagnostics_; }

private:
    AffineSpan domain_;
    WeightedVector codomain_base_;
    std::vector<WeightedVector> basis_images_;
    int level_;
    ExtensionDiagnostics diagnostics_;
};

/// Builds the extension of the pairing to its source span. Each basis vector
/// produced by the pivoted Gram-Schmidt run on the source differences is a
/// combination sum_j c_kj (x_j - p); its image is the same combination of
/// the target differences, sum_j c_kj (f(x_j) - q). No Gram inverse is
/// formed. The centered Gram discrepancy between sources and targets is the
/// well-definedness residual: above the hard threshold the build aborts with
/// IsometryViolation, between tol.isometry and the threshold it only warns.
/// Throws InconsistentPairing when the target differences have a different
/// numerical rank than the source differences.
SpanIsometry build_extension(const Weights& a, const PairedSample& s,
                             const Tolerances& tol = {});

/// q + sum_k <u - p, b_k>_a v_k. Requires u in the domain span (within
/// membership_tol); anything outside is refused rather than projected, so a
/// caller handing in stray points hears about it.
WeightedVector evaluate(const Weights& a, const SpanIsometry& F,
                        const WeightedVector& u,
                        double membership_tol = Tolerances{}.membership);

/// Matrix of the operator in orthonormal coordinates:
/// entry [k][l] = <v_l, b_k>_a (column l holds the domain-basis coordinates
/// of the l-th image).
std::vector<std::vector<double>> operator_matrix(const Weights& a,
                                                 const SpanIsometry& F);

/// The axis set of an axis-aligned span: indices i with (1/a_i) e_i spanning
/// the direction space, provided those account for the full rank. Empty
/// optional when the span has a non-axis direction.
std::optional<IndexSet> axis_alignment(const Weights& a, const AffineSpan& S,
                                       double tol = Tolerances{}.membership);

/// Evaluation through the coordinate formula
///   q + sum_{i in lambda} <u-p, (1/a_i) e_i>_a (1/a_i) L(e_i)
/// valid on axis-aligned domains whose axis set is exactly lambda. Agrees
/// with evaluate() there; NotAxisAligned otherwise.
WeightedVector evaluate_coordinate_formula(const Weights& a, const SpanIsometry& F,
                                           const WeightedVector& u,
                                           const IndexSet& lambda,
                                           double tol = Tolerances{}.membership);

/// Span of the image: base q, basis = basis_images (re-orthonormalized only
/// if numerical drift demands it). Equals the span of the target points as a
/// subspace.
AffineSpan image_span(const Weights& a, const SpanIsometry& F,
                      double tol = Tolerances{}.rank);

/// One step of the extension recursion: rescales the domain's direction
/// representatives into the ball B_radius(p), maps them through F, and
/// rebuilds the operator on the re-spanned domain at level + 1. Run
/// literally so that level collapse is a tested property.
SpanIsometry extend_level(const Weights& a, const SpanIsometry& F,
                          double radius, const Tolerances& tol = {});

/// build_extension followed by extend_level up to the requested level, with
/// the ball radius taken strictly larger than the source bounding radius.
SpanIsometry build_extension_at_level(const Weights& a, const PairedSample& s,
                                      int level, const Tolerances& tol = {});

} // namespace isoext
