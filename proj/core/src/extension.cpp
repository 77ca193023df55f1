#include "isoext/extension.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace isoext {

SpanIsometry::SpanIsometry(AffineSpan domain, WeightedVector codomain_base,
                           std::vector<WeightedVector> basis_images, int level,
                           ExtensionDiagnostics diagnostics)
    : domain_(std::move(domain)),
      codomain_base_(std::move(codomain_base)),
      basis_images_(std::move(basis_images)),
      level_(level),
      diagnostics_(diagnostics) {
    if (basis_images_.size() != domain_.rank()) {
        throw InvalidValue("span isometry: image count does not match domain rank");
    }
    for (const auto& v : basis_images_) detail::require_same_dim(codomain_base_, v);
    if (level_ < 1) {
        throw InvalidValue("span isometry: level must be at least 1");
    }
}

namespace {

double orthonormality_defect(const Weights& a,
                             const std::vector<WeightedVector>& family) {
    double worst = 0.0;
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i; j < family.size(); ++j) {
            const double g = inner(a, family[i], family[j]);
            worst = std::max(worst, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

SpanIsometry build_extension_impl(const Weights& a, const PairedSample& s,
                                  const Tolerances& tol, int level) {
    const ValidationReport validation = validate_isometry(a, s, tol.isometry);
    if (!validation.pass) {
        throw IsometryViolation(
            "pairing is not a d_a-isometry (relative distance residual " +
                std::to_string(validation.max_rel_residual) + ")",
            validation.max_rel_residual);
    }
    // Well-definedness: the centered Gram matrices of sources and targets
    // must agree, otherwise the transported coefficients do not define a
    // single-valued map.
    ExtensionDiagnostics diag;
    diag.gram_residual = validation.gram_residual;
    diag.gram_residual_rel = validation.gram_residual_rel;
    if (diag.gram_residual_rel > kHardConsistencyThreshold) {
        throw IsometryViolation(
            "centered Gram matrices of sources and targets disagree (relative "
            "residual " + std::to_string(diag.gram_residual_rel) + ")",
            diag.gram_residual_rel);
    }
    diag.warned = diag.gram_residual_rel > tol.isometry;

    const WeightedVector& p = s.base_source();
    const WeightedVector& q = s.base_target();
    std::vector<WeightedVector> source_diff, target_diff;
    source_diff.reserve(s.size());
    target_diff.reserve(s.size());
    for (const auto& pr : s.pairs()) {
        source_diff.push_back(subtract(pr.source, p));
        target_diff.push_back(subtract(pr.target, q));
    }

    GramSchmidtResult gs = orthonormalize(a, source_diff, tol.rank);

    // The target differences must carry the same numerical rank; a mismatch
    // means the pairing maps a flat cloud onto a fatter one or vice versa.
    const GramSchmidtResult target_gs = orthonormalize(a, target_diff, tol.rank);
    if (target_gs.basis.size() != gs.basis.size()) {
        throw InconsistentPairing(
            "source and target difference spans disagree in rank (" +
            std::to_string(gs.basis.size()) + " vs " +
            std::to_string(target_gs.basis.size()) + ")");
    }

    // Transport: the k-th basis vector is sum_j c_kj (x_j - p); its image is
    // the identical combination of the target differences.
    std::vector<WeightedVector> images;
    images.reserve(gs.basis.size());
    for (const auto& row : gs.coefficients) {
        WeightedVector v = WeightedVector::zero(a.dim());
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0.0) axpy(row[j], target_diff[j], v);
        }
        images.push_back(std::move(v));
    }

    diag.image_orthonormality = orthonormality_defect(a, images);
    if (diag.image_orthonormality > kHardConsistencyThreshold) {
        throw InconsistentPairing(
            "transported basis images are not orthonormal (defect " +
            std::to_string(diag.image_orthonormality) + ")");
    }

    AffineSpan domain(p, std::move(gs.basis), level);
    return SpanIsometry(std::move(domain), q, std::move(images), level, diag);
}

} // namespace

SpanIsometry build_extension(const Weights& a, const PairedSample& s,
                             const Tolerances& tol) {
    return build_extension_impl(a, s, tol, 1);
}

WeightedVector evaluate(const Weights& a, const SpanIsometry& F,
                        const WeightedVector& u, double membership_tol) {
    detail::require_conformant(a, u);
    const double residual = membership_residual(a, F.domain(), u);
    const double offset = distance(a, u, F.domain().base());
    if (residual > membership_tol * std::max(1.0, offset)) {
        throw OutsideDomain("evaluate: point lies outside the domain span "
                            "(residual " + std::to_string(residual) + ")",
                            residual);
    }
    const WeightedVector d = subtract(u, F.domain().base());
    WeightedVector out = F.codomain_base();
    const auto& basis = F.domain().basis();
    for (std::size_t k = 0; k < basis.size(); ++k) {
        axpy(inner(a, d, basis[k]), F.basis_images()[k], out);
    }
    return out;
}

std::vector<std::vector<double>> operator_matrix(const Weights& a,
                                                 const SpanIsometry& F) {
    const auto& basis = F.domain().basis();
    const auto& images = F.basis_images();
    std::vector<std::vector<double>> m(basis.size(),
                                       std::vector<double>(basis.size(), 0.0));
    for (std::size_t l = 0; l < images.size(); ++l) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            m[k][l] = inner(a, images[l], basis[k]);
        }
    }
    return m;
}

std::optional<IndexSet> axis_alignment(const Weights& a, const AffineSpan& S,
                                       double tol) {
    IndexSet axes = index_set_span(a, S, tol);
    if (axes.size() == S.rank()) return axes;
    return std::nullopt;
}

WeightedVector evaluate_coordinate_formula(const Weights& a, const SpanIsometry& F,
                                           const WeightedVector& u,
                                           const IndexSet& lambda, double tol) {
    detail::require_conformant(a, u);
    const auto axes = axis_alignment(a, F.domain(), tol);
    if (!axes) {
        throw NotAxisAligned("coordinate formula: domain has a non-axis direction");
    }
    if (!(*axes == lambda)) {
        throw NotAxisAligned("coordinate formula: index set does not match the "
                             "domain's axis set");
    }
    const WeightedVector& p = F.domain().base();
    const WeightedVector d = subtract(u, p);
    WeightedVector out = F.codomain_base();
    for (std::size_t i : lambda.indices()) {
        const WeightedVector e_i = unit_basis(a, i);
        const double coordinate = inner(a, d, e_i); // <u-p, (1/a_i) e_i>_a
        // L(e_i) through the operator itself; p + e_i lies in the domain.
        WeightedVector axis_point = p;
        axis_point[i - 1] += 1.0;
        const WeightedVector image = subtract(evaluate(a, F, axis_point, tol),
                                              F.codomain_base());
        axpy(coordinate / a.value(i), image, out);
    }
    return out;
}

AffineSpan image_span(const Weights& a, const SpanIsometry& F, double tol) {
    std::vector<WeightedVector> images = F.basis_images();
    double defect = 0.0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i; j < images.size(); ++j) {
            const double g = inner(a, images[i], images[j]);
            defect = std::max(defect, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    if (defect > 1e-10) {
        GramSchmidtResult gs = orthonormalize(a, images, tol);
        images = std::move(gs.basis);
    }
    return AffineSpan(F.codomain_base(), std::move(images), F.domain().order());
}

SpanIsometry extend_level(const Weights& a, const SpanIsometry& F,
                          double radius, const Tolerances& tol) {
    if (!(radius > 0.0)) {
        throw RadiusTooSmall("extend_level: radius must be positive");
    }
    const WeightedVector& p = F.domain().base();
    const WeightedVector& q = F.codomain_base();
    // Representatives of the previous span inside B_radius(p), mapped
    // through the previous operator; re-building on those realizes the
    // recursion step.
    std::vector<PointPair> pairs;
    pairs.reserve(F.rank() + 1);
    pairs.push_back({p, q});
    for (const auto& b : F.domain().basis()) {
        WeightedVector x = p;
        axpy(0.5 * radius, b, x);
        WeightedVector y = evaluate(a, F, x, tol.membership);
        pairs.push_back({std::move(x), std::move(y)});
    }
    PairedSample sample(a, std::move(pairs), 0);
    return build_extension_impl(a, sample, tol, F.level() + 1);
}

SpanIsometry build_extension_at_level(const Weights& a, const PairedSample& s,
                                      int level, const Tolerances& tol) {
    if (level < 1) {
        throw InvalidValue("extension level must be at least 1");
    }
    SpanIsometry F = build_extension(a, s, tol);
    if (level == 1) return F;
    const PointSet sources(a, s.source_points());
    const double radius =
        bounding_radius(a, sources, s.base_source()).enclosing_radius;
    for (int n = 2; n <= level; ++n) {
        F = extend_level(a, F, radius, tol);
    }
    return F;
}

} // namespace isoext
