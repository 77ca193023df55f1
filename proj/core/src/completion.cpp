#include "isoext/completion.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace isoext {

namespace {

void project_off(const Weights& a, const std::vector<WeightedVector>& family,
                 WeightedVector& v) {
    for (const auto& f : family) {
        axpy(-inner(a, v, f), f, v);
    }
}

} // namespace

std::vector<WeightedVector> complete_basis(const Weights& a,
                                           const std::vector<WeightedVector>& partial,
                                           double tol) {
    const std::size_t n = a.dim();
    if (partial.size() > n) {
        throw NotOrthonormal("complete_basis: family larger than the space");
    }
    for (std::size_t i = 0; i < partial.size(); ++i) {
        detail::require_conformant(a, partial[i]);
        for (std::size_t j = i; j < partial.size(); ++j) {
            const double g = inner(a, partial[i], partial[j]);
            if (std::abs(g - (i == j ? 1.0 : 0.0)) > tol) {
                throw NotOrthonormal("complete_basis: input family is not "
                                     "orthonormal");
            }
        }
    }

    std::vector<WeightedVector> family = partial;
    std::vector<WeightedVector> added;
    while (family.size() < n) {
        // Greedy pick over the axis candidates: largest residual after
        // projecting off the family built so far, ties to the lowest index.
        double best_norm = -1.0;
        WeightedVector best_residual;
        for (std::size_t i = 1; i <= n; ++i) {
            WeightedVector r = unit_basis(a, i);
            project_off(a, family, r);
            const double rn = norm(a, r);
            if (rn > best_norm) {
                best_norm = rn;
                best_residual = std::move(r);
            }
        }
        if (best_norm <= tol) {
            throw NotOrthonormal("complete_basis: no admissible candidate left; "
                                 "input family was not orthonormal enough");
        }
        // Second projection pass before normalizing.
        project_off(a, family, best_residual);
        const double rn = norm(a, best_residual);
        WeightedVector v = scale(1.0 / rn, best_residual);
        family.push_back(v);
        added.push_back(std::move(v));
    }
    return added;
}

GlobalIsometry::GlobalIsometry(WeightedVector p, WeightedVector q,
                               std::vector<WeightedVector> source_basis,
                               std::vector<WeightedVector> target_basis,
                               std::size_t span_rank,
                               std::vector<std::vector<double>> matrix)
    : p_(std::move(p)),
      q_(std::move(q)),
      source_basis_(std::move(source_basis)),
      target_basis_(std::move(target_basis)),
      span_rank_(span_rank),
      matrix_(std::move(matrix)) {
    if (source_basis_.size() != p_.dim() || target_basis_.size() != p_.dim()) {
        throw InvalidValue("global isometry: bases must have one vector per "
                           "dimension");
    }
    if (span_rank_ > source_basis_.size()) {
        throw InvalidValue("global isometry: span rank exceeds dimension");
    }
}

GlobalIsometry make_global_isometry(const Weights& a, WeightedVector p,
                                    WeightedVector q,
                                    std::vector<WeightedVector> source_basis,
                                    std::vector<WeightedVector> target_basis,
                                    std::size_t span_rank) {
    // Ambient-coordinate representation: the image of the raw ambient
    // direction e_j is sum_k <e_j, s_k>_a t_k with <e_j, s_k>_a = a_j^2 s_k[j].
    const std::size_t n = a.dim();
    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
    for (std::size_t j = 0; j < n; ++j) {
        const double aj2 = a.square(j + 1);
        for (std::size_t k = 0; k < n; ++k) {
            const double c = aj2 * source_basis[k][j];
            if (c == 0.0) continue;
            for (std::size_t i = 0; i < n; ++i) {
                matrix[i][j] += c * target_basis[k][i];
            }
        }
    }
    return GlobalIsometry(std::move(p), std::move(q), std::move(source_basis),
                          std::move(target_basis), span_rank, std::move(matrix));
}

GlobalIsometry build_global(const Weights& a, const SpanIsometry& F,
                            double tol) {
    std::vector<WeightedVector> source_basis = F.domain().basis();
    std::vector<WeightedVector> target_basis = F.basis_images();
    const std::size_t rank = source_basis.size();

    for (auto& v : complete_basis(a, source_basis, tol)) {
        source_basis.push_back(std::move(v));
    }
    for (auto& v : complete_basis(a, target_basis, tol)) {
        target_basis.push_back(std::move(v));
    }

    return make_global_isometry(a, F.domain().base(), F.codomain_base(),
                                std::move(source_basis), std::move(target_basis),
                                rank);
}

WeightedVector apply_global(const Weights& a, const GlobalIsometry& G,
                            const WeightedVector& x) {
    detail::require_conformant(a, x);
    detail::require_same_dim(x, G.p());
    const WeightedVector d = subtract(x, G.p());
    WeightedVector out = G.q();
    for (std::size_t k = 0; k < G.dim(); ++k) {
        axpy(inner(a, d, G.source_basis()[k]), G.target_basis()[k], out);
    }
    return out;
}

DecompositionReport decompose(const Weights& a, const GlobalIsometry& G,
                              const SpanIsometry& F) {
    if (G.span_rank() != F.rank() ||
        !(G.p() == F.domain().base() && G.q() == F.codomain_base())) {
        throw InvalidValue("decompose: global map was not built from this "
                           "span operator");
    }
    DecompositionReport report;
    report.span_dimension = G.span_rank();
    report.complement_dimension = G.dim() - G.span_rank();
    report.total_dimension = G.dim();
    for (std::size_t k = 0; k < G.span_rank(); ++k) {
        for (std::size_t l = G.span_rank(); l < G.dim(); ++l) {
            report.max_cross_inner =
                std::max(report.max_cross_inner,
                         std::abs(inner(a, G.target_basis()[k],
                                        G.target_basis()[l])));
        }
    }
    return report;
}

SpanIsometry restrict_to_axes(const Weights& a, const SpanIsometry& F,
                              const IndexSet& lambda, double tol) {
    const auto axes = axis_alignment(a, F.domain(), tol);
    if (!axes) {
        throw NotAxisAligned("restrict_to_axes: domain has a non-axis direction");
    }
    for (std::size_t i : axes->indices()) {
        if (!lambda.contains(i)) {
            throw IndexError("restrict_to_axes: lambda must contain the domain "
                             "axis set (missing " + std::to_string(i) + ")");
        }
    }

    const WeightedVector& p = F.domain().base();
    const WeightedVector& q = F.codomain_base();
    const std::vector<WeightedVector> completions =
        complete_basis(a, F.basis_images(), tol);

    std::vector<WeightedVector> basis, images;
    std::size_t next_completion = 0;
    for (std::size_t i : lambda.indices()) {
        basis.push_back(unit_basis(a, i));
        if (axes->contains(i)) {
            WeightedVector axis_point = translate(p, basis.back());
            images.push_back(subtract(evaluate(a, F, axis_point, tol), q));
        } else {
            if (next_completion >= completions.size()) {
                throw NotOrthonormal("restrict_to_axes: completion exhausted");
            }
            images.push_back(completions[next_completion++]);
        }
    }

    ExtensionDiagnostics diag = F.diagnostics();
    double defect = 0.0;
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i; j < images.size(); ++j) {
            const double g = inner(a, images[i], images[j]);
            defect = std::max(defect, std::abs(g - (i == j ? 1.0 : 0.0)));
        }
    }
    diag.image_orthonormality = defect;

    AffineSpan domain(p, std::move(basis), std::max(F.domain().order(), 2));
    return SpanIsometry(std::move(domain), q, std::move(images), F.level(), diag);
}

} // namespace isoext
