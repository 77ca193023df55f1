#include "isoext/space.hpp"

#include <cmath>
#include <utility>

namespace isoext {

namespace {

bool all_finite(const std::vector<double>& values) {
    for (double v : values) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

} // namespace

Weights::Weights(std::vector<double> values, std::string tail_note)
    : values_(std::move(values)), tail_note_(std::move(tail_note)) {
    if (values_.empty()) {
        throw InvalidValue("weights: need at least one entry");
    }
    squares_.reserve(values_.size());
    CompensatedSum sum;
    for (double v : values_) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw InvalidValue("weights: entries must be positive and finite");
        }
        squares_.push_back(v * v);
        sum.add(v * v);
    }
    sum_of_squares_ = sum.value();
    if (!std::isfinite(sum_of_squares_)) {
        throw InvalidValue("weights: sum of squares overflows");
    }
}

WeightedVector::WeightedVector(std::vector<double> coords)
    : coords_(std::move(coords)) {
    if (!all_finite(coords_)) {
        throw InvalidValue("vector: coordinates must be finite");
    }
}

namespace detail {

void require_conformant(const Weights& a, const WeightedVector& x) {
    if (x.dim() != a.dim()) {
        throw DimensionError("vector of length " + std::to_string(x.dim()) +
                             " does not conform to weights of length " +
                             std::to_string(a.dim()));
    }
}

void require_same_dim(const WeightedVector& x, const WeightedVector& y) {
    if (x.dim() != y.dim()) {
        throw DimensionError("vectors of lengths " + std::to_string(x.dim()) +
                             " and " + std::to_string(y.dim()) + " do not conform");
    }
}

} // namespace detail

double inner(const Weights& a, const WeightedVector& x, const WeightedVector& y) {
    detail::require_conformant(a, x);
    detail::require_conformant(a, y);
    const auto& sq = a.squares();
    CompensatedSum sum;
    for (std::size_t k = 0; k < sq.size(); ++k) {
        sum.add(sq[k] * x[k] * y[k]);
    }
    return sum.value();
}

double norm(const Weights& a, const WeightedVector& x) {
    detail::require_conformant(a, x);
    const auto& sq = a.squares();
    CompensatedSum sum;
    for (std::size_t k = 0; k < sq.size(); ++k) {
        sum.add(sq[k] * x[k] * x[k]);
    }
    // The compensated total of squares can round to a tiny negative number
    // only if it is zero in exact arithmetic.
    return std::sqrt(std::max(sum.value(), 0.0));
}

double distance(const Weights& a, const WeightedVector& x, const WeightedVector& y) {
    detail::require_conformant(a, x);
    detail::require_conformant(a, y);
    const auto& sq = a.squares();
    CompensatedSum sum;
    for (std::size_t k = 0; k < sq.size(); ++k) {
        const double d = x[k] - y[k];
        sum.add(sq[k] * d * d);
    }
    return std::sqrt(std::max(sum.value(), 0.0));
}

WeightedVector translate(const WeightedVector& x, const WeightedVector& c) {
    return add(x, c);
}

WeightedVector unit_basis(const Weights& a, std::size_t i) {
    if (i < 1 || i > a.dim()) {
        throw IndexError("basis index " + std::to_string(i) +
                         " outside 1.." + std::to_string(a.dim()));
    }
    WeightedVector v = WeightedVector::zero(a.dim());
    v[i - 1] = 1.0 / a.value(i);
    return v;
}

WeightedVector add(const WeightedVector& x, const WeightedVector& y) {
    detail::require_same_dim(x, y);
    WeightedVector r = x;
    for (std::size_t k = 0; k < r.dim(); ++k) r[k] += y[k];
    return r;
}

WeightedVector subtract(const WeightedVector& x, const WeightedVector& y) {
    detail::require_same_dim(x, y);
    WeightedVector r = x;
    for (std::size_t k = 0; k < r.dim(); ++k) r[k] -= y[k];
    return r;
}

WeightedVector scale(double s, const WeightedVector& x) {
    WeightedVector r = x;
    for (std::size_t k = 0; k < r.dim(); ++k) r[k] *= s;
    return r;
}

void axpy(double s, const WeightedVector& y, WeightedVector& x) {
    detail::require_same_dim(x, y);
    for (std::size_t k = 0; k < x.dim(); ++k) x[k] += s * y[k];
}

} // namespace isoext
