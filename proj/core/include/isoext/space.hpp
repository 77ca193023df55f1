#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "isoext/errors.hpp"

namespace isoext {

/// Neumaier-compensated accumulator. The weight squares can span many orders
/// of magnitude (e.g. a_i = 2^-i), so plain left-to-right accumulation loses
/// the small-index-dominance structure of the sums.
class CompensatedSum {
public:
    void add(double term) {
        const double t = sum_ + term;
        if (std::abs(sum_) >= std::abs(term)) {
            compensation_ += (sum_ - t) + term;
        } else {
            compensation_ += (term - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

/// The weight sequence a = (a_1, ..., a_N) defining the inner product
/// <x,y>_a = sum a_i^2 x_i y_i on the truncated sequence space. Every a_i
/// must be positive and finite; the sum of squares is checked to be finite
/// (automatic at finite N, asserted anyway so generated rules are sane).
///
/// Immutable after construction. Coordinate indices are 1-based throughout
/// the public API, matching the usual e_1, e_2, ... labelling.
class Weights {
public:
    explicit Weights(std::vector<double> values, std::string tail_note = {});

    std::size_t dim() const { return values_.size(); }

    /// a_i for 1 <= i <= N.
    double value(std::size_t i) const { return values_[i - 1]; }
    /// a_i^2 for 1 <= i <= N.
    double square(std::size_t i) const { return squares_[i - 1]; }

    double sum_of_squares() const { return sum_of_squares_; }

    const std::vector<double>& values() const { return values_; }
    const std::vector<double>& squares() const { return squares_; }

    /// Optional record of the generating rule (e.g. "a_i = 2^-i").
    const std::string& tail_note() const { return tail_note_; }

private:
    std::vector<double> values_;
    std::vector<double> squares_;
    double sum_of_squares_ = 0.0;
    std::string tail_note_;
};

/// A point of the truncated space, held in ambient coordinates. The
/// validating constructor rejects non-finite coordinates so NaN can never
/// reach a Gram matrix. Arithmetic helpers below preserve finiteness for
/// any realistic input scale.
class WeightedVector {
public:
    WeightedVector() = default;
    explicit WeightedVector(std::vector<double> coords);

    static WeightedVector zero(std::size_t n) {
        WeightedVector v;
        v.coords_.assign(n, 0.0);
        return v;
    }

    std::size_t dim() const { return coords_.size(); }

    double operator[](std::size_t k) const { return coords_[k]; } // 0-based position
    double& operator[](std::size_t k) { return coords_[k]; }

    const std::vector<double>& coords() const { return coords_; }

    bool operator==(const WeightedVector& other) const = default;

private:
    std::vector<double> coords_;
};

namespace detail {
void require_conformant(const Weights& a, const WeightedVector& x);
void require_same_dim(const WeightedVector& x, const WeightedVector& y);
} // namespace detail

/// <x,y>_a = sum_i a_i^2 x_i y_i, accumulated with compensation.
double inner(const Weights& a, const WeightedVector& x, const WeightedVector& y);

/// ||x||_a = sqrt(<x,x>_a).
double norm(const Weights& a, const WeightedVector& x);

/// d_a(x,y) = ||x - y||_a. Exactly zero when x == y bitwise.
double distance(const Weights& a, const WeightedVector& x, const WeightedVector& y);

/// T_c(x) = x + c.
WeightedVector translate(const WeightedVector& x, const WeightedVector& c);

/// (1/a_i) e_i, the i-th member of the complete orthonormal family (1-based).
WeightedVector unit_basis(const Weights& a, std::size_t i);

// Plain vector arithmetic (no weights involved).
WeightedVector add(const WeightedVector& x, const WeightedVector& y);
WeightedVector subtract(const WeightedVector& x, const WeightedVector& y);
WeightedVector scale(double s, const WeightedVector& x);
/// x += s*y in place.
void axpy(double s, const WeightedVector& y, WeightedVector& x);

} // namespace isoext
