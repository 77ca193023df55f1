#pragma once

#include <stdexcept>
#include <string>

namespace isoext {

/// Base class for every error thrown by the library. kind() is the stable
/// name used in structured error reports.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const { return "Error"; }
};

/// Vector length does not match the weight sequence (or another vector).
class DimensionError : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "DimensionError"; }
};

/// Coordinate index outside 1..N (or a list index out of range).
class IndexError : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "IndexError"; }
};

/// Non-finite coordinate or weight fed to a constructor, or an argument
/// outside its documented range.
class InvalidValue : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "InvalidValue"; }
};

/// Two points of a set closer than the dedup tolerance.
class DuplicatePoint : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "DuplicatePoint"; }
};

/// Pairing with duplicate sources or duplicate targets (not a bijection).
class MalformedPairing : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "MalformedPairing"; }
};

/// Span base point not among the set's points.
class BaseNotInSet : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "BaseNotInSet"; }
};

/// Ball radius does not enclose the point set.
class RadiusTooSmall : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "RadiusTooSmall"; }
};

/// The pairing fails the distance-preservation check.
class IsometryViolation : public Error {
public:
    IsometryViolation(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    const char* kind() const override { return "IsometryViolation"; }
    double residual;
};

/// Source and target difference spans disagree beyond tolerance.
class InconsistentPairing : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "InconsistentPairing"; }
};

/// Point handed to evaluate() lies outside the operator's domain span.
class OutsideDomain : public Error {
public:
    OutsideDomain(const std::string& what, double residual)
        : Error(what), residual(residual) {}
    const char* kind() const override { return "OutsideDomain"; }
    double residual;
};

/// Operation requires an axis-aligned domain.
class NotAxisAligned : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "NotAxisAligned"; }
};

/// Basis handed to completion is not orthonormal.
class NotOrthonormal : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "NotOrthonormal"; }
};

/// Malformed problem-instance JSON.
class SchemaError : public Error {
public:
    using Error::Error;
    const char* kind() const override { return "SchemaError"; }
};

} // namespace isoext
