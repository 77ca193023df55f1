#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "isoext/completion.hpp"
#include "isoext/instance.hpp"
#include "isoext/rng.hpp"
#include "isoext/span.hpp"

namespace isoext {

enum class InstanceKind {
    Isometric, // random cloud mapped by a random weighted-orthogonal map + shift
    Grid,      // product-structured (axis-aligned) sources, isometric targets
    Cylinder,  // grid sampled from a random basic cylinder in the unit cube
    Perturbed  // isometric instance with targets scaled away from isometry
};

InstanceKind parse_instance_kind(const std::string& name); // SchemaError on unknown
std::string instance_kind_name(InstanceKind kind);

struct GenerateOptions {
    InstanceKind kind = InstanceKind::Isometric;
    std::size_t dim = 16;       // truncation dimension N
    std::size_t rank = 3;       // directions in the source cloud (<= dim)
    std::uint64_t seed = 1;
    std::size_t points = 0;     // source points; 0 derives a sensible count
    std::size_t queries = 4;
    double violation = 1e-1;    // Perturbed: targets scaled by (1 + violation)
    bool dyadic_weights = false; // a_i = 2^-i instead of uniform draws
};

/// A generated instance together with the ground truth that produced it
/// (not part of the serialized schema; used by oracle tests).
struct GeneratedInstance {
    ProblemInstance instance;
    /// The generating map x -> c + Q x for isometric/grid/cylinder kinds.
    std::optional<GlobalIsometry> ground_truth;
    /// The cylinder the grid was sampled from (Cylinder kind only).
    std::optional<BasicCylinder> cylinder;
};

GeneratedInstance generate_instance(const GenerateOptions& options);

// Building blocks, exposed for tests.

/// Weight draws in [0.05, 1] (kept away from zero so random instances stay
/// well conditioned), or the dyadic rule a_i = 2^-i.
Weights random_weights(SplitMix64& rng, std::size_t n, bool dyadic = false);

/// A complete orthonormal family obtained by orthonormalizing random
/// vectors and completing whatever rank they happen to reach.
std::vector<WeightedVector> random_orthonormal_family(const Weights& a,
                                                      SplitMix64& rng);

/// A random global isometry x -> c + Q x, with Q built from two random
/// complete orthonormal families.
GlobalIsometry random_global_isometry(const Weights& a, SplitMix64& rng);

/// A random basic cylinder with the requested number of free coordinates.
BasicCylinder random_cylinder(SplitMix64& rng, std::size_t dim,
                              std::size_t free_coordinates);

/// Points of J covering every free coordinate with at least three values:
/// a base point plus two axis variations per free coordinate.
std::vector<WeightedVector> sample_cylinder_grid(const BasicCylinder& J,
                                                 SplitMix64& rng);

} // namespace isoext
