#include "isoext/generate.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace isoext {

InstanceKind parse_instance_kind(const std::string& name) {
    if (name == "isometric") return InstanceKind::Isometric;
    if (name == "grid") return InstanceKind::Grid;
    if (name == "cylinder") return InstanceKind::Cylinder;
    if (name == "perturbed") return InstanceKind::Perturbed;
    throw SchemaError("unknown instance kind \"" + name +
                      "\" (want isometric, grid, cylinder or perturbed)");
}

std::string instance_kind_name(InstanceKind kind) {
    switch (kind) {
    case InstanceKind::Isometric: return "isometric";
    case InstanceKind::Grid: return "grid";
    case InstanceKind::Cylinder: return "cylinder";
    case InstanceKind::Perturbed: return "perturbed";
    }
    return "isometric";
}

Weights random_weights(SplitMix64& rng, std::size_t n, bool dyadic) {
    std::vector<double> values;
    values.reserve(n);
    if (dyadic) {
        double v = 0.5;
        for (std::size_t i = 0; i < n; ++i, v *= 0.5) values.push_back(v);
        return Weights(std::move(values), "a_i = 2^-i");
    }
    for (std::size_t i = 0; i < n; ++i) {
        values.push_back(rng.uniform(0.05, 1.0));
    }
    return Weights(std::move(values));
}

namespace {

WeightedVector random_vector(SplitMix64& rng, std::size_t n, double lo, double hi) {
    WeightedVector v = WeightedVector::zero(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = rng.uniform(lo, hi);
    return v;
}

std::vector<std::size_t> random_subset(SplitMix64& rng, std::size_t n,
                                       std::size_t count) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
    for (std::size_t i = n; i > 1; --i) { // Fisher-Yates
        const std::size_t j = rng.below(i);
        std::swap(all[i - 1], all[j]);
    }
    all.resize(count);
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

std::vector<WeightedVector> random_orthonormal_family(const Weights& a,
                                                      SplitMix64& rng) {
    const std::size_t n = a.dim();
    std::vector<WeightedVector> raw;
    raw.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        raw.push_back(random_vector(rng, n, -1.0, 1.0));
    }
    GramSchmidtResult gs = orthonormalize(a, raw, 1e-8);
    std::vector<WeightedVector> family = std::move(gs.basis);
    if (family.size() < n) {
        for (auto& v : complete_basis(a, family)) family.push_back(std::move(v));
    }
    return family;
}

GlobalIsometry random_global_isometry(const Weights& a, SplitMix64& rng) {
    std::vector<WeightedVector> u = random_orthonormal_family(a, rng);
    std::vector<WeightedVector> v = random_orthonormal_family(a, rng);
    WeightedVector c = random_vector(rng, a.dim(), -0.5, 0.5);
    return make_global_isometry(a, WeightedVector::zero(a.dim()), std::move(c),
                                std::move(u), std::move(v), a.dim());
}

BasicCylinder random_cylinder(SplitMix64& rng, std::size_t dim,
                              std::size_t free_coordinates) {
    if (free_coordinates > dim) {
        throw InvalidValue("random_cylinder: more free coordinates than "
                           "dimensions");
    }
    const std::vector<std::size_t> free = random_subset(rng, dim, free_coordinates);
    std::vector<CoordinateInterval> intervals(dim, CoordinateInterval::full());
    for (std::size_t i = 1; i <= dim; ++i) {
        if (std::binary_search(free.begin(), free.end(), i)) {
            switch (rng.below(4)) {
            case 0:
                intervals[i - 1] = CoordinateInterval::full();
                break;
            case 1: {
                const double lo = rng.uniform(0.05, 0.5);
                intervals[i - 1] =
                    CoordinateInterval::inner(lo, rng.uniform(lo + 0.1, 0.95));
                break;
            }
            case 2:
                intervals[i - 1] =
                    CoordinateInterval::lower_slab(rng.uniform(0.1, 0.9));
                break;
            default:
                intervals[i - 1] =
                    CoordinateInterval::upper_slab(rng.uniform(0.1, 0.9));
                break;
            }
        } else {
            intervals[i - 1] = CoordinateInterval::point(rng.uniform());
        }
    }
    return BasicCylinder(std::move(intervals));
}

std::vector<WeightedVector> sample_cylinder_grid(const BasicCylinder& J,
                                                 SplitMix64& rng) {
    const std::size_t n = J.dim();
    WeightedVector base = WeightedVector::zero(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& f = J.intervals()[k];
        if (f.kind == CoordinateInterval::Kind::Point) {
            base[k] = f.lower;
        } else {
            base[k] = f.lower + (f.upper - f.lower) * rng.uniform(0.3, 0.7);
        }
    }
    std::vector<WeightedVector> points;
    points.push_back(base);
    // Two axis variations per free coordinate: with the base value that
    // makes three distinct values along each free axis.
    for (std::size_t k = 0; k < n; ++k) {
        const auto& f = J.intervals()[k];
        if (f.kind == CoordinateInterval::Kind::Point) continue;
        for (double t : {0.1, 0.9}) {
            WeightedVector x = base;
            x[k] = f.lower + (f.upper - f.lower) * t;
            points.push_back(std::move(x));
        }
    }
    return points;
}

namespace {

ProblemInstance make_instance(const Weights& a,
                              const std::vector<WeightedVector>& sources,
                              const std::vector<WeightedVector>& targets,
                              const std::vector<WeightedVector>& queries,
                              std::uint64_t seed) {
    ProblemInstance inst;
    inst.weights = a.values();
    for (std::size_t j = 0; j < sources.size(); ++j) {
        inst.pairs.emplace_back(sources[j].coords(), targets[j].coords());
    }
    inst.base_index = 0;
    for (const auto& q : queries) inst.queries.push_back(q.coords());
    inst.seed = seed;
    return inst;
}

std::vector<WeightedVector> map_all(const Weights& a, const GlobalIsometry& g,
                                    const std::vector<WeightedVector>& xs) {
    std::vector<WeightedVector> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(apply_global(a, g, x));
    return out;
}

std::vector<WeightedVector> random_cloud(const Weights& a, SplitMix64& rng,
                                         std::size_t rank, std::size_t count) {
    const std::size_t n = a.dim();
    const WeightedVector base = random_vector(rng, n, 0.25, 0.75);
    std::vector<WeightedVector> directions;
    directions.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) {
        directions.push_back(random_vector(rng, n, -0.3, 0.3));
    }
    std::vector<WeightedVector> points;
    points.push_back(base);
    // First the pure directions (pins the rank), then random combinations.
    for (std::size_t i = 0; i < rank && points.size() < count; ++i) {
        WeightedVector x = base;
        axpy(1.0, directions[i], x);
        points.push_back(std::move(x));
    }
    while (points.size() < count) {
        WeightedVector x = base;
        for (const auto& d : directions) {
            axpy(rng.uniform(-1.0, 1.0), d, x);
        }
        points.push_back(std::move(x));
    }
    return points;
}

std::vector<WeightedVector> star_cloud(const Weights& a, SplitMix64& rng,
                                       std::size_t rank) {
    const std::size_t n = a.dim();
    const std::vector<std::size_t> axes = random_subset(rng, n, rank);
    const WeightedVector base = random_vector(rng, n, 0.3, 0.7);
    std::vector<WeightedVector> points;
    points.push_back(base);
    for (std::size_t i : axes) {
        for (double sign : {-1.0, 1.0}) {
            WeightedVector x = base;
            x[i - 1] += sign * rng.uniform(0.05, 0.25);
            points.push_back(std::move(x));
        }
    }
    return points;
}

} // namespace

GeneratedInstance generate_instance(const GenerateOptions& options) {
    if (options.dim == 0) throw InvalidValue("generate: dimension must be positive");
    if (options.rank > options.dim) {
        throw InvalidValue("generate: rank must not exceed the dimension");
    }
    SplitMix64 rng(options.seed);
    const Weights a = random_weights(rng, options.dim, options.dyadic_weights);

    GeneratedInstance out;
    std::vector<WeightedVector> sources;
    switch (options.kind) {
    case InstanceKind::Isometric:
    case InstanceKind::Perturbed: {
        const std::size_t count =
            options.points > 0 ? options.points
                               : std::min<std::size_t>(options.rank + 4, 64);
        sources = random_cloud(a, rng, options.rank, count);
        break;
    }
    case InstanceKind::Grid:
        sources = star_cloud(a, rng, options.rank);
        break;
    case InstanceKind::Cylinder: {
        BasicCylinder J = random_cylinder(rng, options.dim, options.rank);
        sources = sample_cylinder_grid(J, rng);
        out.cylinder = std::move(J);
        break;
    }
    }

    const GlobalIsometry g = random_global_isometry(a, rng);
    std::vector<WeightedVector> targets = map_all(a, g, sources);

    if (options.kind == InstanceKind::Perturbed) {
        // Scale the targets about the base image; any violation above the
        // working tolerance breaks the distance contract.
        const WeightedVector q = targets.front();
        for (auto& y : targets) {
            WeightedVector d = subtract(y, q);
            y = q;
            axpy(1.0 + options.violation, d, y);
        }
    } else {
        out.ground_truth = g;
    }

    std::vector<WeightedVector> queries;
    for (std::size_t k = 0; k < options.queries; ++k) {
        queries.push_back(random_vector(rng, options.dim, -1.0, 1.0));
    }

    out.instance = make_instance(a, sources, targets, queries, options.seed);
    return out;
}

} // namespace isoext
