// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Criteria 10 and 11 exercise the CLI binary end to end;
// pass its path with --cli (the ctest registration does).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "isoext/isoext.hpp"

namespace {

using namespace isoext;

std::string g_cli_path;

struct CheckFailure {
    std::string detail;
};

void require(bool ok, const std::string& detail) {
    if (!ok) throw CheckFailure{detail};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

Weights instance_weights_of(const GeneratedInstance& g) {
    return instance_weights(g.instance);
}

GeneratedInstance make_isometric(std::uint64_t seed) {
    GenerateOptions opt;
    opt.kind = InstanceKind::Isometric;
    opt.dim = 2 + seed % 31;                                  // N <= 32
    opt.rank = 1 + seed % std::min<std::uint64_t>(opt.dim, 8); // k <= N
    opt.points = std::min<std::size_t>(opt.rank + 2 + seed % 6, 64);
    opt.seed = seed;
    return generate_instance(opt);
}

WeightedVector span_point(const AffineSpan& S, SplitMix64& rng) {
    WeightedVector u = S.base();
    for (const auto& b : S.basis()) axpy(rng.uniform(-2.0, 2.0), b, u);
    return u;
}

int run_cli(const std::vector<std::string>& args, const std::string& stdout_path) {
    std::string cmd = g_cli_path;
    for (const auto& arg : args) cmd += " " + arg;
    if (!stdout_path.empty()) cmd += " > " + stdout_path;
    cmd += " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --- criteria ---------------------------------------------------------

// Shared across criteria 1/2/3/4/8: the full pipeline over 200 randomized
// instances, against the generating map as the oracle.
struct PipelineRun {
    Weights a;
    PairedSample sample;
    SpanIsometry first;
    SpanIsometry second;
    GlobalIsometry global;
    GlobalIsometry truth;
};

std::vector<PipelineRun> g_runs;

void criterion_recovery() {
    const auto started = std::chrono::steady_clock::now();
    g_runs.clear();
    g_runs.reserve(200);
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        const GeneratedInstance gen = make_isometric(seed);
        Weights a = instance_weights_of(gen);
        PairedSample sample = instance_sample(a, gen.instance);
        SpanIsometry first = build_extension(a, sample);
        SpanIsometry second = build_extension_at_level(a, sample, 2);
        GlobalIsometry global = build_global(a, second);

        // The built map agrees with the generating map on every source point.
        for (const auto& pr : sample.pairs()) {
            const WeightedVector got = apply_global(a, global, pr.source);
            const WeightedVector want = apply_global(a, *gen.ground_truth, pr.source);
            const double d = distance(a, got, want);
            require(d <= 1e-9 * std::max(1.0, norm(a, want)),
                    "seed " + std::to_string(seed) + ": source-point residual " +
                        fmt(d));
        }
        // And with the generating map's action on the whole domain span.
        SplitMix64 rng(seed * 7919);
        for (int k = 0; k < 10; ++k) {
            const WeightedVector u = span_point(second.domain(), rng);
            const WeightedVector got = apply_global(a, global, u);
            const WeightedVector want = apply_global(a, *gen.ground_truth, u);
            const double d = distance(a, got, want);
            require(d <= 1e-8 * std::max(1.0, norm(a, want)),
                    "seed " + std::to_string(seed) + ": span-point residual " +
                        fmt(d));
        }
        g_runs.push_back({std::move(a), std::move(sample), std::move(first),
                          std::move(second), std::move(global),
                          std::move(*gen.ground_truth)});
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    require(elapsed <= 10.0, "200 instances took " + fmt(elapsed) + " s (> 10 s)");
}

void criterion_global_isometry() {
    std::uint64_t seed = 1;
    for (const auto& run : g_runs) {
        SplitMix64 rng(seed++ * 104729);
        for (int k = 0; k < 100; ++k) {
            const WeightedVector x = [&] {
                WeightedVector v = WeightedVector::zero(run.a.dim());
                for (std::size_t c = 0; c < v.dim(); ++c) v[c] = rng.uniform(-3.0, 3.0);
                return v;
            }();
            WeightedVector y = WeightedVector::zero(run.a.dim());
            for (std::size_t c = 0; c < y.dim(); ++c) y[c] = rng.uniform(-3.0, 3.0);
            const double d = distance(run.a, x, y);
            const double dd = std::abs(
                distance(run.a, apply_global(run.a, run.global, x),
                         apply_global(run.a, run.global, y)) - d);
            require(dd <= 1e-9 * std::max(1.0, d), "distance drift " + fmt(dd));
        }
    }
}

void criterion_gram_preservation() {
    std::uint64_t seed = 11;
    for (const auto& run : g_runs) {
        const ValidationReport v = validate_isometry(run.a, run.sample, 1e-9);
        require(v.pass, "instance no longer validates");
        require(v.gram_residual_rel <= 1e-9,
                "centered Gram residual " + fmt(v.gram_residual_rel));

        const WeightedVector& p = run.second.domain().base();
        const WeightedVector& q = run.second.codomain_base();
        SplitMix64 rng(seed++ * 31337);
        for (int k = 0; k < 10; ++k) {
            const WeightedVector u = span_point(run.second.domain(), rng);
            const WeightedVector v1 = span_point(run.second.domain(), rng);
            const WeightedVector lu =
                subtract(evaluate(run.a, run.second, u), q);
            const WeightedVector lv =
                subtract(evaluate(run.a, run.second, v1), q);
            const double want = inner(run.a, subtract(u, p), subtract(v1, p));
            const double got = inner(run.a, lu, lv);
            require(std::abs(got - want) <= 1e-9 * std::max(1.0, std::abs(want)),
                    "span operator inner-product drift " + fmt(std::abs(got - want)));
        }
    }
}

void criterion_extension_tower() {
    std::uint64_t seed = 23;
    for (const auto& run : g_runs) {
        // f inside F: the first-level operator reproduces the pairs.
        for (const auto& pr : run.sample.pairs()) {
            const double d =
                distance(run.a, evaluate(run.a, run.first, pr.source), pr.target);
            require(d <= 1e-9 * std::max(1.0, norm(run.a, pr.target)),
                    "F vs f residual " + fmt(d));
        }
        // F inside F_2 inside G_2 on the predecessor domains.
        SplitMix64 rng(seed++ * 52711);
        for (int k = 0; k < 10; ++k) {
            const WeightedVector u = span_point(run.first.domain(), rng);
            const WeightedVector y1 = evaluate(run.a, run.first, u);
            const WeightedVector y2 = evaluate(run.a, run.second, u);
            require(distance(run.a, y1, y2) <= 1e-9 * std::max(1.0, norm(run.a, y1)),
                    "F_2 vs F residual");
            const WeightedVector u2 = span_point(run.second.domain(), rng);
            const WeightedVector via_span = evaluate(run.a, run.second, u2);
            const WeightedVector via_global = apply_global(run.a, run.global, u2);
            require(distance(run.a, via_span, via_global) <=
                        1e-9 * std::max(1.0, norm(run.a, via_span)),
                    "G_2 vs F_2 residual");
        }
    }
}

void criterion_span_stabilization() {
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        const GeneratedInstance gen = make_isometric(seed + 1000);
        const Weights a = instance_weights_of(gen);
        const PairedSample sample = instance_sample(a, gen.instance);
        const PointSet sources(a, sample.source_points());
        const WeightedVector& p = sample.base_source();
        const double r0 = bounding_radius(a, sources, p).enclosing_radius;

        const AffineSpan reference = gs_power(a, sources, p, 1, r0);
        for (int order : {1, 2, 3, 5}) {
            for (double factor : {1.0, 2.0, 10.0}) {
                const AffineSpan s = gs_power(a, sources, p, order, factor * r0);
                const double mismatch = subspace_residual(a, reference, s);
                require(mismatch <= 1e-10,
                        "seed " + std::to_string(seed) + " order " +
                            std::to_string(order) + " radius x" + fmt(factor) +
                            ": residual " + fmt(mismatch));
            }
        }
    }
}

void criterion_cylinder_characterization() {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        SplitMix64 rng(seed * 2654435761ULL);
        const std::size_t n = 2 + rng.below(7); // N <= 8
        const std::size_t free = 1 + rng.below(n);
        std::vector<double> w;
        for (std::size_t i = 0; i < n; ++i) w.push_back(rng.uniform(0.05, 1.0));
        const Weights a(std::move(w));

        const BasicCylinder J = random_cylinder(rng, n, free);
        const std::vector<WeightedVector> grid = sample_cylinder_grid(J, rng);
        const PointSet E(a, grid);

        const AffineSpan direct = cylinder_span(a, J, grid.front());
        const AffineSpan sampled = build_span(a, E, grid.front());
        const double mismatch = subspace_residual(a, direct, sampled);
        require(mismatch <= 1e-10, "seed " + std::to_string(seed) +
                                       ": span residual " + fmt(mismatch));
        require(index_set_finite(a, E, 1e-9) == cylinder_index_set(J),
                "seed " + std::to_string(seed) + ": index sets differ");
    }
}

void criterion_level_collapse() {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const GeneratedInstance gen = make_isometric(seed + 3000);
        const Weights a = instance_weights_of(gen);
        const PairedSample sample = instance_sample(a, gen.instance);
        const SpanIsometry f2 = build_extension_at_level(a, sample, 2);
        const SpanIsometry f3 = build_extension_at_level(a, sample, 3);
        const SpanIsometry f4 = build_extension_at_level(a, sample, 4);

        SplitMix64 rng(seed * 65537);
        for (int k = 0; k < 50; ++k) {
            const WeightedVector u = span_point(f2.domain(), rng);
            const WeightedVector y2 = evaluate(a, f2, u);
            require(distance(a, evaluate(a, f3, u), y2) <= 1e-10,
                    "F_3 vs F_2 drift");
            require(distance(a, evaluate(a, f4, u), y2) <= 1e-10,
                    "F_4 vs F_2 drift");
        }
    }
}

void criterion_image_span() {
    for (const auto& run : g_runs) {
        const AffineSpan img = image_span(run.a, run.first);
        const AffineSpan direct =
            build_span(run.a, PointSet(run.a, run.sample.target_points()),
                       run.sample.base_target());
        const double mismatch = subspace_residual(run.a, img, direct);
        require(mismatch <= 1e-8, "image span residual " + fmt(mismatch));
    }
}

void criterion_coordinate_formula() {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GenerateOptions opt;
        opt.kind = InstanceKind::Grid;
        opt.dim = 3 + seed % 10;
        opt.rank = 1 + seed % std::min<std::uint64_t>(opt.dim, 4);
        opt.seed = seed + 4000;
        const GeneratedInstance gen = generate_instance(opt);
        const Weights a = instance_weights_of(gen);
        const PairedSample sample = instance_sample(a, gen.instance);
        const SpanIsometry F = build_extension_at_level(a, sample, 2);

        const auto axes = axis_alignment(a, F.domain());
        require(axes.has_value(), "grid instance not axis-aligned");

        SplitMix64 rng(seed * 19937);
        for (int k = 0; k < 50; ++k) {
            const WeightedVector u = span_point(F.domain(), rng);
            const double d = distance(a, evaluate_coordinate_formula(a, F, u, *axes),
                                      evaluate(a, F, u));
            require(d <= 1e-10, "coordinate formula drift " + fmt(d));
        }
    }

    // The axis-restricted completion is reachable through the CLI on
    // axis-aligned instances.
    if (!g_cli_path.empty()) {
        namespace fs = std::filesystem;
        const fs::path dir = fs::temp_directory_path() / "isoext-acceptance-lambda";
        fs::create_directories(dir);
        const fs::path inst = dir / "grid.json";
        require(run_cli({"generate", "--kind", "grid", "--dim", "5", "--rank", "2",
                         "--seed", "31", "-o", inst.string()},
                        "") == 0,
                "grid generate failed");
        const fs::path rep = dir / "extend.json";
        require(run_cli({"extend", inst.string(), "--no-meta", "--lambda",
                         "1,2,3,4,5", "-o", rep.string()},
                        "") == 0,
                "extend --lambda failed");
        require(slurp(rep).find("lambda_restriction") != std::string::npos,
                "lambda restriction missing from the report");
    }
}

void criterion_negative_detection() {
    // Library level: scaled and sheared pairings are rejected; tiny
    // perturbations pass at the default tolerance.
    for (double delta : {1e-3, 1e-1, 1.0}) {
        GenerateOptions opt;
        opt.kind = InstanceKind::Perturbed;
        opt.dim = 8;
        opt.rank = 3;
        opt.seed = 5000 + static_cast<std::uint64_t>(delta * 1000);
        opt.violation = delta;
        const GeneratedInstance gen = generate_instance(opt);
        const Weights a = instance_weights_of(gen);
        const PairedSample sample = instance_sample(a, gen.instance);
        bool rejected = false;
        try {
            build_extension(a, sample);
        } catch (const IsometryViolation&) {
            rejected = true;
        }
        require(rejected, "scale " + fmt(1.0 + delta) + " not rejected");
    }
    {
        // Sheared targets: y -> y + delta * (x - p)_1 * e_2 about the base.
        const GeneratedInstance gen = make_isometric(42);
        const Weights a = instance_weights_of(gen);
        const PairedSample sample = instance_sample(a, gen.instance);
        const WeightedVector& q = sample.base_target();
        std::vector<PointPair> sheared;
        for (const auto& pr : sample.pairs()) {
            WeightedVector y = pr.target;
            y[1] += 0.5 * (subtract(y, q))[0];
            sheared.push_back({pr.source, std::move(y)});
        }
        bool rejected = false;
        try {
            build_extension(a, PairedSample(a, std::move(sheared)));
        } catch (const IsometryViolation&) {
            rejected = true;
        }
        require(rejected, "sheared pairing not rejected");
    }
    {
        // delta = 1e-12 stays within the default tolerance.
        GenerateOptions opt;
        opt.kind = InstanceKind::Perturbed;
        opt.dim = 8;
        opt.rank = 3;
        opt.seed = 5999;
        opt.violation = 1e-12;
        const GeneratedInstance gen = generate_instance(opt);
        const Weights a = instance_weights_of(gen);
        const PairedSample sample = instance_sample(a, gen.instance);
        build_extension(a, sample); // must not throw
    }

    // CLI level: the rejection surfaces as exit code 1 with a structured
    // IsometryViolation object.
    require(!g_cli_path.empty(), "CLI path not provided (--cli)");
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "isoext-acceptance-neg";
    fs::create_directories(dir);
    const fs::path inst = dir / "perturbed.json";
    require(run_cli({"generate", "--kind", "perturbed", "--dim", "6", "--rank", "2",
                     "--seed", "77", "--violation", "0.1", "-o", inst.string()},
                    "") == 0,
            "generate failed");
    const fs::path err = dir / "error.json";
    require(run_cli({"extend", inst.string(), "--no-meta"}, err.string()) == 1,
            "extend on a perturbed instance must exit 1");
    require(slurp(err).find("IsometryViolation") != std::string::npos,
            "structured error object missing IsometryViolation");
    const fs::path vrep = dir / "verify.json";
    require(run_cli({"verify", inst.string(), "--no-meta"}, vrep.string()) == 1,
            "verify on a perturbed instance must exit 1");
    require(slurp(vrep).find("IsometryViolation") != std::string::npos,
            "verify report missing the IsometryViolation object");
}

void criterion_determinism() {
    require(!g_cli_path.empty(), "CLI path not provided (--cli)");
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "isoext-acceptance-det";
    fs::create_directories(dir);
    const fs::path inst = dir / "instance.json";
    require(run_cli({"generate", "--kind", "isometric", "--dim", "10", "--rank",
                     "4", "--seed", "123", "--queries", "3", "-o", inst.string()},
                    "") == 0,
            "generate failed");

    // Same instance, same flags: byte-identical reports, including across
    // every subcommand.
    for (const std::string cmd : {"verify", "span", "extend"}) {
        const fs::path one = dir / (cmd + "-1.json");
        const fs::path two = dir / (cmd + "-2.json");
        require(run_cli({cmd, inst.string(), "--no-meta", "-o", one.string()}, "") == 0,
                cmd + " failed");
        require(run_cli({cmd, inst.string(), "--no-meta", "-o", two.string()}, "") == 0,
                cmd + " failed on repeat");
        require(slurp(one) == slurp(two), cmd + " reports differ between runs");
        require(!slurp(one).empty(), cmd + " produced an empty report");
    }

    // Generation itself is reproducible.
    const fs::path again = dir / "instance-again.json";
    require(run_cli({"generate", "--kind", "isometric", "--dim", "10", "--rank",
                     "4", "--seed", "123", "--queries", "3", "-o", again.string()},
                    "") == 0,
            "generate failed on repeat");
    require(slurp(inst) == slurp(again), "generated instances differ between runs");
}

struct Criterion {
    int id;
    std::string name;
    std::function<void()> run;
};

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--cli") g_cli_path = argv[i + 1];
    }

    const std::vector<Criterion> criteria = {
        {1, "isometry recovery against the generating map", criterion_recovery},
        {2, "global isometry property", criterion_global_isometry},
        {3, "inner-product preservation", criterion_gram_preservation},
        {4, "extension tower f in F in F2 in G2", criterion_extension_tower},
        {5, "span stabilization and radius invariance", criterion_span_stabilization},
        {6, "cylinder span characterization", criterion_cylinder_characterization},
        {7, "level collapse of operators", criterion_level_collapse},
        {8, "image-span identity", criterion_image_span},
        {9, "coordinate formula on axis-aligned domains", criterion_coordinate_formula},
        {10, "negative detection of non-isometries", criterion_negative_detection},
        {11, "byte-identical deterministic reports", criterion_determinism},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        try {
            criterion.run();
            std::printf("[PASS] criterion %2d: %s\n", criterion.id,
                        criterion.name.c_str());
        } catch (const CheckFailure& f) {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s -- %s\n", criterion.id,
                        criterion.name.c_str(), f.detail.c_str());
        } catch (const std::exception& e) {
            ++failures;
            std::printf("[FAIL] criterion %2d: %s -- unexpected error: %s\n",
                        criterion.id, criterion.name.c_str(), e.what());
        }
        std::fflush(stdout);
    }
    if (failures > 0) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
