// Batch front-end: ingest a problem instance, run the
// validate -> span -> extend -> complete pipeline, emit JSON reports, apply
// the resulting map to query points, and generate randomized instances.
//
// Exit codes: 0 success, 1 mathematical failure (structured error object on
// stdout), 2 schema or usage error (diagnostic on stderr).

#include <CLI11.hpp>

#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "isoext/isoext.hpp"

namespace {

using isoext::Json;

struct CommonOptions {
    std::string input = "-";
    std::string output = "-";
    std::optional<double> master_tol;
    std::string lambda_csv;
    bool no_meta = false;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw isoext::SchemaError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw isoext::SchemaError("cannot open output file: " + path);
    out << text << "\n";
}

Json make_meta() {
    Json meta;
    meta["tool"] = "isoext";
    meta["version"] = "0.1.0";
    char stamp[32];
    std::time_t now = std::time(nullptr);
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    meta["generated_at"] = stamp;
    return meta;
}

isoext::IndexSet parse_lambda(const std::string& csv, std::size_t dim) {
    std::vector<std::size_t> indices;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            indices.push_back(std::stoul(item));
        } catch (const std::exception&) {
            throw isoext::SchemaError("--lambda: cannot parse index \"" + item + "\"");
        }
    }
    return isoext::IndexSet(std::move(indices), isoext::IndexSet::Kind::Subspace, dim);
}

struct LoadedInstance {
    isoext::ProblemInstance instance;
    isoext::Weights weights;
    isoext::PairedSample sample;
    isoext::Tolerances tol;
};

LoadedInstance load(const CommonOptions& opts) {
    isoext::ProblemInstance inst = isoext::parse_instance(read_input(opts.input));
    isoext::Weights a = isoext::instance_weights(inst);
    isoext::PairedSample sample = isoext::instance_sample(a, inst);
    isoext::Tolerances tol = isoext::resolve_tolerances(inst.tol, opts.master_tol);
    return {std::move(inst), std::move(a), std::move(sample), tol};
}

void finish(const CommonOptions& opts, Json& report) {
    if (!opts.no_meta) report["meta"] = make_meta();
    write_output(opts.output, isoext::dump_json(report));
}

int cmd_verify(const CommonOptions& opts) {
    LoadedInstance in = load(opts);
    const auto& a = in.weights;

    const isoext::ValidationReport validation =
        isoext::validate_isometry(a, in.sample, in.tol.isometry);
    const isoext::PointSet sources(a, in.sample.source_points());
    const isoext::PointSet targets(a, in.sample.target_points());

    Json report;
    report["command"] = "verify";
    report["isometry"] = to_json(validation);
    report["cube_sources"] = to_json(isoext::cube_check(sources));
    report["cube_targets"] = to_json(isoext::cube_check(targets));
    report["bounding"] =
        to_json(isoext::bounding_radius(a, sources, in.sample.base_source()));
    if (!validation.pass) {
        Json err;
        err["type"] = "IsometryViolation";
        err["message"] = "pairing is not a d_a-isometry at the working tolerance";
        err["residual"] = validation.max_rel_residual;
        report["error"] = err;
    }
    finish(opts, report);
    return validation.pass ? 0 : 1;
}

int cmd_span(const CommonOptions& opts) {
    LoadedInstance in = load(opts);
    const auto& a = in.weights;
    const isoext::PointSet sources(a, in.sample.source_points());
    const auto& p = in.sample.base_source();

    const isoext::AffineSpan span = isoext::build_span(a, sources, p, in.tol.rank);
    const isoext::RadiusReport radius = isoext::bounding_radius(a, sources, p);

    Json report;
    report["command"] = "span";
    report["span"] = to_json(a, span);
    report["index_set_finite"] =
        to_json(isoext::index_set_finite(a, sources, in.tol.membership));
    report["index_set_span"] =
        to_json(isoext::index_set_span(a, span, in.tol.membership));
    report["bounding"] = to_json(radius);

    // Stabilization diagnostics: the direction space must not move across
    // span orders or enclosing radii.
    Json stabilization = Json::array();
    for (int order : {1, 2, 3}) {
        for (double factor : {1.0, 2.0, 10.0}) {
            const double r = radius.enclosing_radius * factor;
            const isoext::AffineSpan iterated =
                isoext::gs_power(a, sources, p, order, r, in.tol.rank);
            Json entry;
            entry["order"] = order;
            entry["radius"] = r;
            entry["rank"] = iterated.rank();
            entry["subspace_residual"] = isoext::subspace_residual(a, span, iterated);
            stabilization.push_back(entry);
        }
    }
    report["stabilization"] = stabilization;
    finish(opts, report);
    return 0;
}

int cmd_extend(const CommonOptions& opts) {
    LoadedInstance in = load(opts);
    const auto& a = in.weights;

    const isoext::ValidationReport validation =
        isoext::validate_isometry(a, in.sample, in.tol.isometry);
    const isoext::SpanIsometry second =
        isoext::build_extension_at_level(a, in.sample, 2, in.tol);
    const isoext::GlobalIsometry global = isoext::build_global(a, second);

    Json report;
    report["command"] = "extend";
    report["isometry"] = to_json(validation);
    report["span_isometry"] = to_json(a, second);
    report["image_span"] = to_json(a, isoext::image_span(a, second));
    report["global_isometry"] = to_json(a, global);
    report["decomposition"] = to_json(isoext::decompose(a, global, second));

    // Residuals of the extension tower on the input pairs.
    double span_residual = 0.0;
    double global_residual = 0.0;
    for (const auto& pr : in.sample.pairs()) {
        span_residual = std::max(
            span_residual,
            isoext::distance(a, isoext::evaluate(a, second, pr.source, in.tol.membership),
                             pr.target));
        global_residual = std::max(
            global_residual,
            isoext::distance(a, isoext::apply_global(a, global, pr.source), pr.target));
    }
    Json residuals;
    residuals["span_reproduces_pairs"] = span_residual;
    residuals["global_reproduces_pairs"] = global_residual;
    report["residuals"] = residuals;

    if (!opts.lambda_csv.empty()) {
        const isoext::IndexSet lambda = parse_lambda(opts.lambda_csv, a.dim());
        const isoext::SpanIsometry partial =
            isoext::restrict_to_axes(a, second, lambda);
        report["lambda_restriction"] = to_json(a, partial);
    }

    Json queries = Json::array();
    for (const auto& q : isoext::instance_queries(in.instance)) {
        Json entry;
        entry["point"] = q.coords();
        entry["image"] = isoext::apply_global(a, global, q).coords();
        const double residual = isoext::membership_residual(a, second.domain(), q);
        entry["in_span"] =
            isoext::contains(a, second.domain(), q, in.tol.membership);
        entry["span_residual"] = residual;
        queries.push_back(entry);
    }
    report["queries"] = queries;

    finish(opts, report);
    return 0;
}

int cmd_generate(const isoext::GenerateOptions& gen, const CommonOptions& opts) {
    const isoext::GeneratedInstance out = isoext::generate_instance(gen);
    write_output(opts.output, isoext::write_instance(out.instance));
    return 0;
}

void attach_common(CLI::App* cmd, CommonOptions& opts, bool with_input) {
    if (with_input) {
        cmd->add_option("input", opts.input,
                        "Instance JSON file ('-' for stdin)");
    }
    cmd->add_option("-o,--output", opts.output, "Report path ('-' for stdout)");
    cmd->add_option("--tol", opts.master_tol,
                    "Master tolerance (sets isometry, rank and membership)");
    cmd->add_option("--lambda", opts.lambda_csv,
                    "Comma-separated 1-based indices for the axis-restricted "
                    "completion (extend only; axis-aligned domains)");
    cmd->add_flag("--no-meta", opts.no_meta,
                  "Omit the meta block (timestamps) from reports");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"isometry extension pipeline for weighted sequence spaces"};
    app.require_subcommand(1);

    CommonOptions verify_opts, span_opts, extend_opts, generate_opts;
    isoext::GenerateOptions gen;
    std::string kind_name = "isometric";

    CLI::App* verify = app.add_subcommand(
        "verify", "Check the pairing is a d_a-isometry; cube containment");
    attach_common(verify, verify_opts, true);

    CLI::App* span = app.add_subcommand(
        "span", "Span basis, index sets, stabilization diagnostics");
    attach_common(span, span_opts, true);

    CLI::App* extend = app.add_subcommand(
        "extend", "Full pipeline: span isometry, global isometry, queries");
    attach_common(extend, extend_opts, true);

    CLI::App* generate = app.add_subcommand(
        "generate", "Synthesize a problem instance");
    generate->add_option("--kind", kind_name,
                         "isometric | grid | cylinder | perturbed");
    generate->add_option("--dim", gen.dim, "Truncation dimension N");
    generate->add_option("--rank", gen.rank, "Cloud rank / free coordinates");
    generate->add_option("--seed", gen.seed, "Generator seed");
    generate->add_option("--points", gen.points, "Source point count (0: derive)");
    generate->add_option("--queries", gen.queries, "Query point count");
    generate->add_option("--violation", gen.violation,
                         "Scale factor offset for perturbed instances");
    generate->add_flag("--dyadic", gen.dyadic_weights, "Use weights a_i = 2^-i");
    attach_common(generate, generate_opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_opts);
        if (span->parsed()) return cmd_span(span_opts);
        if (extend->parsed()) return cmd_extend(extend_opts);
        gen.kind = isoext::parse_instance_kind(kind_name);
        return cmd_generate(gen, generate_opts);
    } catch (const isoext::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const isoext::Error& e) {
        Json err;
        err["error"]["type"] = e.kind();
        err["error"]["message"] = e.what();
        if (const auto* iso = dynamic_cast<const isoext::IsometryViolation*>(&e)) {
            err["error"]["residual"] = iso->residual;
        } else if (const auto* out = dynamic_cast<const isoext::OutsideDomain*>(&e)) {
            err["error"]["residual"] = out->residual;
        }
        std::cout << isoext::dump_json(err) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return 2;
    }
}
