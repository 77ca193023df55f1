#include "isoext/instance.hpp"

#include <cmath>
#include <set>
#include <string>
#include <utility>

#include <json.hpp>

#include "isoext/report.hpp"

namespace isoext {

Tolerances resolve_tolerances(const ToleranceOverrides& overrides,
                              std::optional<double> master) {
    Tolerances tol;
    if (overrides.isometry) tol.isometry = *overrides.isometry;
    if (overrides.rank) tol.rank = *overrides.rank;
    if (overrides.membership) tol.membership = *overrides.membership;
    if (master) {
        tol.isometry = tol.rank = tol.membership = *master;
    }
    for (double t : {tol.isometry, tol.rank, tol.membership}) {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw SchemaError("tolerances must be positive finite numbers");
        }
    }
    return tol;
}

namespace {

using nlohmann::json;

std::vector<double> number_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& el : j) {
        if (!el.is_number()) {
            throw SchemaError(where + ": expected an array of numbers");
        }
        const double v = el.get<double>();
        if (!std::isfinite(v)) throw SchemaError(where + ": non-finite number");
        out.push_back(v);
    }
    return out;
}

void check_keys(const json& j, const std::set<std::string>& allowed,
                const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!allowed.count(it.key())) {
            throw SchemaError(where + ": unknown key \"" + it.key() + "\"");
        }
    }
}

} // namespace

ProblemInstance parse_instance(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("instance is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("instance: expected a JSON object");
    check_keys(j, {"weights", "pairs", "base_index", "queries", "tol", "seed"},
               "instance");

    ProblemInstance inst;

    if (!j.contains("weights")) throw SchemaError("instance: missing \"weights\"");
    inst.weights = number_array(j["weights"], "weights");
    for (double w : inst.weights) {
        if (w <= 0.0) throw SchemaError("weights: entries must be positive");
    }
    const std::size_t n = inst.weights.size();

    if (!j.contains("pairs")) throw SchemaError("instance: missing \"pairs\"");
    if (!j["pairs"].is_array() || j["pairs"].empty()) {
        throw SchemaError("pairs: expected a non-empty array");
    }
    for (const auto& pr : j["pairs"]) {
        if (!pr.is_object()) throw SchemaError("pairs: expected objects");
        check_keys(pr, {"x", "y"}, "pair");
        if (!pr.contains("x") || !pr.contains("y")) {
            throw SchemaError("pair: needs both \"x\" and \"y\"");
        }
        auto x = number_array(pr["x"], "pair.x");
        auto y = number_array(pr["y"], "pair.y");
        if (x.size() != n || y.size() != n) {
            throw SchemaError("pair: coordinate arrays must match the weights "
                              "length " + std::to_string(n));
        }
        inst.pairs.emplace_back(std::move(x), std::move(y));
    }

    if (j.contains("base_index")) {
        if (!j["base_index"].is_number_unsigned()) {
            throw SchemaError("base_index: expected a non-negative integer");
        }
        inst.base_index = j["base_index"].get<std::size_t>();
        if (inst.base_index >= inst.pairs.size()) {
            throw SchemaError("base_index: outside the pair list");
        }
    }

    if (j.contains("queries")) {
        if (!j["queries"].is_array()) throw SchemaError("queries: expected an array");
        for (const auto& q : j["queries"]) {
            auto coords = number_array(q, "query");
            if (coords.size() != n) {
                throw SchemaError("query: coordinate array must match the "
                                  "weights length " + std::to_string(n));
            }
            inst.queries.push_back(std::move(coords));
        }
    }

    if (j.contains("tol")) {
        const auto& t = j["tol"];
        if (!t.is_object()) throw SchemaError("tol: expected an object");
        check_keys(t, {"isometry", "rank", "membership"}, "tol");
        auto pick = [&](const char* key) -> std::optional<double> {
            if (!t.contains(key)) return std::nullopt;
            if (!t[key].is_number()) throw SchemaError("tol: values must be numbers");
            const double v = t[key].get<double>();
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw SchemaError("tol: values must be positive finite");
            }
            return v;
        };
        inst.tol.isometry = pick("isometry");
        inst.tol.rank = pick("rank");
        inst.tol.membership = pick("membership");
    }

    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned()) {
            throw SchemaError("seed: expected a non-negative integer");
        }
        inst.seed = j["seed"].get<std::uint64_t>();
    }

    return inst;
}

std::string write_instance(const ProblemInstance& inst) {
    Json j;
    j["weights"] = inst.weights;
    Json pairs = Json::array();
    for (const auto& [x, y] : inst.pairs) {
        Json pr;
        pr["x"] = x;
        pr["y"] = y;
        pairs.push_back(pr);
    }
    j["pairs"] = pairs;
    j["base_index"] = inst.base_index;
    if (!inst.queries.empty()) j["queries"] = inst.queries;
    if (inst.tol.isometry || inst.tol.rank || inst.tol.membership) {
        Json t;
        if (inst.tol.isometry) t["isometry"] = *inst.tol.isometry;
        if (inst.tol.rank) t["rank"] = *inst.tol.rank;
        if (inst.tol.membership) t["membership"] = *inst.tol.membership;
        j["tol"] = t;
    }
    if (inst.seed) j["seed"] = *inst.seed;
    return dump_json(j);
}

Weights instance_weights(const ProblemInstance& inst) {
    return Weights(inst.weights);
}

PairedSample instance_sample(const Weights& a, const ProblemInstance& inst) {
    std::vector<PointPair> pairs;
    pairs.reserve(inst.pairs.size());
    for (const auto& [x, y] : inst.pairs) {
        pairs.push_back({WeightedVector(x), WeightedVector(y)});
    }
    return PairedSample(a, std::move(pairs), inst.base_index);
}

std::vector<WeightedVector> instance_queries(const ProblemInstance& inst) {
    std::vector<WeightedVector> out;
    out.reserve(inst.queries.size());
    for (const auto& q : inst.queries) out.emplace_back(q);
    return out;
}

} // namespace isoext
