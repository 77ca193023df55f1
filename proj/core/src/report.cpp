#include "isoext/report.hpp"

#include <cstdio>
#include <string>

#include "isoext/extension.hpp"

namespace isoext {

namespace {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool all_primitive(const Json& array) {
    for (const auto& el : array) {
        if (el.is_array() || el.is_object()) return false;
    }
    return true;
}

void write_value(std::string& out, const Json& v, int indent, int depth) {
    const bool pretty = indent >= 0;
    const std::string pad = pretty ? std::string(std::size_t(indent) * (depth + 1), ' ') : "";
    const std::string close_pad = pretty ? std::string(std::size_t(indent) * depth, ' ') : "";

    switch (v.type()) {
    case Json::value_t::null:
        out += "null";
        break;
    case Json::value_t::boolean:
        out += v.get<bool>() ? "true" : "false";
        break;
    case Json::value_t::number_integer:
        out += std::to_string(v.get<std::int64_t>());
        break;
    case Json::value_t::number_unsigned:
        out += std::to_string(v.get<std::uint64_t>());
        break;
    case Json::value_t::number_float:
        out += format_double(v.get<double>());
        break;
    case Json::value_t::string:
        out += Json(v.get<std::string>()).dump(); // correct escaping
        break;
    case Json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            break;
        }
        // Flat numeric arrays stay on one line; nested structures break.
        const bool inline_array = !pretty || all_primitive(v);
        out += '[';
        bool first = true;
        for (const auto& el : v) {
            if (!first) out += inline_array ? (pretty ? ", " : ",") : ",";
            if (!inline_array) {
                out += '\n';
                out += pad;
            }
            write_value(out, el, indent, depth + 1);
            first = false;
        }
        if (!inline_array) {
            out += '\n';
            out += close_pad;
        }
        out += ']';
        break;
    }
    case Json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            break;
        }
        out += '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) out += ',';
            if (pretty) {
                out += '\n';
                out += pad;
            }
            out += Json(it.key()).dump();
            out += pretty ? ": " : ":";
            write_value(out, it.value(), indent, depth + 1);
            first = false;
        }
        if (pretty) {
            out += '\n';
            out += close_pad;
        }
        out += '}';
        break;
    }
    default:
        out += "null";
        break;
    }
}

Json basis_to_json(const std::vector<WeightedVector>& basis) {
    Json rows = Json::array();
    for (const auto& b : basis) rows.push_back(b.coords());
    return rows;
}

double basis_gram_defect(const Weights& a,
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

} // namespace

std::string dump_json(const Json& value, int indent) {
    std::string out;
    write_value(out, value, indent, 0);
    return out;
}

Json to_json(const Weights& a) {
    return Json(a.values());
}

Json to_json(const WeightedVector& v) {
    return Json(v.coords());
}

Json to_json(const ValidationReport& r) {
    Json j;
    j["max_abs_residual"] = r.max_abs_residual;
    j["max_rel_residual"] = r.max_rel_residual;
    j["gram_residual"] = r.gram_residual;
    j["gram_residual_rel"] = r.gram_residual_rel;
    j["tolerance"] = r.tolerance;
    j["pass"] = r.pass;
    return j;
}

Json to_json(const CubeReport& r) {
    Json j;
    j["inside"] = r.inside;
    Json violations = Json::array();
    for (const auto& v : r.violations) {
        Json item;
        item["point"] = v.point;
        item["coordinate"] = v.coordinate;
        item["value"] = v.value;
        violations.push_back(item);
    }
    j["violations"] = violations;
    return j;
}

Json to_json(const RadiusReport& r) {
    Json j;
    j["max_distance"] = r.max_distance;
    j["enclosing_radius"] = r.enclosing_radius;
    return j;
}

Json to_json(const IndexSet& s) {
    Json j;
    j["indices"] = s.indices();
    j["kind"] = s.kind() == IndexSet::Kind::Combinatorial ? "combinatorial"
                                                          : "subspace";
    return j;
}

Json to_json(const Weights& a, const AffineSpan& s) {
    Json j;
    j["base"] = s.base().coords();
    j["basis"] = basis_to_json(s.basis());
    j["rank"] = s.rank();
    j["order"] = s.order();
    j["closed"] = s.closed();
    j["basis_gram_defect"] = basis_gram_defect(a, s.basis());
    return j;
}

Json to_json(const Weights& a, const SpanIsometry& f) {
    Json j;
    j["domain"] = to_json(a, f.domain());
    j["codomain_base"] = f.codomain_base().coords();
    j["basis_images"] = basis_to_json(f.basis_images());
    j["matrix"] = operator_matrix(a, f);
    j["level"] = f.level();
    Json diag;
    diag["gram_residual"] = f.diagnostics().gram_residual;
    diag["gram_residual_rel"] = f.diagnostics().gram_residual_rel;
    diag["image_orthonormality"] = f.diagnostics().image_orthonormality;
    diag["warned"] = f.diagnostics().warned;
    j["diagnostics"] = diag;
    return j;
}

Json to_json(const Weights& a, const GlobalIsometry& g) {
    Json j;
    j["p"] = g.p().coords();
    j["q"] = g.q().coords();
    j["matrix"] = g.matrix();
    j["source_basis"] = basis_to_json(g.source_basis());
    j["target_basis"] = basis_to_json(g.target_basis());
    j["span_rank"] = g.span_rank();
    Json diag;
    diag["source_gram_defect"] = basis_gram_defect(a, g.source_basis());
    diag["target_gram_defect"] = basis_gram_defect(a, g.target_basis());
    j["diagnostics"] = diag;
    return j;
}

Json to_json(const DecompositionReport& r) {
    Json j;
    j["span_dimension"] = r.span_dimension;
    j["complement_dimension"] = r.complement_dimension;
    j["total_dimension"] = r.total_dimension;
    j["max_cross_inner"] = r.max_cross_inner;
    return j;
}

} // namespace isoext
