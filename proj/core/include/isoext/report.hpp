#pragma once

#include <string>

#include <json.hpp>

#include "isoext/completion.hpp"
#include "isoext/extension.hpp"
#include "isoext/pointset.hpp"
#include "isoext/span.hpp"

namespace isoext {

/// Reports preserve insertion order so that identical runs serialize to
/// identical bytes.
using Json = nlohmann::ordered_json;

/// Serializes with every floating-point number printed at 17 significant
/// digits (exact double round trip, byte-stable across runs). indent < 0
/// emits a single line.
std::string dump_json(const Json& value, int indent = 2);

Json to_json(const Weights& a);
Json to_json(const WeightedVector& v);
Json to_json(const ValidationReport& r);
Json to_json(const CubeReport& r);
Json to_json(const RadiusReport& r);
Json to_json(const IndexSet& s);
Json to_json(const Weights& a, const AffineSpan& s);
Json to_json(const Weights& a, const SpanIsometry& f);
Json to_json(const Weights& a, const GlobalIsometry& g);
Json to_json(const DecompositionReport& r);

} // namespace isoext
