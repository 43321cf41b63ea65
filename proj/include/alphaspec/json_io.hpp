#pragma once

#include <string>

#include "json.hpp"

#include "alphaspec/bounds.hpp"
#include "alphaspec/graph.hpp"
#include "alphaspec/report.hpp"
#include "alphaspec/spectral.hpp"

namespace alphaspec {

using Json = nlohmann::ordered_json;

/// x rounded to 12 significant digits; every number written to JSON or CSV
/// passes through here.
double sig12(double x);
/// Shortest text that reads back as sig12(x).
std::string format_number(double x);

Json to_json(const Graph& g);
/// Accepts {"n": int, "edges": [[u, v], ...]}. Throws GraphError.
Graph graph_from_json(const Json& j);

Json to_json(const SpectralSummary& s);
Json to_json(const BoundEvaluation& ev);
Json to_json(const IndexValues& v);

/// Documents printed by the CLI, one graph each: graph6, n, m, then the
/// command-specific fields.
Json graph_document(const Graph& g);
Json spectrum_document(const Graph& g, Alpha alpha);
Json bounds_document(const Graph& g, Alpha alpha);
Json indices_document(const Graph& g, Alpha alpha);

Json to_json(const Violation& v);
Json to_json(const Witness& w);
Json to_json(const TheoremReport& r);
TheoremReport report_from_json(const Json& j);

}  // namespace alphaspec
