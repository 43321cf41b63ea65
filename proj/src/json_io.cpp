#include "alphaspec/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "alphaspec/errors.hpp"
#include "alphaspec/graph6.hpp"

namespace alphaspec {

double sig12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
  return buf;
}

namespace {

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return sig12(x);
}

Json numbers(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(number(x));
  return out;
}

template <class T>
void put_optional(Json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

}  // namespace

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("bad graph JSON: ") + e.what());
  }
}

Json to_json(const SpectralSummary& s) {
  Json j;
  j["alpha"] = number(s.alpha.value());
  j["eigenvalues"] = numbers(s.eigenvalues);
  j["rho"] = number(s.rho);
  j["least"] = number(s.least);
  j["perron"] = s.perron ? numbers(*s.perron) : Json(nullptr);
  return j;
}

Json to_json(const BoundEvaluation& ev) {
  Json j;
  j["bound_id"] = ev.bound_id;
  j["parameter"] = ev.parameter ? Json(*ev.parameter) : Json(nullptr);
  j["applicable"] = ev.applicable;
  j["reason"] = ev.reason;
  j["direction"] = to_string(ev.direction);
  j["strict"] = ev.strict;
  j["target"] = ev.target;
  j["value"] = ev.applicable ? number(ev.value) : Json(nullptr);
  j["target_value"] = ev.applicable ? number(ev.target_value) : Json(nullptr);
  j["slack"] = ev.applicable ? number(ev.slack) : Json(nullptr);
  j["attained"] = ev.attained();
  j["equality_class"] = ev.equality_class ? Json(*ev.equality_class) : Json(nullptr);
  return j;
}

Json to_json(const IndexValues& v) {
  return {{"energy", number(v.energy)}, {"estrada", number(v.estrada)}, {"zagreb", v.zagreb}};
}

namespace {

Json graph_header(const Graph& g) {
  Json j;
  j["graph6"] = graph6_encode(g);
  j["n"] = g.order();
  j["m"] = g.size();
  return j;
}

void append(Json& into, const Json& from) {
  for (const auto& [k, v] : from.items()) into[k] = v;
}

}  // namespace

Json graph_document(const Graph& g) {
  Json j = graph_header(g);
  j["edges"] = to_json(g)["edges"];
  return j;
}

Json spectrum_document(const Graph& g, Alpha alpha) {
  Json j = graph_header(g);
  append(j, to_json(spectrum(g, alpha)));
  return j;
}

Json bounds_document(const Graph& g, Alpha alpha) {
  const BoundContext ctx(g, alpha);
  Json j = graph_header(g);
  j["alpha"] = number(alpha.value());
  j["rho"] = number(ctx.rho());
  Json list = Json::array();
  for (const auto& ev : all_bounds(ctx)) list.push_back(to_json(ev));
  j["bounds"] = std::move(list);
  if (auto c = bound_comparisons(ctx)) {
    Json cj;
    cj["k"] = c->k;
    cj["predicates"] = c->predicate;
    cj["differences"] = numbers({c->difference.begin(), c->difference.end()});
    cj["consistent"] = c->consistent();
    j["comparisons"] = std::move(cj);
  } else {
    j["comparisons"] = nullptr;
  }
  return j;
}

Json indices_document(const Graph& g, Alpha alpha) {
  const BoundContext ctx(g, alpha);
  Json j = graph_header(g);
  j["alpha"] = number(alpha.value());
  append(j, to_json(indices_from_spectrum(g, alpha, ctx.eigenvalues)));
  const auto e = energy_bounds(ctx);
  Json list = Json::array();
  for (const auto* ev : {&e.upper, &e.lower_perron, &e.lower_variance}) list.push_back(to_json(*ev));
  list.push_back(to_json(estrada_upper(ctx)));
  j["bounds"] = std::move(list);
  return j;
}

Json to_json(const Violation& v) {
  Json j;
  j["check"] = v.check;
  j["graph6"] = v.graph6;
  put_optional(j, "partner", v.partner);
  j["alpha"] = number(v.alpha);
  put_optional(j, "parameter", v.parameter);
  j["value"] = number(v.value);
  j["kind"] = v.kind;
  j["details"] = v.details;
  return j;
}

Json to_json(const Witness& w) {
  Json j;
  j["role"] = w.role;
  j["graph6"] = w.graph6;
  j["alpha"] = number(w.alpha);
  j["value"] = number(w.value);
  put_optional(j, "family", w.family);
  put_optional(j, "parameter", w.parameter);
  return j;
}

Json to_json(const TheoremReport& r) {
  Json j;
  j["theorem_id"] = r.theorem_id;
  j["status"] = r.status();
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  j["parameters"] = std::move(params);
  j["instances_checked"] = r.instances_checked;
  j["instances_skipped"] = r.instances_skipped;
  j["certified_ties"] = r.certified_ties;
  j["smallest_gap"] = r.smallest_gap ? number(*r.smallest_gap) : Json(nullptr);
  Json list = Json::array();
  for (const auto& v : r.violations) list.push_back(to_json(v));
  j["violations"] = std::move(list);
  list = Json::array();
  for (const auto& w : r.extremal_witnesses) list.push_back(to_json(w));
  j["extremal_witnesses"] = std::move(list);
  list = Json::array();
  for (const auto& w : r.equality_witnesses) list.push_back(to_json(w));
  j["equality_witnesses"] = std::move(list);
  j["notes"] = r.notes;
  return j;
}

namespace {

double read_number(const Json& j) {
  return j.is_null() ? std::nan("") : j.get<double>();
}

template <class T>
std::optional<T> read_optional(const Json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return std::nullopt;
  return j[key].get<T>();
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.role = j.at("role").get<std::string>();
  w.graph6 = j.at("graph6").get<std::string>();
  w.alpha = read_number(j.at("alpha"));
  w.value = read_number(j.at("value"));
  w.family = read_optional<std::string>(j, "family");
  w.parameter = read_optional<int>(j, "parameter");
  return w;
}

}  // namespace

TheoremReport report_from_json(const Json& j) {
  TheoremReport r;
  r.theorem_id = j.at("theorem_id").get<std::string>();
  for (const auto& [k, v] : j.at("parameters").items()) r.parameters[k] = v.get<std::string>();
  r.instances_checked = j.at("instances_checked").get<std::size_t>();
  r.instances_skipped = j.at("instances_skipped").get<std::size_t>();
  r.certified_ties = j.value("certified_ties", std::size_t{0});
  if (j.contains("smallest_gap") && !j["smallest_gap"].is_null()) {
    r.smallest_gap = j["smallest_gap"].get<double>();
  }
  for (const auto& v : j.at("violations")) {
    Violation x;
    x.check = v.at("check").get<std::string>();
    x.graph6 = v.at("graph6").get<std::string>();
    x.partner = read_optional<std::string>(v, "partner");
    x.alpha = read_number(v.at("alpha"));
    x.parameter = read_optional<int>(v, "parameter");
    x.value = read_number(v.at("value"));
    x.kind = v.at("kind").get<std::string>();
    x.details = v.at("details").get<std::string>();
    r.violations.push_back(std::move(x));
  }
  for (const auto& w : j.at("extremal_witnesses")) r.extremal_witnesses.push_back(witness_from_json(w));
  for (const auto& w : j.at("equality_witnesses")) r.equality_witnesses.push_back(witness_from_json(w));
  r.notes = j.at("notes").get<std::vector<std::string>>();
  return r;
}

}  // namespace alphaspec
