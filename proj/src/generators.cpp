#include "alphaspec/generators.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "alphaspec/errors.hpp"

namespace alphaspec {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

void require_vertex(const Graph& g, Vertex v, const char* op) {
  require(v >= 0 && v < g.order(),
          std::string(op) + ": vertex " + std::to_string(v) + " not in graph");
}

}  // namespace

Graph star(int n) {
  require(n >= 1, "star: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph(n, edges);
}

Graph path(int n) {
  require(n >= 1, "path: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph cycle(int n) {
  require(n >= 3, "cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete(int n) {
  require(n >= 1, "complete: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph empty_graph(int n) {
  require(n >= 1, "empty_graph: n must be >= 1");
  return Graph(n, std::vector<Edge>{});
}

Graph double_star(int n, int a) {
  require(n >= 4 && a >= 1 && a <= (n - 2) / 2,
          "double_star: need n >= 4 and 1 <= a <= floor((n-2)/2), got n=" + std::to_string(n) +
              " a=" + std::to_string(a));
  std::vector<Edge> edges{{0, 1}};
  Vertex next = 2;
  for (int i = 0; i < a; ++i) edges.emplace_back(0, next++);
  while (next < n) edges.emplace_back(1, next++);
  return Graph(n, edges);
}

Graph diameter_tree(int n, int d) {
  require(d >= 3 && d <= n - 1, "diameter_tree: need 3 <= d <= n-1, got n=" + std::to_string(n) +
                                    " d=" + std::to_string(d));
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= d; ++v) edges.emplace_back(v - 1, v);
  const Vertex hub = d / 2;
  for (Vertex v = d + 1; v < n; ++v) edges.emplace_back(hub, v);
  return Graph(n, edges);
}

Graph star_plus_edge(int n) {
  require(n >= 3, "star_plus_edge: n must be >= 3");
  std::vector<Edge> edges = star(n).edges();
  edges.emplace_back(1, 2);
  return Graph(n, edges);
}

Graph domination_extremal(int n, int gamma, DominationFamily family) {
  if (family == DominationFamily::CompleteWithIsolated) {
    require(gamma >= 1 && gamma <= n - 1,
            "domination_extremal: family A needs 1 <= gamma <= n-1");
    if (gamma == 1) return complete(n);
    return disjoint_union(complete(n - gamma + 1), empty_graph(gamma - 1));
  }
  require(gamma >= 2 && n - gamma >= 2 && (n - gamma) % 2 == 0,
          "domination_extremal: family B needs gamma >= 2 and n - gamma even and positive");
  const int core = n - gamma + 2;
  std::vector<Edge> matching;
  for (Vertex v = 0; v < core; v += 2) matching.emplace_back(v, v + 1);
  Graph cocktail = complement(Graph(core, matching));
  return gamma == 2 ? cocktail : disjoint_union(cocktail, empty_graph(gamma - 2));
}

Graph attach_pendant_path(const Graph& g, Vertex u, int p) {
  require_vertex(g, u, "attach_pendant_path");
  require(p >= 0, "attach_pendant_path: negative length");
  if (p == 0) return g;
  std::vector<Edge> edges = g.edges();
  Vertex prev = u;
  for (int i = 0; i < p; ++i) {
    const Vertex next = g.order() + i;
    edges.emplace_back(prev, next);
    prev = next;
  }
  return Graph(g.order() + p, edges);
}

Graph pendant_pair(const PendantSpec& spec) {
  require(spec.p >= 0 && spec.q >= 0, "pendant_pair: negative path length");
  if (spec.anchors.size() == 1) {
    const Vertex u = spec.anchors[0];
    return attach_pendant_path(attach_pendant_path(spec.base, u, spec.p), u, spec.q);
  }
  require(spec.anchors.size() == 2, "pendant_pair: expected one or two anchors");
  const Vertex u = spec.anchors[0], v = spec.anchors[1];
  require_vertex(spec.base, u, "pendant_pair");
  require_vertex(spec.base, v, "pendant_pair");
  require(spec.base.adjacent(u, v), "pendant_pair: two anchors must be adjacent");
  return attach_pendant_path(attach_pendant_path(spec.base, u, spec.p), v, spec.q);
}

Graph move_neighbors(const Graph& g, Vertex v, Vertex u, std::span<const Vertex> moved) {
  require_vertex(g, v, "move_neighbors");
  require_vertex(g, u, "move_neighbors");
  require(u != v, "move_neighbors: source and target coincide");
  require(!moved.empty(), "move_neighbors: moved set is empty");
  std::vector<Vertex> set(moved.begin(), moved.end());
  std::sort(set.begin(), set.end());
  require(std::adjacent_find(set.begin(), set.end()) == set.end(),
          "move_neighbors: repeated vertex in moved set");
  for (Vertex w : set) {
    require_vertex(g, w, "move_neighbors");
    require(w != u && g.adjacent(v, w) && !g.adjacent(u, w),
            "move_neighbors: vertex " + std::to_string(w) + " not in (N(v) \\ N(u)) \\ {u}");
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    const Vertex other = a == v ? b : (b == v ? a : -1);
    if (other >= 0 && std::binary_search(set.begin(), set.end(), other)) {
      edges.emplace_back(u, other);
    } else {
      edges.emplace_back(a, b);
    }
  }
  return Graph(g.order(), edges);
}

Graph two_edge_swap(const Graph& g, Vertex u1, Vertex u2, Vertex v1, Vertex v2) {
  for (Vertex x : {u1, u2, v1, v2}) require_vertex(g, x, "two_edge_swap");
  std::vector<Vertex> four{u1, u2, v1, v2};
  std::sort(four.begin(), four.end());
  require(std::adjacent_find(four.begin(), four.end()) == four.end(),
          "two_edge_swap: vertices must be distinct");
  require(g.adjacent(u1, u2) && g.adjacent(v1, v2), "two_edge_swap: u1u2 and v1v2 must be edges");
  require(!g.adjacent(u1, v2) && !g.adjacent(v1, u2),
          "two_edge_swap: u1v2 and v1u2 must be non-edges");
  const Edge drop1{std::min(u1, u2), std::max(u1, u2)};
  const Edge drop2{std::min(v1, v2), std::max(v1, v2)};
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e != drop1 && e != drop2) edges.push_back(e);
  }
  edges.emplace_back(u1, v2);
  edges.emplace_back(v1, u2);
  return Graph(g.order(), edges);
}

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int index_draw(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

}  // namespace

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  require(n >= 1, "random_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit_draw(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  require(n >= 1, "random_connected_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(index_draw(rng, v), v);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (unit_draw(rng) < p) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

std::vector<Graph> random_corpus(int count, int min_n, int max_n, bool connected, std::uint64_t seed) {
  require(1 <= min_n && min_n <= max_n, "random_corpus: need 1 <= min_n <= max_n");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const int n = min_n + index_draw(rng, max_n - min_n + 1);
    const double p = 0.15 + 0.7 * unit_draw(rng);
    out.push_back(connected ? random_connected_graph(n, p, rng) : random_graph(n, p, rng));
  }
  return out;
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto part = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size()) {
      throw GraphError("family spec '" + std::string(spec) + "': bad integer '" +
                       std::string(part) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw GraphError("family spec '" + std::string(spec) + "' must look like name:params");
  }
  const std::string name(spec.substr(0, colon));
  const auto args = parse_ints(spec.substr(colon + 1), spec);
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw GraphError("family '" + name + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "Sn") { want(1); return star(args[0]); }
  if (name == "Pn") { want(1); return path(args[0]); }
  if (name == "Cn") { want(1); return cycle(args[0]); }
  if (name == "Kn") { want(1); return complete(args[0]); }
  if (name == "En") { want(1); return empty_graph(args[0]); }
  if (name == "Dna") { want(2); return double_star(args[0], args[1]); }
  if (name == "Tnd") { want(2); return diameter_tree(args[0], args[1]); }
  if (name == "Snpe") { want(1); return star_plus_edge(args[0]); }
  if (name == "DomA") {
    want(2);
    return domination_extremal(args[0], args[1], DominationFamily::CompleteWithIsolated);
  }
  if (name == "DomB") {
    want(2);
    return domination_extremal(args[0], args[1], DominationFamily::MatchingComplement);
  }
  throw GraphError("unknown graph family '" + name + "'");
}

}  // namespace alphaspec
