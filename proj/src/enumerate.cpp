#include "alphaspec/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <string>

#include "alphaspec/canonical.hpp"
#include "alphaspec/errors.hpp"

namespace alphaspec {

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Trees: return "trees";
    case GraphClass::Unicyclic: return "unicyclic";
    case GraphClass::Connected: return "connected";
    case GraphClass::All: return "all";
    case GraphClass::ConnectedNonBipartite: return "connected-nonbipartite";
  }
  return "?";
}

GraphClass parse_graph_class(std::string_view name) {
  for (auto c : {GraphClass::Trees, GraphClass::Unicyclic, GraphClass::Connected, GraphClass::All,
                 GraphClass::ConnectedNonBipartite}) {
    if (name == to_string(c)) return c;
  }
  throw GraphError("unknown graph class '" + std::string(name) + "'");
}

int class_max_order(GraphClass c) {
  switch (c) {
    case GraphClass::Trees: return 12;
    case GraphClass::Unicyclic: return 10;
    default: return 8;
  }
}

std::vector<std::vector<int>> rooted_level_sequences(int n) {
  if (n < 1) throw GraphError("rooted_level_sequences: n must be >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> level(n);
  std::iota(level.begin(), level.end(), 0);
  while (true) {
    out.push_back(level);
    int p = n - 1;
    while (p >= 0 && level[p] <= 1) --p;
    if (p < 0) break;
    int q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (int i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
  return out;
}

Graph tree_from_level_sequence(std::span<const int> levels) {
  const int n = static_cast<int>(levels.size());
  if (n < 1 || levels[0] != 0) throw GraphError("level sequence must start at the root level 0");
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_level{0};
  for (int i = 1; i < n; ++i) {
    const int l = levels[i];
    if (l < 1 || l > static_cast<int>(last_at_level.size())) {
      throw GraphError("level sequence jumps more than one level at index " + std::to_string(i));
    }
    edges.emplace_back(last_at_level[l - 1], i);
    last_at_level.resize(l);
    last_at_level.push_back(i);
  }
  return Graph(n, edges);
}

namespace {

// Canonical string of the tree rooted at v: children's strings
// sorted descending, bracketed.
std::string rooted_code(const Graph& t, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex w : t.neighbors(v)) {
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  }
  std::sort(kids.begin(), kids.end(), std::greater<>());
  std::string s = "(";
  for (auto& k : kids) s += k;
  s += ")";
  return s;
}

// Centroids of a tree: vertices whose largest branch has <= n/2 vertices.
std::vector<Vertex> centroids(const Graph& t) {
  const int n = t.order();
  std::vector<int> parent(n, -1), order;
  order.reserve(n);
  std::vector<int> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  std::vector<int> sub(n, 1);
  for (int i = n - 1; i > 0; --i) sub[parent[order[i]]] += sub[order[i]];
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int largest = n - sub[v];
    for (Vertex w : t.neighbors(v)) {
      if (w != parent[v]) largest = std::max(largest, sub[w]);
    }
    if (2 * largest <= n) out.push_back(v);
  }
  return out;
}

std::vector<Graph> free_trees(int n) {
  std::vector<Graph> out;
  for (const auto& levels : rooted_level_sequences(n)) {
    Graph t = tree_from_level_sequence(levels);
    const auto cs = centroids(t);
    if (std::find(cs.begin(), cs.end(), 0) == cs.end()) continue;
    if (cs.size() == 2) {
      const Vertex other = cs[0] == 0 ? cs[1] : cs[0];
      if (rooted_code(t, 0, -1) < rooted_code(t, other, -1)) continue;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Canonical representatives sorted by (edge count, certificate).
std::vector<Graph> sorted_representatives(std::map<std::pair<int, CanonicalForm>, Graph>& reps) {
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [key, g] : reps) out.push_back(std::move(g));
  return out;
}

void add_representative(std::map<std::pair<int, CanonicalForm>, Graph>& reps, const Graph& g) {
  auto r = canonical_labelling(g);
  auto key = std::make_pair(g.size(), r.form);
  if (reps.find(key) == reps.end()) reps.emplace(std::move(key), relabel(g, r.labelling));
}

std::vector<Graph> unicyclic_graphs(int n) {
  if (n < 3) return {};
  std::map<std::pair<int, CanonicalForm>, Graph> reps;
  for (const Graph& t : free_trees(n)) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (t.adjacent(u, v)) continue;
        auto edges = t.edges();
        edges.emplace_back(u, v);
        add_representative(reps, Graph(n, edges));
      }
    }
  }
  return sorted_representatives(reps);
}

// All graphs by one-vertex augmentation of the (n-1)-vertex classes,
// memoised per order.
const std::vector<Graph>& all_graphs(int n) {
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  if (cache.empty()) cache.emplace(1, std::vector<Graph>{Graph()});
  for (int k = cache.rbegin()->first + 1; k <= n; ++k) {
    std::map<std::pair<int, CanonicalForm>, Graph> reps;
    const Vertex fresh = k - 1;
    for (const Graph& g : cache.at(k - 1)) {
      for (unsigned subset = 0; subset < (1U << (k - 1)); ++subset) {
        auto edges = g.edges();
        for (Vertex v = 0; v < k - 1; ++v) {
          if ((subset >> v) & 1U) edges.emplace_back(v, fresh);
        }
        add_representative(reps, Graph(k, edges));
      }
    }
    cache.emplace(k, sorted_representatives(reps));
  }
  return cache.at(n);
}

}  // namespace

std::vector<Graph> enumerate(const EnumerationQuery& query) {
  const int n = query.n;
  if (n < 1) throw GraphError("enumerate: n must be >= 1");
  if (n > class_max_order(query.graph_class)) {
    throw CapabilityError(std::string("enumerate: class ") + to_string(query.graph_class) +
                          " supports n <= " + std::to_string(class_max_order(query.graph_class)) +
                          ", got n=" + std::to_string(n));
  }
  std::vector<Graph> out;
  switch (query.graph_class) {
    case GraphClass::Trees: out = free_trees(n); break;
    case GraphClass::Unicyclic: out = unicyclic_graphs(n); break;
    case GraphClass::All: out = all_graphs(n); break;
    case GraphClass::Connected:
      for (const Graph& g : all_graphs(n)) {
        if (is_connected(g)) out.push_back(g);
      }
      break;
    case GraphClass::ConnectedNonBipartite:
      for (const Graph& g : all_graphs(n)) {
        if (is_connected(g) && !is_bipartite(g)) out.push_back(g);
      }
      break;
  }
  if (out.size() > query.cap) {
    throw CapabilityError("enumerate: " + std::to_string(out.size()) +
                          " graphs exceed the cap of " + std::to_string(query.cap));
  }
  return out;
}

std::span<const Graph> GraphStream::next_chunk(std::size_t max_size) {
  const std::size_t begin = std::min(next_, graphs_.size());
  const std::size_t count = std::min(max_size, graphs_.size() - begin);
  next_ = begin + count;
  return std::span<const Graph>(graphs_).subspan(begin, count);
}

namespace {

void require_labeled_order(int n) {
  if (n < 1) throw GraphError("labelled enumeration: n must be >= 1");
  if (n > kLabeledMaxOrder) {
    throw CapabilityError("labelled enumeration supports n <= " +
                          std::to_string(kLabeledMaxOrder) + ", got n=" + std::to_string(n));
  }
}

}  // namespace

std::uint64_t labeled_count(int n) {
  require_labeled_order(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t mask) {
  if (mask >= labeled_count(n)) throw GraphError("labeled_graph: mask out of range");
  const int bits = n * (n - 1) / 2;
  std::vector<Edge> edges;
  // Most significant bit is the first pair in graph6 order (0,1), (0,2), (1,2), ...
  int b = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++b) {
      if ((mask >> (bits - 1 - b)) & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

void for_each_labeled(int n, const std::function<void(const Graph&)>& visit) {
  const std::uint64_t total = labeled_count(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) visit(labeled_graph(n, mask));
}

std::vector<Graph> enumerate_labeled(int n, const std::function<bool(const Graph&)>& keep) {
  std::vector<Graph> out;
  for_each_labeled(n, [&](const Graph& g) {
    if (!keep || keep(g)) out.push_back(g);
  });
  return out;
}

}  // namespace alphaspec
