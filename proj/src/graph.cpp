#include "alphaspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <string>

#include "alphaspec/errors.hpp"

namespace alphaspec {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw GraphError("graph needs at least one vertex, got n=" + std::to_string(n));
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adj_.assign(n, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

  if (n <= 64) {
    masks_.assign(n, 0);
    for (auto [u, v] : edges_) {
      masks_[u] |= std::uint64_t{1} << v;
      masks_[v] |= std::uint64_t{1} << u;
    }
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!masks_.empty()) return (masks_.at(u) >> v) & 1U;
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

const char* to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::Tree: return "tree";
    case GraphKind::Unicyclic: return "unicyclic";
    case GraphKind::Other: return "other";
  }
  return "other";
}

long long StructuralProfile::zagreb() const {
  long long z = 0;
  for (int d : degree_sequence) z += static_cast<long long>(d) * d;
  return z;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() == 1; }

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          q.push(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (Vertex v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

int min_degree(const Graph& g) {
  int d = g.order();
  for (Vertex v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

bool is_regular(const Graph& g) { return max_degree(g) == min_degree(g); }

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

StructuralProfile structural_profile(const Graph& g) {
  StructuralProfile p;
  const int n = g.order();
  p.degree_sequence.resize(n);
  for (Vertex v = 0; v < n; ++v) p.degree_sequence[v] = g.degree(v);
  std::sort(p.degree_sequence.begin(), p.degree_sequence.end(), std::greater<>());
  p.edge_count = g.size();
  p.components = components(g);
  p.connected = p.components.size() == 1;
  p.bipartite = is_bipartite(g);
  p.regular = p.degree_sequence.front() == p.degree_sequence.back();
  if (p.connected && p.edge_count == n - 1) {
    p.kind = GraphKind::Tree;
  } else if (p.connected && p.edge_count == n) {
    p.kind = GraphKind::Unicyclic;
  } else {
    p.kind = GraphKind::Other;
  }
  return p;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  dist.at(source) = 0;
  std::queue<Vertex> q;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (int d : distances_from(g, s)) {
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

namespace {

struct DominationSearch {
  std::vector<std::uint32_t> closed;
  std::uint32_t full = 0;
  int max_closed = 0;

  bool covers(std::uint32_t covered, int remaining) const {
    if (covered == full) return true;
    if (remaining == 0) return false;
    const int undominated = std::popcount(full & ~covered);
    if (remaining * max_closed < undominated) return false;
    // Some vertex of N[w] must be chosen for the lowest undominated w.
    const int w = std::countr_zero(full & ~covered);
    for (std::uint32_t cand = closed[w]; cand; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      if (covers(covered | closed[v], remaining - 1)) return true;
    }
    return false;
  }
};

}  // namespace

int domination_number(const Graph& g) {
  const int n = g.order();
  if (n > kDominationMaxOrder) {
    throw CapabilityError("domination_number supports n <= " +
                          std::to_string(kDominationMaxOrder) + ", got n=" + std::to_string(n));
  }
  DominationSearch s;
  s.full = n == 32 ? ~0U : ((1U << n) - 1);
  s.closed.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    s.closed[v] = static_cast<std::uint32_t>(g.neighbor_mask(v)) | (1U << v);
    s.max_closed = std::max(s.max_closed, std::popcount(s.closed[v]));
  }

  // Greedy cover gives an upper bound.
  int upper = 0;
  for (std::uint32_t covered = 0; covered != s.full; ++upper) {
    int best_v = 0, best_gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      int gain = std::popcount(s.closed[v] & ~covered);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    covered |= s.closed[best_v];
  }

  // Lower bound: the k largest closed neighbourhoods must reach n vertices.
  std::vector<int> sizes;
  for (auto c : s.closed) sizes.push_back(std::popcount(c));
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  int lower = 0;
  for (int total = 0; total < n; ++lower) total += sizes[lower];

  for (int k = lower; k < upper; ++k) {
    if (s.covers(0, k)) return k;
  }
  return upper;
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return Graph(g.order(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw GraphError("relabel: permutation size does not match graph order");
  }
  std::vector<int> hit(g.order(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]++) throw GraphError("relabel: not a permutation");
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    Vertex v = vertices[i];
    if (v < 0 || v >= g.order() || index[v] >= 0) {
      throw GraphError("induced_subgraph: invalid or repeated vertex " + std::to_string(v));
    }
    index[v] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

namespace {

bool connected_without(const Graph& g, std::uint64_t removed) {
  const int n = g.order();
  const std::uint64_t all = (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1) & ~removed;
  if (all == 0) return true;
  std::uint64_t seen = all & (~all + 1);
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbor_mask(std::countr_zero(f));
    next &= all & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

bool find_cut(const Graph& g, int size, int start, std::uint64_t chosen) {
  if (size == 0) return !connected_without(g, chosen);
  for (int v = start; v < g.order(); ++v) {
    if (find_cut(g, size - 1, v + 1, chosen | (std::uint64_t{1} << v))) return true;
  }
  return false;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n > kConnectivityMaxOrder) {
    throw CapabilityError("vertex_connectivity supports n <= " +
                          std::to_string(kConnectivityMaxOrder) + ", got n=" + std::to_string(n));
  }
  if (g.size() == n * (n - 1) / 2) return n - 1;
  for (int k = 0; k <= n - 2; ++k) {
    if (find_cut(g, k, 0, 0)) return k;
  }
  return n - 1;
}

bool is_k_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  return g.order() > k && vertex_connectivity(g) >= k;
}

bool is_automorphism(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) return false;
  std::vector<int> hit(g.order(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]++) return false;
  }
  for (auto [u, v] : g.edges()) {
    if (!g.adjacent(perm[u], perm[v])) return false;
  }
  return true;
}

}  // namespace alphaspec
