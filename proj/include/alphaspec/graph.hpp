#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace alphaspec {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are stored normalized (u < v) and sorted; duplicates passed to the
/// constructor are merged. Self-loops and out-of-range endpoints throw
/// GraphError. Values are safe to share between threads.
class Graph {
 public:
  /// K_1.
  Graph() : Graph(1, std::span<const Edge>{}) {}
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}
  Graph(int n, const std::vector<Edge>& edges)
      : Graph(n, std::span<const Edge>(edges)) {}

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Neighbourhood bitmask; only valid for order() <= 64.
  std::uint64_t neighbor_mask(Vertex v) const { return masks_.at(v); }
  bool has_masks() const noexcept { return !masks_.empty(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> masks_;
};

enum class GraphKind { Tree, Unicyclic, Other };

const char* to_string(GraphKind kind);

struct StructuralProfile {
  std::vector<int> degree_sequence;  // non-increasing
  int edge_count = 0;
  bool connected = false;
  bool bipartite = false;
  bool regular = false;
  GraphKind kind = GraphKind::Other;
  std::vector<std::vector<Vertex>> components;

  int order() const { return static_cast<int>(degree_sequence.size()); }
  int max_degree() const { return degree_sequence.front(); }
  int min_degree() const { return degree_sequence.back(); }
  double average_degree() const {
    return 2.0 * edge_count / static_cast<double>(order());
  }
  /// Zagreb index, sum of squared degrees.
  long long zagreb() const;
};

StructuralProfile structural_profile(const Graph& g);

std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_regular(const Graph& g);
bool is_cycle(const Graph& g);
int max_degree(const Graph& g);
int min_degree(const Graph& g);

/// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Largest shortest-path distance; nullopt when g is disconnected.
std::optional<int> diameter(const Graph& g);

inline constexpr int kDominationMaxOrder = 20;

/// Exact domination number. Throws CapabilityError above kDominationMaxOrder.
int domination_number(const Graph& g);

Graph complement(const Graph& g);

/// Relabel vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Subgraph induced by vertices[i], relabelled to i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

Graph disjoint_union(const Graph& a, const Graph& b);

inline constexpr int kConnectivityMaxOrder = 10;

/// Vertex connectivity by exhaustive vertex-cut search (K_n gives n-1).
/// Throws CapabilityError above kConnectivityMaxOrder.
int vertex_connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);

/// True when `perm` maps edges onto edges.
bool is_automorphism(const Graph& g, std::span<const Vertex> perm);

}  // namespace alphaspec
