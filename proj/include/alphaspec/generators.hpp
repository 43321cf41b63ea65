#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "alphaspec/graph.hpp"

namespace alphaspec {

// Named families. Star centres are vertex 0; paths and cycles run 0,1,...

Graph star(int n);
Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty_graph(int n);

/// D_{n,a}: centres 0 (with a leaves) and 1 (with n-a-2 leaves) joined by an
/// edge. Requires n >= 4 and 1 <= a <= (n-2)/2.
Graph double_star(int n, int a);

/// T_{n,d}: path 0..d with n-1-d pendant edges at vertex floor(d/2).
/// Requires 3 <= d <= n-1.
Graph diameter_tree(int n, int d);

/// S_n + e: star with an extra edge between leaves 1 and 2. Requires n >= 3.
Graph star_plus_edge(int n);

/// Graphs attaining rho = n - gamma for a given domination number.
enum class DominationFamily {
  CompleteWithIsolated,  // K_{n-gamma+1} plus (gamma-1) isolated vertices
  MatchingComplement,    // complement of ((n-gamma+2)/2) K_2, plus (gamma-2) isolated
};

Graph domination_extremal(int n, int gamma, DominationFamily family);

/// G(u; p): a new path of length p hung at u, new vertices labelled
/// n, n+1, ... in path order. p = 0 returns g unchanged.
Graph attach_pendant_path(const Graph& g, Vertex u, int p);

struct PendantSpec {
  Graph base;
  /// One anchor gives G_u(p, q); two adjacent anchors give G_{u,v}(p, q).
  std::vector<Vertex> anchors;
  int p = 0;
  int q = 0;
};

Graph pendant_pair(const PendantSpec& spec);

/// Replace the edges v-w (w in moved) with u-w. Requires moved to be a
/// non-empty subset of (N(v) \ N(u)) \ {u}.
Graph move_neighbors(const Graph& g, Vertex v, Vertex u, std::span<const Vertex> moved);

/// Replace edges u1u2, v1v2 by u1v2, v1u2. Requires four distinct vertices,
/// u1u2, v1v2 present and u1v2, v1u2 absent.
Graph two_edge_swap(const Graph& g, Vertex u1, Vertex u2, Vertex v1, Vertex v2);

/// G(n, p): each pair joined independently with probability p. Draws use
/// raw 64-bit outputs of rng, so results are identical across platforms.
Graph random_graph(int n, double p, std::mt19937_64& rng);
/// Uniform random recursive tree on n vertices plus G(n, p) extra edges.
Graph random_connected_graph(int n, double p, std::mt19937_64& rng);
/// `count` graphs with n uniform in [min_n, max_n] and p uniform in
/// [0.15, 0.85], from a fixed seed.
std::vector<Graph> random_corpus(int count, int min_n, int max_n, bool connected, std::uint64_t seed);

/// Parse "family:params", e.g. "Tnd:10,4", "Snpe:6", "Cn:10", "DomB:6,2".
/// Known families: Sn Pn Cn Kn En Dna Tnd Snpe DomA DomB.
Graph parse_family(std::string_view spec);

}  // namespace alphaspec
