#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "alphaspec/graph.hpp"

namespace alphaspec {

enum class GraphClass { Trees, Unicyclic, Connected, All, ConnectedNonBipartite };

const char* to_string(GraphClass c);
/// Accepts "trees", "unicyclic", "connected", "all", "connected-nonbipartite".
GraphClass parse_graph_class(std::string_view name);

/// Largest supported n per class: trees 12, unicyclic 10, others 8.
int class_max_order(GraphClass c);

struct EnumerationQuery {
  int n = 1;
  GraphClass graph_class = GraphClass::Trees;
  /// Safety limit on the number of emitted graphs.
  std::size_t cap = 1'000'000;
};

/// One representative per isomorphism class, in a deterministic order.
/// Throws CapabilityError when n exceeds the class cap or the count exceeds
/// query.cap.
std::vector<Graph> enumerate(const EnumerationQuery& query);

/// Chunked view over an enumeration, for fanning work out to workers.
class GraphStream {
 public:
  explicit GraphStream(const EnumerationQuery& query) : graphs_(enumerate(query)) {}

  bool done() const noexcept { return next_ >= graphs_.size(); }
  std::size_t total() const noexcept { return graphs_.size(); }

  /// Next up to max_size graphs; empty once exhausted.
  std::span<const Graph> next_chunk(std::size_t max_size);

 private:
  std::vector<Graph> graphs_;
  std::size_t next_ = 0;
};

inline constexpr int kLabeledMaxOrder = 8;

/// Number of labelled graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_count(int n);
/// The labelled graph whose graph6 adjacency bits, read as a binary number,
/// equal mask.
Graph labeled_graph(int n, std::uint64_t mask);

/// Visit every labelled graph on n vertices, in order of the graph6 bit
/// pattern read as a binary number.
void for_each_labeled(int n, const std::function<void(const Graph&)>& visit);

/// All labelled graphs on n vertices passing `keep` (all when empty).
std::vector<Graph> enumerate_labeled(int n, const std::function<bool(const Graph&)>& keep = {});

/// Canonical level sequences (root at level 0) of all rooted trees on n
/// vertices, in the order produced by successive-sequence generation.
std::vector<std::vector<int>> rooted_level_sequences(int n);

/// Tree whose preorder depth sequence is `levels`; vertex i is the i-th entry.
Graph tree_from_level_sequence(std::span<const int> levels);

}  // namespace alphaspec
