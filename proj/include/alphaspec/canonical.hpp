#pragma once

#include <compare>
#include <string>
#include <vector>

#include "alphaspec/graph.hpp"

namespace alphaspec {

inline constexpr int kCanonicalMaxOrder = 12;

/// Isomorphism-invariant certificate: the graph6 string of the graph under
/// its canonical labelling. Two graphs of order <= kCanonicalMaxOrder share a
/// form exactly when they are isomorphic.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

struct CanonicalResult {
  CanonicalForm form;
  /// labelling[v] is the canonical label of vertex v.
  std::vector<Vertex> labelling;
};

/// Individualisation-refinement search for the lexicographically largest
/// adjacency certificate, pruned by twins and discovered automorphisms.
/// Throws CapabilityError above kCanonicalMaxOrder.
CanonicalResult canonical_labelling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace alphaspec

template <>
struct std::hash<alphaspec::CanonicalForm> {
  std::size_t operator()(const alphaspec::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.bytes());
  }
};
