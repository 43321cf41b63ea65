#include "alphaspec/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

#include "alphaspec/errors.hpp"

namespace alphaspec {

namespace {

using Mask = std::uint32_t;
using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

Mask cell_mask(const Cell& c) {
  Mask m = 0;
  for (int v : c) m |= Mask{1} << v;
  return m;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : n_(g.order()) {
    for (int v = 0; v < n_; ++v) adj_[v] = static_cast<Mask>(g.neighbor_mask(v));
  }

  CanonicalResult run() {
    // Initial cells ordered by degree.
    Partition p;
    std::vector<int> order(n_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return std::popcount(adj_[a]) < std::popcount(adj_[b]);
    });
    for (int v : order) {
      if (p.empty() || std::popcount(adj_[p.back().front()]) != std::popcount(adj_[v])) {
        p.push_back({});
      }
      p.back().push_back(v);
    }
    std::vector<int> fixed;
    search(std::move(p), fixed);

    CanonicalResult r;
    r.labelling.assign(n_, 0);
    for (int pos = 0; pos < n_; ++pos) r.labelling[best_order_[pos]] = pos;
    r.form = CanonicalForm(best_);
    return r;
  }

 private:
  // Split cells by neighbour counts into each splitter cell until equitable.
  // Fragments are ordered by count, which keeps the procedure label-free.
  void refine(Partition& p) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < p.size() && !changed; ++s) {
        const Mask splitter = cell_mask(p[s]);
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p[c].size() == 1) continue;
          auto count = [&](int v) { return std::popcount(adj_[v] & splitter); };
          const int first = count(p[c].front());
          if (std::all_of(p[c].begin(), p[c].end(), [&](int v) { return count(v) == first; })) {
            continue;
          }
          Cell cell = p[c];
          std::stable_sort(cell.begin(), cell.end(),
                           [&](int a, int b) { return count(a) < count(b); });
          Partition pieces;
          for (int v : cell) {
            if (pieces.empty() || count(pieces.back().front()) != count(v)) pieces.push_back({});
            pieces.back().push_back(v);
          }
          p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
          changed = true;
          break;
        }
      }
    }
  }

  std::string certificate(const std::vector<int>& order) const {
    // Same byte layout as graph6_encode of the relabelled graph.
    std::string out(1, static_cast<char>(n_ + 63));
    int bits = 0, acc = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        acc = (acc << 1) | static_cast<int>((adj_[order[i]] >> order[j]) & 1U);
        if (++bits == 6) {
          out.push_back(static_cast<char>(acc + 63));
          bits = acc = 0;
        }
      }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
  }

  bool twins(int a, int b) const {
    return (adj_[a] & ~(Mask{1} << b)) == (adj_[b] & ~(Mask{1} << a));
  }

  // Orbit representative of v under the stored automorphisms that fix
  // every vertex of `fixed`.
  std::vector<int> orbits(const std::vector<int>& fixed) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& aut : automorphisms_) {
      bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int v) { return aut[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(aut[v]);
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(Partition p, std::vector<int>& fixed) {
    refine(p);
    if (static_cast<int>(p.size()) == n_) {
      std::vector<int> order;
      order.reserve(n_);
      for (const auto& c : p) order.push_back(c.front());
      std::string cert = certificate(order);
      if (best_.empty() || cert > best_) {
        best_ = std::move(cert);
        best_order_ = std::move(order);
      } else if (cert == best_) {
        std::vector<int> aut(n_);
        for (int i = 0; i < n_; ++i) aut[order[i]] = best_order_[i];
        automorphisms_.push_back(std::move(aut));
      }
      return;
    }

    std::size_t target = p.size();
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p[c].size() > 1 && (target == p.size() || p[c].size() < p[target].size())) target = c;
    }

    Cell cell = p[target];
    std::sort(cell.begin(), cell.end());
    std::vector<int> explored;
    for (int v : cell) {
      bool redundant = false;
      for (int u : explored) {
        if (twins(u, v)) {
          redundant = true;
          break;
        }
      }
      if (!redundant && !explored.empty()) {
        auto orb = orbits(fixed);
        for (int u : explored) {
          if (orb[u] == orb[v]) {
            redundant = true;
            break;
          }
        }
      }
      if (redundant) continue;
      explored.push_back(v);

      Partition q;
      q.reserve(p.size() + 1);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (c != target) {
          q.push_back(p[c]);
          continue;
        }
        q.push_back({v});
        Cell rest;
        for (int w : p[c]) {
          if (w != v) rest.push_back(w);
        }
        q.push_back(std::move(rest));
      }
      fixed.push_back(v);
      search(std::move(q), fixed);
      fixed.pop_back();
    }
  }

  int n_;
  std::array<Mask, kCanonicalMaxOrder> adj_{};
  std::string best_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalResult canonical_labelling(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder) {
    throw CapabilityError("canonical form supports n <= " + std::to_string(kCanonicalMaxOrder) +
                          ", got n=" + std::to_string(g.order()));
  }
  return Canonicalizer(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labelling(g).form; }

Graph canonical_graph(const Graph& g) {
  auto r = canonical_labelling(g);
  return relabel(g, r.labelling);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = structural_profile(a).degree_sequence;
  auto db = structural_profile(b).degree_sequence;
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace alphaspec
