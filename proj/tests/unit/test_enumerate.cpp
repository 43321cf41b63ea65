#include "doctest.h"

#include <set>

#include "alphaspec/canonical.hpp"
#include "alphaspec/enumerate.hpp"
#include "alphaspec/errors.hpp"
#include "alphaspec/graph6.hpp"
#include "oracles.hpp"

using namespace alphaspec;

namespace {

std::size_t count(int n, GraphClass c) { return enumerate({n, c}).size(); }

void check_distinct_and_in_class(int n, GraphClass c) {
  std::set<CanonicalForm> forms;
  for (const Graph& g : enumerate({n, c})) {
    REQUIRE(g.order() == n);
    const auto p = structural_profile(g);
    switch (c) {
      case GraphClass::Trees: REQUIRE(p.kind == GraphKind::Tree); break;
      case GraphClass::Unicyclic: REQUIRE(p.kind == GraphKind::Unicyclic); break;
      case GraphClass::Connected: REQUIRE(p.connected); break;
      case GraphClass::ConnectedNonBipartite: REQUIRE((p.connected && !p.bipartite)); break;
      case GraphClass::All: break;
    }
    forms.insert(canonical_form(g));
  }
  CHECK(forms.size() == count(n, c));
}

}  // namespace

TEST_CASE("tree counts match Prüfer decoding with AHU codes") {
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(count(n, GraphClass::Trees) == oracle::prufer_tree_classes(n));
  }
}

TEST_CASE("tree counts match Otter's formula up to the cap") {
  const auto t = oracle::otter_tree_counts(12);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(count(n, GraphClass::Trees) == t[n]);
  }
  CHECK(t[10] == 106);
}

TEST_CASE("unicyclic counts match the dihedral cycle-index series and brute force") {
  const auto u = oracle::unicyclic_counts(10);
  for (int n = 3; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(count(n, GraphClass::Unicyclic) == u[n]);
  }
  for (int n = 3; n <= 6; ++n) {
    const auto brute = oracle::brute_classes(
        n, [n](std::uint32_t m) { return oracle::mask_edges(m) == n && oracle::mask_connected(n, m); });
    CHECK(count(n, GraphClass::Unicyclic) == brute);
  }
}

TEST_CASE("connected and all-graph counts match brute force, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(count(n, GraphClass::All) == oracle::brute_classes(n, [](std::uint32_t) { return true; }));
    CHECK(count(n, GraphClass::Connected) ==
          oracle::brute_classes(n, [n](std::uint32_t m) { return oracle::mask_connected(n, m); }));
  }
}

TEST_CASE("larger counts against the published sequences") {
  CHECK(count(7, GraphClass::All) == 1044);
  CHECK(count(8, GraphClass::All) == 12346);
  CHECK(count(7, GraphClass::Connected) == 853);
  CHECK(count(8, GraphClass::Connected) == 11117);
  CHECK(count(7, GraphClass::ConnectedNonBipartite) == 809);
}

TEST_CASE("enumerated graphs are pairwise non-isomorphic and in class") {
  check_distinct_and_in_class(10, GraphClass::Trees);
  check_distinct_and_in_class(8, GraphClass::Unicyclic);
  check_distinct_and_in_class(6, GraphClass::Connected);
  check_distinct_and_in_class(6, GraphClass::All);
  check_distinct_and_in_class(6, GraphClass::ConnectedNonBipartite);
}

TEST_CASE("enumeration is deterministic and capped") {
  const auto a = enumerate({7, GraphClass::Connected});
  const auto b = enumerate({7, GraphClass::Connected});
  CHECK(a == b);
  CHECK_THROWS_AS(enumerate({13, GraphClass::Trees}), CapabilityError);
  CHECK_THROWS_AS(enumerate({9, GraphClass::All}), CapabilityError);
  CHECK_THROWS_AS(enumerate({8, GraphClass::All, 100}), CapabilityError);
}

TEST_CASE("labelled graphs follow the graph6 bit order") {
  CHECK(labeled_count(4) == 64);
  CHECK(graph6_encode(labeled_graph(3, 0b100)) == "B_");
  CHECK(labeled_graph(3, 0b100).edges() == std::vector<Edge>{{0, 1}});
  CHECK(labeled_graph(3, 0b001).edges() == std::vector<Edge>{{1, 2}});
  std::size_t visited = 0;
  for_each_labeled(4, [&](const Graph&) { ++visited; });
  CHECK(visited == 64);
  CHECK(enumerate_labeled(4, [](const Graph& g) { return is_connected(g); }).size() == 38);
}

TEST_CASE("rooted level sequences count rooted trees") {
  const std::size_t expected[] = {1, 1, 2, 4, 9, 20, 48, 115, 286, 719};
  for (int n = 1; n <= 10; ++n) CHECK(rooted_level_sequences(n).size() == expected[n - 1]);
  const std::vector<int> levels{0, 1, 2, 1};
  const Graph t = tree_from_level_sequence(levels);
  CHECK(t.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
}

TEST_CASE("graph streams hand out the whole enumeration in chunks") {
  GraphStream s({8, GraphClass::Trees});
  std::size_t seen = 0;
  while (!s.done()) seen += s.next_chunk(5).size();
  CHECK(seen == 23);
  CHECK(s.next_chunk(5).empty());
}
