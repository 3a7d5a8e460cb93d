#include <random>

#include "doctest.h"

#include "cantor/errors.hpp"
#include "cantor/graph.hpp"
#include "fixtures.hpp"

using namespace cantor;
using namespace cantor::testing;

TEST_CASE("make_graph builds, collapses duplicates, rejects bad input") {
  const Graph g = c3();
  CHECK(g.order() == 3);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}});

  const Graph one = edgeless(1);
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);

  const Graph dup(2, {{0, 1}, {0, 1}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.edges() == std::vector<Edge>{{0, 1}});

  CHECK_THROWS_AS(Graph(0, std::span<const Edge>{}), InvalidArgument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(2, {{5, 0}}), InvalidArgument);
}

TEST_CASE("has_edge, out_set and loops") {
  const Graph g = c3();
  CHECK(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(1, 0));
  CHECK(single_loop().has_edge(0, 0));
  CHECK_THROWS_AS(g.has_edge(0, 3), InvalidArgument);

  CHECK(g.out_set(0) == VertexSet(3, {1}));
  CHECK(edgeless(3).out_set(2).empty());
  CHECK(complete_with_loops(2).out_set(1) == VertexSet(2, {0, 1}));
  CHECK_THROWS_AS(g.out_set(3), InvalidArgument);

  CHECK(g.loops().empty());
  CHECK(Graph(2, {{0, 0}, {0, 1}}).loops() == VertexSet(2, {0}));
  CHECK(complete_with_loops(3).loops() == VertexSet::full(3));
}

TEST_CASE("vertex set algebra examples") {
  CHECK((VertexSet(3, {0, 1}) - VertexSet(3, {1})) == VertexSet(3, {0}));
  CHECK((VertexSet(3, {0, 1}) ^ VertexSet(3, {1, 2})) == VertexSet(3, {0, 2}));
  CHECK(VertexSet(3, {0}).is_subset_of(VertexSet(3, {0, 1})));
  CHECK(VertexSet(3, {0, 2}).complement() == VertexSet(3, {1}));
  CHECK(VertexSet(70, {69, 3, 64}).to_vector() == std::vector<VertexId>{3, 64, 69});
  CHECK(VertexSet::full(70).size() == 70);
  CHECK(VertexSet::full(70).complement().empty());

  CHECK_THROWS_AS(VertexSet(3) | VertexSet(4), InvalidArgument);
  CHECK_THROWS_AS((void)(VertexSet(3) == VertexSet(4)), InvalidArgument);
  CHECK_THROWS_AS(VertexSet(3).insert(3), InvalidArgument);
}

TEST_CASE("vertex set Boolean-algebra laws on random operands") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t width = 1 + rng() % 150;
    auto random_set = [&] {
      VertexSet s(width);
      for (VertexId v = 0; v < width; ++v) {
        if (rng() & 1U) s.insert(v);
      }
      return s;
    };
    const VertexSet a = random_set();
    const VertexSet b = random_set();
    const VertexSet c = random_set();
    CHECK((a | a) == a);
    CHECK((a & a) == a);
    CHECK((a | b).complement() == (a.complement() & b.complement()));
    CHECK((a & b).complement() == (a.complement() | b.complement()));
    CHECK((a ^ b) == ((a - b) | (b - a)));
    CHECK((a & (b | c)) == ((a & b) | (a & c)));
    CHECK((a & b).is_subset_of(a));
    CHECK(a.is_subset_of(a | b));
    CHECK((a - b) == (a & b.complement()));
    CHECK(a.intersects(b) == !(a & b).empty());
    CHECK((a.complement().size() + a.size()) == width);
    const auto ids = a.to_vector();
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    CHECK(VertexSet::from_ids(width, ids) == a);
  }
}

TEST_CASE("loops agree with out_set and edges round-trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 20, 0.3);
    for (VertexId v = 0; v < g.order(); ++v) {
      CHECK(g.loops().contains(v) == g.out_set(v).contains(v));
    }
    const auto edges = g.edges();
    CHECK(Graph(g.order(), edges) == g);
    CHECK(edges.size() == g.edge_count());
    CHECK(g.transpose().transpose() == g);
  }
}
