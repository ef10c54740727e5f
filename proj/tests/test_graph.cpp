#include <doctest.h>

#include <random>

#include "dissoc/graph.hpp"

using namespace dissoc;

namespace {

void check_invariants(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    CHECK_FALSE(g.neighbors(v).contains(v));
    CHECK(g.neighbors(v).subset_of(g.vertices()));
    for (Vertex u : g.neighbors(v)) CHECK(g.has_edge(u, v));
  }
}

}  // namespace

TEST_CASE("from_edges builds the listed edges") {
  const Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(triangle.edge_count() == 3);
  CHECK(triangle == Graph::complete(3));
  CHECK(triangle == Graph::cycle(3));

  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4 == Graph::path(4));

  const Graph k1 = Graph::from_edges(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);

  CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
  check_invariants(triangle);
}

TEST_CASE("from_edges rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(65, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_rows({VertexSet{0b10}, VertexSet{0}}), std::invalid_argument);
}

TEST_CASE("path and cycle labeling") {
  CHECK(Graph::path(2).edge_count() == 1);
  const Graph c6 = Graph::cycle(6);
  CHECK(c6.has_edge(5, 0));
  for (Vertex v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);
  CHECK(Graph::from_edges(64, {}).order() == 64);
  check_invariants(Graph::cycle(64));
}

TEST_CASE("neighborhoods and degree") {
  const Graph c3 = Graph::cycle(3);
  CHECK(c3.closed_neighborhood(0) == VertexSet::of({0, 1, 2}));
  CHECK(c3.neighbors(0) == VertexSet::of({1, 2}));
  CHECK(Graph::path(4).degree(0) == 1);
  CHECK(Graph::star(5).degree(0) == 5);
  CHECK_THROWS_AS(c3.neighbors(3), std::out_of_range);
}

TEST_CASE("delete_vertices relabels compactly") {
  const Deletion d = delete_vertices(Graph::cycle(6), VertexSet::single(2));
  CHECK(d.graph.order() == 5);
  CHECK(is_tree(d.graph));
  CHECK(leaves(d.graph).size() == 2);
  CHECK(d.new_to_old == std::vector<Vertex>{0, 1, 3, 4, 5});
  CHECK(d.map(2) == -1);
  CHECK(d.map(3) == 2);

  const Graph p4 = Graph::path(4);
  CHECK(delete_vertices(p4, {}).graph == p4);

  const Deletion split = delete_vertices(p4, VertexSet::single(1));
  CHECK(classify(split.graph).components == 2);
  CHECK(split.graph.edge_count() == 1);

  CHECK_THROWS_AS(delete_vertices(p4, p4.vertices()), std::invalid_argument);
}

TEST_CASE("delete_vertices preserves induced edges on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 12);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) edges.emplace_back(a, b);
    const Graph g = Graph::from_edges(n, edges);
    VertexSet removed{rng() & VertexSet::prefix(n).bits()};
    if (removed == g.vertices()) removed.erase(0);
    const Deletion d = delete_vertices(g, removed);
    CHECK(d.graph.order() == n - removed.size());
    check_invariants(d.graph);
    for (Vertex i = 0; i < d.graph.order(); ++i)
      for (Vertex j = 0; j < d.graph.order(); ++j)
        if (i != j) CHECK(d.graph.has_edge(i, j) == g.has_edge(d.new_to_old[i], d.new_to_old[j]));
  }
}

TEST_CASE("disjoint_union offsets the second graph") {
  const Graph two = disjoint_union(Graph::empty(1), Graph::empty(1));
  CHECK(two.order() == 2);
  CHECK(two.edge_count() == 0);

  const Graph u = disjoint_union(Graph::cycle(3), Graph::path(2));
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(u.has_edge(3, 4));
  CHECK(component_count(u) == 2);

  CHECK(disjoint_union(Graph::path(3), Graph::path(3)).order() == 6);
  CHECK_THROWS_AS(disjoint_union(Graph::empty(40), Graph::empty(25)), std::invalid_argument);
}

TEST_CASE("classify and structural queries") {
  const Graph c6 = Graph::cycle(6);
  CHECK(classify(c6).kind == GraphClass::Unicyclic);
  CHECK(cycle_vertices(c6) == c6.vertices());

  const Graph p5 = Graph::path(5);
  CHECK(classify(p5).kind == GraphClass::Tree);
  CHECK(is_caterpillar(p5));
  CHECK(leaves(p5) == VertexSet::of({0, 4}));

  const Graph u31 = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
  CHECK(is_unicyclic(u31));
  CHECK(leaves(u31) == VertexSet::single(3));
  CHECK(support_vertices(u31) == VertexSet::single(0));
  CHECK(cycle_vertices(u31) == VertexSet::of({0, 1, 2}));
  CHECK(cycle_sequence(u31) == std::vector<Vertex>{0, 1, 2});

  CHECK_THROWS_AS(cycle_vertices(p5), std::invalid_argument);
  CHECK(classify(Graph::complete(4)).kind == GraphClass::Other);
  CHECK(classify(Graph::empty(3)).components == 3);

  // Spider with three length-2 legs: spine is a claw.
  const Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK_FALSE(is_caterpillar(spider));
  CHECK(is_caterpillar(Graph::star(4)));
}

TEST_CASE("classify on every path and cycle") {
  for (int n = 1; n <= 64; ++n) CHECK(classify(Graph::path(n)).kind == GraphClass::Tree);
  for (int n = 3; n <= 64; ++n) CHECK(classify(Graph::cycle(n)).kind == GraphClass::Unicyclic);
}

TEST_CASE("surgery helpers return new graphs") {
  const Graph p3 = Graph::path(3);
  const Graph c3 = p3.with_edge(0, 2);
  CHECK(c3 == Graph::cycle(3));
  CHECK(p3.edge_count() == 2);
  CHECK(c3.without_edge(0, 2) == p3);
  CHECK(p3.with_isolated(2).order() == 5);
  const std::vector<Vertex> perm{2, 0, 1};
  CHECK(p3.relabeled(perm).has_edge(2, 0));
  CHECK_THROWS(p3.relabeled(std::vector<Vertex>{0, 0, 1}));
}
