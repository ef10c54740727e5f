#include <doctest.h>

#include <random>

#include "dissoc/graph6.hpp"

using namespace dissoc;

TEST_CASE("graph6 hand-encoded values") {
  CHECK(graph6_encode(Graph::empty(1)) == "@");
  // n=3 -> 'B'; upper triangle bits (0,1)(0,2)(1,2)
  CHECK(graph6_encode(Graph::path(3)) == "Bg");   // 101000 + 63
  CHECK(graph6_encode(Graph::cycle(3)) == "Bw");  // 111000 + 63
  CHECK(graph6_encode(Graph::empty(2)) == "A?");
}

TEST_CASE("graph6 round trip") {
  const Graph c6 = Graph::cycle(6);
  CHECK(graph6_decode(graph6_encode(c6)) == c6);
  CHECK(graph6_decode(">>graph6<<Bw\n") == Graph::cycle(3));
}

TEST_CASE("graph6 is label sensitive") {
  const Graph a = Graph::cycle(4);
  const Graph b = Graph::from_edges(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}});
  CHECK(graph6_encode(a) != graph6_encode(b));
}

TEST_CASE("graph6 size field forms") {
  CHECK(graph6_encode(Graph::empty(62))[0] == static_cast<char>(62 + 63));
  CHECK(graph6_encode(Graph::empty(63)).substr(0, 4) == "~??~");
  CHECK(graph6_encode(Graph::empty(64)).substr(0, 4) == "~?@?");
  CHECK(graph6_decode(graph6_encode(Graph::cycle(63))) == Graph::cycle(63));
}

TEST_CASE("graph6 round trip on random graphs up to order 64") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng() % 4 == 0) edges.emplace_back(a, b);
    const Graph g = Graph::from_edges(n, edges);
    const std::string text = graph6_encode(g);
    CHECK(graph6_decode(text) == g);
    CHECK(graph6_encode(graph6_decode(text)) == text);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);     // missing edge byte
  CHECK_THROWS_AS(graph6_decode("Bww"), std::invalid_argument);   // extra byte
  CHECK_THROWS_AS(graph6_decode("Bh"), std::invalid_argument);    // padding bit set
  CHECK_THROWS_AS(graph6_decode("?"), std::invalid_argument);     // order 0
  CHECK_THROWS_AS(graph6_decode("B "), std::invalid_argument);    // byte below 63
  CHECK_THROWS_AS(graph6_decode("~?AA"), std::invalid_argument);  // order 130
  CHECK_THROWS_AS(graph6_decode("~??B"), std::invalid_argument);  // non-canonical size 3
}
