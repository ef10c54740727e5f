#include <doctest.h>

#include "dissoc/dissociation.hpp"
#include "dissoc/families.hpp"
#include "dissoc/geniso.hpp"
#include "oracles.hpp"

using namespace dissoc;

TEST_CASE("spider_T shapes") {
  CHECK(spider_T(1, 1) == Graph::path(3));
  CHECK(spider_T(2, 1) == Graph::path(4).relabeled(std::vector<Vertex>{2, 1, 0, 3}));
  CHECK(tree_code(spider_T(2, 1)) == tree_code(Graph::path(4)));
  CHECK(spider_T(4, 0) == Graph::star(4));
  CHECK(spider_T(0, 0).order() == 1);
  for (int n = 4; n <= 20; n += 2) CHECK(spider_T(n / 2, (n - 2) / 2).order() == n);
  CHECK_THROWS_AS(spider_T(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(spider_T(2, -1), std::invalid_argument);
}

TEST_CASE("U_pq shapes") {
  CHECK(U_pq(0, 0) == Graph::cycle(3));
  CHECK(unicyclic_code(U_pq(1, 0)) == unicyclic_code(U_rt(3, 1)));
  const Graph u32 = U_pq(3, 2);
  CHECK(classify(u32).kind == GraphClass::Unicyclic);
  CHECK(u32.order() == 8);
  CHECK_THROWS_AS(U_pq(0, 1), std::invalid_argument);
}

TEST_CASE("U_rt shapes") {
  CHECK(U_rt(6, 0, {}) == Graph::cycle(6));
  const Graph u44 = U_rt(4, 4, {0, 1, 2, 3});
  CHECK(u44.order() == 8);
  CHECK(leaves(u44).size() == 4);
  CHECK(U_rt(5, 2) == U_rt(5, 2, {0, 1}));
  CHECK_THROWS_AS(U_rt(4, 2, {0}), std::invalid_argument);
  CHECK_THROWS_AS(U_rt(4, 1, {4}), std::invalid_argument);
  CHECK_THROWS_AS(U_rt(2, 0, {}), std::invalid_argument);
}

TEST_CASE("U_rt classes against brute-force pattern dedupe") {
  CHECK(enumerate_U_rt_class(4, 2).size() == 2);
  for (int r = 3; r <= 7; ++r) {
    for (int t = 0; t <= r && r + t <= kBruteforceIsoCap; ++t) {
      std::vector<Graph> all;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask)
        if (VertexSet{mask}.size() == t) all.push_back(U_rt(r, t, VertexSet{mask}.to_vector()));
      CHECK(enumerate_U_rt_class(r, t).size() == oracle::dedupe_by_isomorphism(all).size());
    }
  }
}

TEST_CASE("extremal_unicyclic") {
  CHECK(extremal_unicyclic(3) == std::vector<Graph>{Graph::cycle(3)});
  CHECK(extremal_unicyclic(6).size() == 3);
  CHECK(extremal_unicyclic(8).size() == 2);
  CHECK(extremal_unicyclic(7) == std::vector<Graph>{U_pq(2, 2)});
  CHECK_THROWS_AS(extremal_unicyclic(2), std::invalid_argument);
}

TEST_CASE("extremal_trees") {
  CHECK(extremal_trees(4) == std::vector<Graph>{spider_T(2, 1)});
  CHECK(extremal_trees(5).size() == 2);
  const auto n3 = extremal_trees(3);
  REQUIRE(n3.size() == 1);
  CHECK(is_isomorphic_bruteforce(n3.front(), Graph::path(3)));
  CHECK(is_isomorphic_bruteforce(spider_T(1, 1), spider_T(2, 0)));
  CHECK_THROWS_AS(extremal_trees(2), std::invalid_argument);
}

TEST_CASE("extremal_caterpillars") {
  const auto cats = extremal_caterpillars();
  CHECK(cats.size() == 6);
  for (const auto& g : cats) {
    CHECK(is_caterpillar(g));
    CHECK(phi(g) == static_cast<Count>((g.order() + 1) / 2 + 1));
  }
}

TEST_CASE("family invariants") {
  for (int p = 0; p <= 6; ++p) {
    for (int q = 0; q <= p; ++q) {
      CHECK(classify(spider_T(p, q)).kind == GraphClass::Tree);
      CHECK(spider_T(p, q).order() == p + q + 1);
      CHECK(classify(U_pq(p, q)).kind == GraphClass::Unicyclic);
      CHECK(U_pq(p, q).order() == p + q + 3);
    }
  }
  for (int r = 3; r <= 8; ++r)
    for (int t = 0; t <= r; ++t) {
      CHECK(classify(U_rt(r, t)).kind == GraphClass::Unicyclic);
      CHECK(U_rt(r, t).order() == r + t);
    }
}

TEST_CASE("extremal family equality direction") {
  for (int n = 3; n <= 25; n += 2) CHECK(phi(U_pq((n - 3) / 2, (n - 3) / 2)) == static_cast<Count>(n / 2 + 2));
  for (int n = 4; n <= 24; n += 2) CHECK(phi(U_pq((n - 2) / 2, (n - 4) / 2)) == static_cast<Count>(n / 2 + 2));
  for (int n = 3; n <= 20; ++n)
    for (const auto& t : extremal_trees(n)) CHECK(phi(t) == static_cast<Count>((n + 1) / 2 + 1));
}

TEST_CASE("family spec text form") {
  CHECK(FamilySpec::parse("T(3,1)").build() == spider_T(3, 1));
  CHECK(FamilySpec::parse(" U( 2 , 2 ) ").build() == U_pq(2, 2));
  CHECK(FamilySpec::parse("Urt(5,2)").build() == U_rt(5, 2));
  CHECK(FamilySpec::parse("Urt(4,2,[0,2])").build() == U_rt(4, 2, {0, 2}));
  CHECK(FamilySpec::parse("Urt(6,0,[])").build() == Graph::cycle(6));
  CHECK(FamilySpec::parse("Urt(4,2,[0,2])").to_string() == "Urt(4,2,[0,2])");
  CHECK(FamilySpec::parse("T(2,1)").to_string() == "T(2,1)");
  for (const char* bad : {"", "T(1)", "X(1,1)", "U(1,2)", "Urt(4,2,[0])", "T(1,1)x", "Urt(2,0)"})
    CHECK_THROWS_AS(FamilySpec::parse(bad), std::invalid_argument);
}
