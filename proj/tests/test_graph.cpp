#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/canonical.hpp"
#include "artin/decomposition.hpp"
#include "artin/graph.hpp"
#include "test_support.hpp"

using namespace artin;
using artin::testing::make;
using artin::testing::set_of;

TEST_CASE("parse_graph") {
  auto g = parse_graph(R"({"vertices":["a","b"],"edges":[["a","b",3]]})");
  CHECK(g.size() == 2);
  CHECK(g.label(0, 1) == 3);
  CHECK(g.label(1, 0) == 3);

  auto one = parse_graph(R"({"vertices":["a"],"edges":[]})");
  CHECK(one.size() == 1);
  CHECK(one.edge_count() == 0);

  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b",1]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","a"],"edges":[]})"), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","a",3]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","z",3]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b",3],["b","a",4]]})"),
                  ParseError);
  CHECK_THROWS_AS(parse_graph("{\"vertices\": [\"a\""), ParseError);
  CHECK_THROWS_AS(parse_graph(R"({"edges":[]})"), ParseError);
  // Repeating an edge with the same label is harmless.
  CHECK(parse_graph(R"({"vertices":["a","b"],"edges":[["a","b",3],["b","a",3]]})")
            .edge_count()
        == 1);
  // Round trip through the serialiser.
  auto p = make({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 4}});
  CHECK(parse_graph(serialize_graph(p)) == p);
}

TEST_CASE("canonical_form") {
  auto abc = make({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}});
  auto xyz = make({"x", "y", "z"}, {{"y", "z", 3}, {"x", "y", 3}});
  CHECK(certificate(abc) == certificate(xyz));
  auto p34 = make({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 4}});
  CHECK(certificate(abc) != certificate(p34));

  auto path = make({"a", "x", "y", "c"}, {{"a", "x", 3}, {"x", "y", 3}, {"y", "c", 3}});
  auto star = make({"a", "x", "y", "c"}, {{"a", "y", 3}, {"x", "y", 3}, {"y", "c", 3}});
  CHECK(certificate(path) != certificate(star));
  CHECK_FALSE(artin::testing::brute_force_isomorphism(path, star).has_value());

  std::mt19937 rng(1);
  CHECK_THROWS_AS(canonical_form(artin::testing::random_graph(rng, 17, {0, 3})),
                  Error);
  CHECK_NOTHROW(canonical_form(artin::testing::random_graph(rng, 17, {0, 3}),
                               {.max_vertices = 20}));
}

TEST_CASE("canonical_form is invariant under vertex permutations") {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    auto n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    auto g = artin::testing::random_graph(rng, n, {0, 0, 2, 3, 4});
    auto h = g.permuted(artin::testing::random_permutation(rng, n));
    REQUIRE(certificate(g) == certificate(h));
    auto f = is_isomorphic(g, h);
    REQUIRE(f.has_value());
    CHECK(is_isomorphism(g, h, *f));
  }
}

TEST_CASE("is_isomorphic agrees with brute force and certificates") {
  std::mt19937 rng(7);
  std::vector<DefiningGraph> corpus;
  for (int i = 0; i < 60; ++i) {
    corpus.push_back(artin::testing::random_graph(rng, 6, {0, 0, 3, 3, 4}));
  }
  // Force some isomorphic pairs.
  for (int i = 0; i < 20; ++i) {
    corpus.push_back(corpus[i].permuted(artin::testing::random_permutation(rng, 6)));
  }
  std::size_t positives = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      auto f      = is_isomorphic(corpus[i], corpus[j]);
      bool certeq = certificate(corpus[i]) == certificate(corpus[j]);
      REQUIRE(f.has_value() == certeq);
      auto brute = artin::testing::brute_force_isomorphism(corpus[i], corpus[j]);
      REQUIRE(brute.has_value() == certeq);
      if (f) {
        ++positives;
        CHECK(is_isomorphism(corpus[i], corpus[j], *f));
      }
    }
  }
  CHECK(positives >= corpus.size());
  auto g = corpus.front();
  CHECK_FALSE(is_isomorphic(g, g.induced(VertexSet::range(5))).has_value());
}

TEST_CASE("separating_vertices") {
  auto tri = make({"a", "b", "c", "d"},
                  {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}, {"c", "d", 2}});
  CHECK(separating_vertices(tri) == set_of(tri, {"c"}));
  auto k4 = make({"a", "b", "c", "d"}, {{"a", "b", 3}, {"a", "c", 3}, {"a", "d", 3},
                                        {"b", "c", 3}, {"b", "d", 3}, {"c", "d", 3}});
  CHECK(separating_vertices(k4).empty());
  auto path = make({"a", "b", "c", "d"}, {{"a", "b", 3}, {"b", "c", 3}, {"c", "d", 3}});
  CHECK(separating_vertices(path) == set_of(path, {"b", "c"}));
  auto two = make({"a", "b"}, {});
  CHECK_THROWS_AS(separating_vertices(two), Error);
}

TEST_CASE("big_chunks") {
  auto tri = make({"a", "b", "c", "d"},
                  {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}, {"c", "d", 2}});
  auto d = big_chunks(tri);
  REQUIRE(d.chunks.size() == 2);
  CHECK(d.chunks[0] == set_of(tri, {"a", "b", "c"}));
  CHECK(d.chunks[1] == set_of(tri, {"c", "d"}));
  CHECK(d.separating_vertices == set_of(tri, {"c"}));

  auto c4 = make({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}});
  CHECK(big_chunks(c4).chunks == std::vector<VertexSet>{c4.all()});

  auto e = make({"a", "b"}, {{"a", "b", 5}});
  CHECK(big_chunks(e).chunks == std::vector<VertexSet>{e.all()});
  CHECK(big_chunks(e).separating_vertices.empty());

  // Isolated vertices are degenerate chunks; components are handled apart.
  auto iso = make({"a", "b", "c"}, {{"a", "b", 3}});
  auto di  = big_chunks(iso);
  CHECK(di.chunks.size() == 2);
  CHECK(di.chunks == big_chunks_brute_force(iso).chunks);
}

TEST_CASE("big_chunks matches brute force; separating vertices lie in two chunks") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    auto g = artin::testing::random_connected_graph(rng, n, {2, 3, 4}, 0.25);
    auto fast  = big_chunks(g);
    auto brute = big_chunks_brute_force(g);
    REQUIRE(fast.chunks == brute.chunks);
    REQUIRE(fast.separating_vertices == brute.separating_vertices);
    for (auto v : fast.separating_vertices.to_vector()) {
      auto count = std::count_if(fast.chunks.begin(), fast.chunks.end(),
                                 [&](VertexSet c) { return c.contains(v); });
      CHECK(count >= 2);
    }
    VertexSet all;
    for (auto c : fast.chunks) {
      all |= c;
    }
    CHECK(all == g.all());
  }
}

TEST_CASE("odd_components") {
  auto e3 = make({"a", "b"}, {{"a", "b", 3}});
  CHECK(odd_components(e3).size() == 1);
  auto e4 = make({"a", "b"}, {{"a", "b", 4}});
  CHECK(odd_components(e4).size() == 2);
  auto p = make({"a", "b", "c", "d"}, {{"a", "b", 3}, {"b", "c", 4}, {"c", "d", 5}});
  auto oc = odd_components(p);
  REQUIRE(oc.size() == 2);
  CHECK(oc[0] == set_of(p, {"a", "b"}));
  CHECK(oc[1] == set_of(p, {"c", "d"}));
}

TEST_CASE("is_one_ended") {
  CHECK_FALSE(is_one_ended(make({"a"}, {})));
  CHECK(is_one_ended(make({"a", "b"}, {{"a", "b", 3}})));
  CHECK_FALSE(is_one_ended(make({"a", "b"}, {})));
}
