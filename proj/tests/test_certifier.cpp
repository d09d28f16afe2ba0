#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/certifier.hpp"
#include "artin/coxeter.hpp"
#include "test_support.hpp"

using namespace artin;
using artin::testing::make;
using artin::testing::set_of;

namespace {

  // Right-angled square s1..s4, a (3,3,3) triangle on s1, t1, t2, and an
  // XXXL diamond on t2, x1, x2, x3 (x1-x3 missing).
  DefiningGraph assembled() {
    return make({"s1", "s2", "s3", "s4", "t1", "t2", "x1", "x2", "x3"},
                {{"s1", "s2", 2}, {"s2", "s3", 2}, {"s3", "s4", 2}, {"s4", "s1", 2},
                 {"s1", "t1", 3}, {"t1", "t2", 3}, {"t2", "s1", 3},
                 {"t2", "x1", 6}, {"t2", "x2", 7}, {"t2", "x3", 8}, {"x1", "x2", 6},
                 {"x2", "x3", 9}});
  }

  DefiningGraph triangle(int ab, int bc, int ac) {
    return make({"a", "b", "c"}, {{"a", "b", ab}, {"b", "c", bc}, {"a", "c", ac}});
  }

}  // namespace

TEST_CASE("chunk_class examples") {
  auto sq = make({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2},
                                        {"d", "a", 2}});
  CHECK(chunk_class(sq, sq.all())->cls == ChunkClass::right_angled);
  auto t = triangle(3, 3, 3);
  CHECK(chunk_class(t, t.all())->cls == ChunkClass::large_free_of_infinity);
  auto e = make({"a", "b"}, {{"a", "b", 5}});
  CHECK(chunk_class(e, e.all())->cls == ChunkClass::dihedral);
  auto e2 = make({"a", "b"}, {{"a", "b", 2}});
  CHECK(chunk_class(e2, e2.all())->cls == ChunkClass::right_angled);
  auto c4 = make({"a", "b", "c", "d"}, {{"a", "b", 3}, {"b", "c", 4}, {"c", "d", 3},
                                        {"d", "a", 5}});
  CHECK(chunk_class(c4, c4.all())->cls == ChunkClass::large_triangle_free);
  auto g = assembled();
  CHECK(chunk_class(g, set_of(g, {"t2", "x1", "x2", "x3"}))->cls == ChunkClass::xxxl);
  auto b3 = triangle(4, 3, 2);
  CHECK(chunk_class(b3, b3.all()) == ChunkLabel{ChunkClass::spherical_B, 3});
  auto t237 = triangle(2, 3, 7);
  CHECK_FALSE(chunk_class(t237, t237.all()));
}

TEST_CASE("chunk_class table audit") {
  for (auto const& entry : finite_type_table()) {
    if (entry.type.parameter > 8) {
      continue;
    }
    auto const& g     = entry.graph;
    auto        label = chunk_class(g, g.all());
    auto const  n     = static_cast<std::size_t>(entry.type.parameter);
    INFO(entry.type.to_string());
    switch (entry.type.family) {
      case Family::A:
        CHECK(label == ChunkLabel{ChunkClass::spherical_A, n});
        break;
      case Family::B:
        CHECK(label == ChunkLabel{ChunkClass::spherical_B, n});
        break;
      case Family::D:
        if (n == 5) {
          CHECK_FALSE(label);
        } else {
          CHECK(label == ChunkLabel{ChunkClass::spherical_D, n});
        }
        break;
      default:
        CHECK_FALSE(label);
    }
  }
}

TEST_CASE("maximal_cliques") {
  auto g  = assembled();
  auto qs = maximal_cliques(g);
  CHECK(qs.size() == 4 + 1 + 2);
  CHECK(std::find(qs.begin(), qs.end(), set_of(g, {"s1", "t1", "t2"})) != qs.end());
  CHECK(std::find(qs.begin(), qs.end(), set_of(g, {"t2", "x1", "x2"})) != qs.end());

  // Against brute force on random graphs.
  std::mt19937 rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = artin::testing::random_graph(rng, 2 + trial % 8, {0, 0, 2, 3});
    std::vector<VertexSet> brute;
    auto n = r.size();
    for (std::uint64_t m = 1; m < (std::uint64_t(1) << n); ++m) {
      VertexSet s(m);
      bool clique = true;
      for (auto u : s.to_vector()) {
        clique = clique && (s - VertexSet::singleton(u)).is_subset_of(r.neighbours(u));
      }
      if (!clique) {
        continue;
      }
      bool maximal = true;
      for (auto v : (r.all() - s).to_vector()) {
        maximal = maximal && !s.is_subset_of(r.neighbours(v));
      }
      if (maximal) {
        brute.push_back(s);
      }
    }
    std::sort(brute.begin(), brute.end());
    CHECK(maximal_cliques(r) == brute);
  }
  CHECK_THROWS_AS(maximal_cliques(artin::testing::random_graph(rng, 17, {2})), Error);
}

TEST_CASE("clique_ribbon_certified") {
  auto e2 = make({"a", "b"}, {{"a", "b", 2}});
  auto s  = clique_ribbon_certified(e2);
  REQUIRE(s.size() == 1);
  CHECK(s[0].certified);
  auto b3 = triangle(2, 3, 4);
  CHECK(clique_ribbon_certified(b3)[0].certified);
  CHECK(clique_ribbon_certified(b3)[0].reason == "spherical");
  auto t237 = triangle(2, 3, 7);
  CHECK_FALSE(clique_ribbon_certified(t237)[0].certified);
}

TEST_CASE("strong_twist_verdict") {
  auto g = assembled();
  auto v = strong_twist_verdict(g);
  CHECK(v.level == Verdict::Level::strong_certified);
  CHECK(v.chunks.size() == 3);
  for (auto const& c : v.chunks) {
    CHECK(c.label);
  }

  auto t237 = triangle(2, 3, 7);
  auto bad  = strong_twist_verdict(t237);
  CHECK(bad.level == Verdict::Level::not_certified);
  CHECK(bad.reasons.front().find("says nothing") != std::string::npos);

  auto e3 = make({"a", "b"}, {{"a", "b", 3}});
  CHECK(strong_twist_verdict(e3).level == Verdict::Level::strong_certified);

  CHECK_THROWS_AS(strong_twist_verdict(make({"a"}, {})), Error);
  CHECK_THROWS_AS(strong_twist_verdict(make({"a", "b"}, {})), Error);
}

TEST_CASE("verdicts are invariant under relabelling") {
  std::mt19937 rng(8);
  std::vector<DefiningGraph> graphs{assembled(), triangle(2, 3, 7), triangle(2, 3, 4)};
  for (int i = 0; i < 30; ++i) {
    graphs.push_back(artin::testing::random_connected_graph(rng, 3 + i % 6, {2, 3, 4, 6}, 0.3));
  }
  for (auto const& g : graphs) {
    auto level = strong_twist_verdict(g).level;
    for (int k = 0; k < 10; ++k) {
      auto h = g.permuted(artin::testing::random_permutation(rng, g.size()));
      CHECK(strong_twist_verdict(h).level == level);
    }
  }
}

TEST_CASE("labels at least 6 are always certified") {
  std::mt19937 rng(12);
  for (int i = 0; i < 100; ++i) {
    auto g = artin::testing::random_connected_graph(rng, 2 + i % 8, {6, 7, 8, 12}, 0.4);
    CHECK(strong_twist_verdict(g).level == Verdict::Level::strong_certified);
  }
}
