#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "artin/coxeter.hpp"
#include "test_support.hpp"

using namespace artin;
using artin::testing::CoxeterGroupOracle;
using artin::testing::make;
using artin::testing::set_of;

namespace {

  DefiningGraph triangle(int ab, int bc, int ac) {
    std::vector<std::tuple<std::string, std::string, int>> es;
    if (ab) es.emplace_back("a", "b", ab);
    if (bc) es.emplace_back("b", "c", bc);
    if (ac) es.emplace_back("a", "c", ac);
    return make({"a", "b", "c"}, es);
  }

}  // namespace

TEST_CASE("gram_matrix") {
  auto g3 = make({"a", "b"}, {{"a", "b", 3}});
  auto single = gram_matrix(g3, set_of(g3, {"a"}));
  CHECK(single.size() == 1);
  CHECK(single.at(0, 0) == 1.0);

  auto g2 = make({"a", "b"}, {{"a", "b", 2}});
  auto m2 = gram_matrix(g2, g2.all());
  CHECK(m2.at(0, 1) == doctest::Approx(0.0));
  CHECK(m2.at(1, 0) == doctest::Approx(0.0));
  CHECK(m2.at(1, 1) == 1.0);

  auto m3 = gram_matrix(g3, g3.all());
  CHECK(m3.at(0, 1) == doctest::Approx(-0.5));
  CHECK(m3.at(1, 0) == doctest::Approx(-0.5));

  auto ginf = make({"a", "b"}, {});
  CHECK(gram_matrix(ginf, ginf.all()).at(0, 1) == -1.0);
}

TEST_CASE("is_spherical") {
  for (int m = 2; m <= 40; ++m) {
    auto g = make({"a", "b"}, {{"a", "b", m}});
    CHECK(is_spherical(g, g.all()));
  }
  CHECK_FALSE(is_spherical(triangle(3, 3, 3), triangle(3, 3, 3).all()));
  CHECK_FALSE(is_spherical(triangle(2, 4, 4), triangle(2, 4, 4).all()));
  CHECK_FALSE(is_spherical(triangle(2, 3, 6), triangle(2, 3, 6).all()));
  CHECK_FALSE(is_spherical(triangle(2, 3, 7), triangle(2, 3, 7).all()));
  CHECK(is_spherical(triangle(3, 3, 2), triangle(3, 3, 2).all()));
  CHECK(is_spherical(triangle(3, 5, 2), triangle(3, 5, 2).all()));
  auto g = make({"a", "b"}, {});
  CHECK_FALSE(is_spherical(g, g.all()));
  CHECK(is_spherical(g, VertexSet()));
}

TEST_CASE("exact minor test resolves affine determinants") {
  for (auto labels : {std::array{3, 3, 3}, std::array{2, 4, 4}, std::array{2, 3, 6}}) {
    auto g    = triangle(labels[0], labels[1], labels[2]);
    auto gram = gram_matrix(g, g.all());
    CHECK(std::abs(gram.leading_minor(3)) < 1e-12);
    CHECK(gram.leading_minor_is_zero(3) == std::optional<bool>(true));
    CHECK(gram.leading_minor_is_zero(2) == std::optional<bool>(false));
  }
  // Affine B3 (labels 4,3,4 along a path, other pairs commuting).
  auto b = make({"a", "b", "c", "d"}, {{"a", "b", 4}, {"b", "c", 3}, {"c", "d", 4},
                                       {"a", "c", 2}, {"a", "d", 2}, {"b", "d", 2}});
  CHECK(gram_matrix(b, b.all()).leading_minor_is_zero(4) == std::optional<bool>(true));
  CHECK_FALSE(is_spherical(b, b.all()));
  auto h = make({"a", "b", "c", "d"}, {{"a", "b", 5}, {"b", "c", 3}, {"c", "d", 3},
                                       {"a", "c", 2}, {"a", "d", 2}, {"b", "d", 2}});
  CHECK(gram_matrix(h, h.all()).leading_minor_is_zero(4) == std::optional<bool>(false));
  CHECK(is_spherical(h, h.all()));
}

TEST_CASE("is_spherical agrees with enumeration of the Coxeter group, rank 3") {
  std::vector<int> labels{0, 2, 3, 4, 5, 6, 7};
  for (int ab : labels) {
    for (int bc : labels) {
      for (int ac : labels) {
        auto               g = triangle(ab, bc, ac);
        CoxeterGroupOracle oracle(g, {0, 1, 2}, 5000);
        INFO("labels " << ab << "," << bc << "," << ac);
        CHECK(is_spherical(g, g.all()) == oracle.finite());
      }
    }
  }
}

TEST_CASE("indecomposable_factors") {
  auto sq = make({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2},
                                        {"a", "c", 2}, {"b", "d", 2}});
  CHECK(indecomposable_factors(sq, sq.all()).size() == 4);
  auto e = make({"a", "b"}, {{"a", "b", 3}});
  CHECK(indecomposable_factors(e, e.all()).size() == 1);
  auto t = triangle(3, 2, 2);
  auto f = indecomposable_factors(t, t.all());
  REQUIRE(f.size() == 2);
  CHECK(f[0] == set_of(t, {"a", "b"}));
  CHECK(f[1] == set_of(t, {"c"}));
  // Non-adjacent vertices are in the same factor (infinity is not 2).
  CHECK(indecomposable_factors(make({"a", "b"}, {}), VertexSet::range(2)).size() == 1);
}

TEST_CASE("finite_type") {
  auto a3 = triangle(3, 3, 2);
  CHECK(finite_type(a3, a3.all()) == FiniteType{Family::A, 3});
  auto b3 = triangle(3, 4, 2);
  CHECK(finite_type(b3, b3.all()) == FiniteType{Family::B, 3});
  auto h3 = triangle(5, 3, 2);
  CHECK(finite_type(h3, h3.all()) == FiniteType{Family::H3, 3});
  auto e7 = make({"a", "b"}, {{"a", "b", 7}});
  CHECK(finite_type(e7, e7.all()) == FiniteType{Family::I2, 7});
  CHECK(finite_type(e7, e7.all())->to_string() == "I2(7)");
  auto bad = triangle(3, 3, 3);
  CHECK_FALSE(finite_type(bad, bad.all()).has_value());
  // The path a-b-c with m_ac = infinity is not A3 in the defining-graph
  // convention.
  auto path = triangle(3, 3, 0);
  CHECK_FALSE(finite_type(path, path.all()).has_value());
  CHECK(finite_type(a3, set_of(a3, {"a"})) == FiniteType{Family::A, 1});
}

TEST_CASE("finite type table entries are spherical with the right group orders") {
  std::map<std::string, std::size_t> orders{{"A3", 24},  {"B3", 48},   {"H3", 120},
                                            {"A4", 120}, {"B4", 384},  {"D4", 192},
                                            {"F4", 1152}, {"A5", 720}, {"D5", 1920}};
  for (auto const& entry : finite_type_table()) {
    auto const& g = entry.graph;
    INFO(entry.type.to_string());
    CHECK(is_spherical(g, g.all()));
    CHECK(is_indecomposable(g, g.all()));
    CHECK(finite_type(g, g.all()) == entry.type);
    auto it = orders.find(entry.type.to_string());
    if (it != orders.end()) {
      std::vector<std::size_t> verts(g.size());
      std::iota(verts.begin(), verts.end(), 0);
      CoxeterGroupOracle oracle(g, verts);
      CHECK(oracle.order() == it->second);
      // A reduced word for w0 spells the oracle's longest element.
      auto word = longest_element_word(g, g.all());
      auto x    = oracle.identity();
      for (auto v : word) {
        x = oracle.mul(x, oracle.generator(v));
      }
      CHECK(CoxeterGroupOracle::key(x) == CoxeterGroupOracle::key(oracle.longest()));
    }
  }
}

TEST_CASE("longest_element_automorphism") {
  auto e3 = make({"a", "b"}, {{"a", "b", 3}});
  CHECK(longest_element_automorphism(e3, set_of(e3, {"a"}))
        == std::vector<std::size_t>{0, 1});
  CHECK(longest_element_automorphism(e3, e3.all()) == std::vector<std::size_t>{1, 0});
  auto e4 = make({"a", "b"}, {{"a", "b", 4}});
  CHECK(longest_element_automorphism(e4, e4.all()) == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(longest_element_automorphism(triangle(3, 3, 3), VertexSet::range(3)),
                  Error);
  CHECK_THROWS_AS(longest_element_automorphism(triangle(3, 2, 2), VertexSet::range(3)),
                  Error);
  // A3 as the triangle a-b-c with m_ac = 2: the ends a and c swap.
  auto a3 = triangle(3, 3, 2);
  CHECK(longest_element_automorphism(a3, a3.all()) == std::vector<std::size_t>{2, 1, 0});
}

TEST_CASE("longest_element_automorphism is a label-preserving involution; matches w0") {
  std::vector<int> labels{0, 2, 3, 4, 5, 6};
  std::size_t      checked = 0;
  for (int ab : labels) {
    for (int bc : labels) {
      for (int ac : labels) {
        auto g = triangle(ab, bc, ac);
        for (std::uint64_t bits = 1; bits < 8; ++bits) {
          VertexSet j(bits);
          if (!is_indecomposable(g, j) || !is_spherical(g, j)) {
            continue;
          }
          auto pi = longest_element_automorphism(g, j);
          for (std::size_t v = 0; v < 3; ++v) {
            CHECK(pi[pi[v]] == v);
            CHECK(j.contains(v) == j.contains(pi[v]));
            for (std::size_t w : j.to_vector()) {
              if (j.contains(v) && v != w) {
                CHECK(g.raw_label(v, w) == g.raw_label(pi[v], pi[w]));
              }
            }
          }
          auto               verts = j.to_vector();
          CoxeterGroupOracle oracle(g, verts);
          REQUIRE(oracle.finite());
          CHECK(oracle.longest_count() == 1);
          for (std::size_t i = 0; i < verts.size(); ++i) {
            auto k = oracle.conjugate_generator(oracle.longest(), i);
            REQUIRE(k.has_value());
            CHECK(verts[*k] == pi[verts[i]]);
          }
          ++checked;
        }
      }
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("garside_word") {
  auto e3 = make({"a", "b"}, {{"a", "b", 3}});
  CHECK(garside_word(e3, set_of(e3, {"a"})).to_string(e3) == "a");
  CHECK(garside_word(e3, e3.all()).to_string(e3) == "a b a");
  auto e4 = make({"a", "b"}, {{"a", "b", 4}});
  CHECK(garside_word(e4, e4.all()).to_string(e4) == "a b a b");
  auto a3 = triangle(3, 3, 2);
  CHECK(garside_word(a3, a3.all()).to_string(a3) == "D(a,b,c)");
  CHECK_THROWS_AS(garside_word(make({"a", "b"}, {}), VertexSet::range(2)), Error);
}

TEST_CASE("longest_element_word") {
  for (int m = 3; m <= 9; ++m) {
    auto g = make({"a", "b"}, {{"a", "b", m}});
    CHECK(longest_element_word(g, g.all()).size() == static_cast<std::size_t>(m));
  }
  auto a3 = make({"a", "b", "c"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 2}});
  CHECK(longest_element_word(a3, a3.all()).size() == 6);
  auto h3 = make({"a", "b", "c"}, {{"a", "b", 5}, {"b", "c", 3}, {"a", "c", 2}});
  CHECK(longest_element_word(h3, h3.all()).size() == 15);
  CHECK_THROWS_AS(longest_element_word(a3, set_of(a3, {"a", "c"})), Error);
}

TEST_CASE("classify") {
  auto ra = make({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}});
  auto c  = classify(ra, ra.all());
  CHECK(c.right_angled);
  CHECK_FALSE(c.large_type);
  CHECK_FALSE(c.spherical);
  CHECK_FALSE(c.free_of_infinity);
  CHECK(c.triangle_free);

  auto t = triangle(3, 3, 3);
  c      = classify(t, t.all());
  CHECK(c.large_type);
  CHECK(c.free_of_infinity);
  CHECK_FALSE(c.triangle_free);
  CHECK_FALSE(c.xxxl);
  CHECK_FALSE(c.spherical);
  CHECK(c.indecomposable);
  CHECK(c.finite_components.empty());

  auto x = make({"a", "b"}, {{"a", "b", 7}});
  c      = classify(x, x.all());
  CHECK(c.xxxl);
  CHECK(c.large_type);
  CHECK(c.dihedral);
  CHECK(c.spherical);
  REQUIRE(c.finite_components.size() == 1);

  // A1 x A2: spherical, decomposable, both factors listed.
  auto d = triangle(3, 2, 2);
  c      = classify(d, d.all());
  CHECK(c.spherical);
  CHECK_FALSE(c.indecomposable);
  CHECK(c.finite_components.size() == 2);
}

TEST_CASE("right-angled on J iff factors are singletons (for complete J)") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = artin::testing::random_graph(rng, 5, {2, 2, 3, 4});
    CHECK(classify(g, g.all()).right_angled
          == (indecomposable_factors(g, g.all()).size() == g.size()));
  }
}
