#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "artin/decomposition.hpp"
#include "artin/gog.hpp"
#include "test_support.hpp"

using namespace artin;
using artin::testing::make;
using artin::testing::set_of;

namespace {

  DefiningGraph triangle_pendant() {
    return make({"a", "b", "c", "d"}, {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3},
                                       {"c", "d", 2}});
  }

  // Three triangles in a row sharing c and e.
  DefiningGraph three_triangles() {
    return make({"a", "b", "c", "d", "e", "f", "g"},
                {{"a", "b", 3}, {"b", "c", 3}, {"a", "c", 3}, {"c", "d", 4},
                 {"d", "e", 4}, {"c", "e", 2}, {"e", "f", 5}, {"f", "g", 5},
                 {"e", "g", 5}});
  }

  std::size_t count(GraphOfGroups const& G, NodeColour c) {
    std::size_t n = 0;
    for (auto const& node : G.nodes()) {
      n += node.colour == c;
    }
    return n;
  }

  // A random legal collapse or expansion.
  GraphOfGroups random_move(GraphOfGroups const& G, std::mt19937& rng) {
    std::bernoulli_distribution coin(0.5);
    auto c = G.collapsible_links();
    if (!c.empty() && coin(rng)) {
      return G.collapse(c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)]);
    }
    auto const& nodes = G.nodes();
    auto const& n = nodes[std::uniform_int_distribution<std::size_t>(0, nodes.size() - 1)(rng)];
    // Split off a random subgroup of the node's group; the new node gets it
    // and the links that fit.
    VertexSet split;
    for (auto v : n.group.to_vector()) {
      if (coin(rng)) {
        split.insert(v);
      }
    }
    ExpandSpec spec{n.group, split, split, {}, NodeColour::plain};
    for (auto const& l : G.links()) {
      if ((l.u == n.id || l.v == n.id) && !l.is_loop() && l.group.is_subset_of(split)
          && coin(rng)) {
        spec.moved.push_back(l.id);
      }
    }
    return G.expand(n.id, spec);
  }

}  // namespace

TEST_CASE("build_MS examples") {
  auto tp = triangle_pendant();
  auto M  = build_MS(tp);
  CHECK(count(M, NodeColour::white) == 1);
  CHECK(count(M, NodeColour::black) == 2);
  CHECK(M.links().size() == 2);
  CHECK(M.is_tree());
  for (auto const& l : M.links()) {
    CHECK(l.group == set_of(tp, {"c"}));
  }

  auto sq = make({"a", "b", "c", "d"}, {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2},
                                        {"d", "a", 2}});
  auto M1 = build_MS(sq);
  CHECK(M1.nodes().size() == 1);
  CHECK(M1.links().empty());
  CHECK(M1.betti() == 0);

  auto M3 = build_MS(three_triangles());
  CHECK(count(M3, NodeColour::white) == 2);
  CHECK(count(M3, NodeColour::black) == 3);
  CHECK(M3.is_tree());

  CHECK_THROWS_AS((void)build_MS(make({"a"}, {})), Error);
  CHECK_THROWS_AS((void)build_MS(make({"a", "b"}, {})), Error);
}

TEST_CASE("collapsible_links") {
  auto tp = triangle_pendant();
  auto M  = build_MS(tp);
  CHECK(M.collapsible_links().size() == 2);

  auto c   = set_of(tp, {"c"});
  auto abc = set_of(tp, {"a", "b", "c"});
  auto bc  = set_of(tp, {"b", "c"});
  GraphOfGroups G(tp, {{0, NodeColour::plain, abc}, {1, NodeColour::plain, bc}},
                  {{0, 0, 1, c}, {1, 0, 0, c}});
  CHECK(G.collapsible_links().empty());
  CHECK(G.betti() == 1);
  CHECK_THROWS_AS((void)G.collapse(0), InvalidGogMove);
  CHECK_THROWS_AS((void)G.collapse(1), InvalidGogMove);
  CHECK(G.surviving_links() == std::vector<std::size_t>{0, 1});

  // Link group outside an endpoint group.
  CHECK_THROWS_AS((void)GraphOfGroups(tp, {{0, NodeColour::plain, c}, {1, NodeColour::plain, bc}},
                                {{0, 0, 1, abc}}),
                  InvalidGogMove);
}

TEST_CASE("collapse and reduce") {
  auto tp = triangle_pendant();
  auto M  = build_MS(tp);
  auto C  = M.collapse(M.collapsible_links().front());
  CHECK(C.nodes().size() == 2);
  CHECK(C.links().size() == 1);
  CHECK(C.log().size() == 1);
  CHECK(C.is_reduced());
  CHECK(M.reduce().nodes().size() == 2);
  CHECK(M.reduce().reduce() == M.reduce());

  // black - white - black - white - black: one link per white node goes.
  auto M3 = build_MS(three_triangles());
  auto R  = M3.reduce();
  CHECK(R.links().size() == M3.links().size() - 2);
  CHECK(R.nodes().size() == 3);
  for (auto const& n : R.nodes()) {
    CHECK(n.colour == NodeColour::black);
  }

  // Undo and replay.
  auto back = C.undo();
  CHECK(back.log().empty());
  CHECK(isomorphism(back, M));
  CHECK(replay(M3, R.log()) == R);
}

TEST_CASE("expand") {
  auto tp  = triangle_pendant();
  auto M   = build_MS(tp);
  auto abc = set_of(tp, {"a", "b", "c"});
  auto c   = set_of(tp, {"c"});
  std::size_t black = 0;
  for (auto const& n : M.nodes()) {
    if (n.group == abc) {
      black = n.id;
    }
  }
  auto E = M.expand(black, {abc, c, c, {}, NodeColour::plain});
  CHECK(E.nodes().size() == M.nodes().size() + 1);
  CHECK_FALSE(isomorphism(E, M));
  auto back = E.collapse(E.log().back().link);
  CHECK(isomorphism(back, M));
  CHECK(isomorphism(E.undo(), M));

  CHECK_THROWS_AS((void)M.expand(black, {abc, set_of(tp, {"a"}), c, {}, NodeColour::plain}),
                  InvalidGogMove);
  CHECK_THROWS_AS((void)M.expand(black, {abc, set_of(tp, {"a", "b"}), set_of(tp, {"a"}), {},
                                   NodeColour::plain}),
                  InvalidGogMove);
  // The link to the white node {c} may move to a side containing c only.
  auto link = M.links().front().id;
  CHECK_THROWS_AS((void)M.expand(black, {abc, set_of(tp, {"a", "b"}), set_of(tp, {"a", "b"}),
                                   {link}, NodeColour::plain}),
                  InvalidGogMove);
}

TEST_CASE("surviving_links") {
  for (auto const& g : {triangle_pendant(), three_triangles()}) {
    auto M = build_MS(g);
    std::vector<std::size_t> all;
    for (auto const& l : M.links()) {
      all.push_back(l.id);
    }
    CHECK(M.surviving_links() == all);
    auto R = M.reduce();
    std::vector<std::size_t> rest;
    for (auto const& l : R.links()) {
      rest.push_back(l.id);
    }
    CHECK(R.surviving_links() == rest);
  }

  // A chain {a,b} - {a} - {a}: collapsing either link merges an {a} node;
  // the other link then joins {a,b} to {a} and collapses too.
  auto g = make({"a", "b"}, {{"a", "b", 3}});
  auto A = set_of(g, {"a"});
  GraphOfGroups chain(g, {{0, NodeColour::plain, g.all()}, {1, NodeColour::plain, A},
                          {2, NodeColour::plain, A}},
                      {{0, 0, 1, A}, {1, 1, 2, A}});
  CHECK(chain.surviving_links().empty());
  CHECK(chain.reduce().nodes().size() == 1);
}

TEST_CASE("betti") {
  auto g = make({"a", "b"}, {{"a", "b", 3}});
  auto A = set_of(g, {"a"});
  GraphOfGroups loop(g, {{0, NodeColour::plain, g.all()}}, {{0, 0, 0, A}});
  CHECK(loop.betti() == 1);
  CHECK(loop.ascending_loops().empty());
  GraphOfGroups asc(g, {{0, NodeColour::plain, A}}, {{0, 0, 0, A}});
  CHECK(asc.ascending_loops() == std::vector<std::size_t>{0});
}

TEST_CASE("random move scripts keep betti, replay and invert") {
  std::mt19937 rng(31);
  int          scripts = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto g = artin::testing::random_connected_graph(rng, 4 + trial % 5, {2, 3, 4}, 0.15);
    auto M = build_MS(g);
    auto G = M;
    for (int k = 0; k < 10; ++k) {
      G = random_move(G, rng);
      CHECK(G.betti() == M.betti());
    }
    CHECK(replay(M, G.log()) == G);
    auto H = G;
    while (!H.log().empty()) {
      H = H.undo();
    }
    CHECK(H.nodes().size() == M.nodes().size());
    CHECK(isomorphism(H, M));
    ++scripts;
  }
  CHECK(scripts == 100);
}
