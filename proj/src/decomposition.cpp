#include "artin/decomposition.hpp"

#include <algorithm>
#include <utility>

namespace artin {

  namespace {

    struct BlockFinder {
      DefiningGraph const&                             g;
      std::vector<int>                                 disc;
      std::vector<int>                                 low;
      std::vector<std::pair<std::size_t, std::size_t>> edge_stack;
      std::vector<VertexSet>                           blocks;
      VertexSet                                        cut;
      int                                              timer = 0;

      explicit BlockFinder(DefiningGraph const& graph)
          : g(graph), disc(graph.size(), -1), low(graph.size(), 0) {}

      void pop_block(std::size_t u, std::size_t v) {
        VertexSet block;
        while (true) {
          auto e = edge_stack.back();
          edge_stack.pop_back();
          block.insert(e.first);
          block.insert(e.second);
          if (e.first == u && e.second == v) {
            break;
          }
        }
        blocks.push_back(block);
      }

      void dfs(std::size_t u, std::size_t parent, bool is_root) {
        disc[u] = low[u] = timer++;
        std::size_t children = 0;
        for (auto v : g.neighbours(u).to_vector()) {
          if (disc[v] == -1) {
            ++children;
            edge_stack.emplace_back(u, v);
            dfs(v, u, false);
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= disc[u]) {
              if (!is_root) {
                cut.insert(u);
              }
              pop_block(u, v);
            }
          } else if (v != parent && disc[v] < disc[u]) {
            edge_stack.emplace_back(u, v);
            low[u] = std::min(low[u], disc[v]);
          }
        }
        if (is_root && children >= 2) {
          cut.insert(u);
        }
      }
    };

  }  // namespace

  ChunkDecomposition big_chunks(DefiningGraph const& g) {
    BlockFinder bf(g);
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (bf.disc[v] == -1) {
        if (g.degree(v) == 0) {
          bf.disc[v] = bf.timer++;
          bf.blocks.push_back(VertexSet::singleton(v));
        } else {
          bf.dfs(v, v, true);
        }
      }
    }
    std::sort(bf.blocks.begin(), bf.blocks.end());
    return {std::move(bf.blocks), bf.cut};
  }

  VertexSet separating_vertices(DefiningGraph const& g) {
    if (!is_connected(g)) {
      throw Error("separating_vertices: graph is disconnected");
    }
    return big_chunks(g).separating_vertices;
  }

  bool is_cut_free(DefiningGraph const& g, VertexSet s) {
    if (s.empty() || !is_connected(g, s)) {
      return false;
    }
    for (auto v : s.to_vector()) {
      auto rest = s - VertexSet::singleton(v);
      if (!is_connected(g, rest)) {
        return false;
      }
    }
    return true;
  }

  ChunkDecomposition big_chunks_brute_force(DefiningGraph const& g) {
    auto const n = g.size();
    if (n > 24) {
      throw Error("big_chunks_brute_force: graph too large");
    }
    std::vector<VertexSet> good;
    for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << n); ++bits) {
      VertexSet s(bits);
      if (is_cut_free(g, s)) {
        good.push_back(s);
      }
    }
    std::vector<VertexSet> maximal;
    for (auto s : good) {
      bool dominated = std::any_of(good.begin(), good.end(), [&](VertexSet t) {
        return t != s && s.is_subset_of(t);
      });
      if (!dominated) {
        maximal.push_back(s);
      }
    }
    std::sort(maximal.begin(), maximal.end());
    // A vertex is separating iff deleting it increases the number of
    // components of its own component.
    VertexSet cut;
    for (auto const& comp : components(g)) {
      for (auto v : comp.to_vector()) {
        if (!is_connected(g, comp - VertexSet::singleton(v))) {
          cut.insert(v);
        }
      }
    }
    return {std::move(maximal), cut};
  }

  std::vector<VertexSet> odd_components(DefiningGraph const& g) {
    std::vector<Edge> odd;
    for (auto const& e : g.edges()) {
      if (e.label % 2 == 1) {
        odd.push_back(e);
      }
    }
    return components(DefiningGraph(g.names(), odd));
  }

  bool is_one_ended(DefiningGraph const& g) {
    return g.size() >= 2 && is_connected(g);
  }

}  // namespace artin
