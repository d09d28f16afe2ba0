#ifndef ARTIN_GRAPH_HPP_
#define ARTIN_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace artin {

  // An edge {u, v} of a defining graph with its label m_uv >= 2.
  struct Edge {
    std::size_t u;
    std::size_t v;
    int         label;

    friend bool operator==(Edge const&, Edge const&) = default;
  };

  // A finite simplicial graph with edge labels m >= 2.  A missing edge
  // stands for m = infinity; there is no integer encoding of infinity in the
  // public interface.  Values are immutable once built.
  class DefiningGraph {
   public:
    DefiningGraph() = default;

    // Throws ParseError on duplicate names, loops, labels < 2, unknown
    // endpoints, or the same pair listed twice with different labels.
    DefiningGraph(std::vector<std::string> names, std::vector<Edge> const& edges);

    // Convenience form taking edges by vertex name.
    static DefiningGraph from_names(
        std::vector<std::string> names,
        std::vector<std::tuple<std::string, std::string, int>> const& edges);

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }
    [[nodiscard]] VertexSet all() const noexcept {
      return VertexSet::range(size());
    }
    [[nodiscard]] std::string const& name(std::size_t v) const {
      return _names.at(v);
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::optional<std::size_t> index(std::string_view name) const;
    // Like index() but throws ParseError for unknown names.
    [[nodiscard]] std::size_t at(std::string_view name) const;

    // The label m_uv, or nullopt when u and v are not adjacent (m = infinity).
    [[nodiscard]] std::optional<int> label(std::size_t u, std::size_t v) const {
      auto m = _labels[u * size() + v];
      return m == 0 ? std::nullopt : std::optional<int>(m);
    }
    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const {
      return _labels[u * size() + v] != 0;
    }
    // Raw label with 0 for a missing edge; for hashing and hot loops.
    [[nodiscard]] int raw_label(std::size_t u, std::size_t v) const noexcept {
      return _labels[u * size() + v];
    }
    [[nodiscard]] VertexSet neighbours(std::size_t v) const noexcept {
      return _adjacency[v];
    }
    [[nodiscard]] std::size_t degree(std::size_t v) const noexcept {
      return _adjacency[v].size();
    }

    // Edges with u < v, sorted.
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::size_t       edge_count() const noexcept;
    // Sorted list of all edge labels.
    [[nodiscard]] std::vector<int> label_multiset() const;

    // The induced labelled subgraph on `subset`, vertices in index order.
    [[nodiscard]] DefiningGraph induced(VertexSet subset) const;

    // A copy with vertex i renamed to names[i].
    [[nodiscard]] DefiningGraph renamed(std::vector<std::string> names) const;

    // A copy whose vertex perm[i] is this graph's vertex i (names carried
    // along), so the result is isomorphic with the vertex list reordered.
    [[nodiscard]] DefiningGraph permuted(std::vector<std::size_t> const& perm) const;

    [[nodiscard]] std::string to_string(VertexSet s) const;

    friend bool operator==(DefiningGraph const&, DefiningGraph const&) = default;

   private:
    std::vector<std::string> _names;
    std::vector<int>         _labels;
    std::vector<VertexSet>   _adjacency;
  };

  // Parses the JSON graph document
  //   {"vertices": [name, ...], "edges": [[name, name, m], ...]}.
  DefiningGraph parse_graph(std::string_view text);
  // Serialises to the same format (edges sorted).
  std::string   serialize_graph(DefiningGraph const& g);

  // Connected components of the subgraph induced on `within`, each sorted by
  // smallest member.
  std::vector<VertexSet> components(DefiningGraph const& g, VertexSet within);
  std::vector<VertexSet> components(DefiningGraph const& g);
  bool                   is_connected(DefiningGraph const& g, VertexSet within);
  bool                   is_connected(DefiningGraph const& g);

}  // namespace artin

#endif  // ARTIN_GRAPH_HPP_
