#ifndef ARTIN_GOG_HPP_
#define ARTIN_GOG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace artin {

  // A finite graph of groups whose vertex and edge groups are standard
  // parabolic subgroups of the base Artin group, stored as vertex subsets.
  // Subgroup containment is subset containment.

  enum class NodeColour { black, white, plain };

  struct GogNode {
    std::size_t id;
    NodeColour  colour = NodeColour::plain;
    VertexSet   group;

    friend bool operator==(GogNode const&, GogNode const&) = default;
  };

  struct GogLink {
    std::size_t id;
    std::size_t u;
    std::size_t v;
    VertexSet   group;

    [[nodiscard]] bool is_loop() const noexcept {
      return u == v;
    }
    friend bool operator==(GogLink const&, GogLink const&) = default;
  };

  // Splits a node in two.  The node keeps `keep` and the links not listed in
  // `moved`; a new node with group `split` takes the links in `moved`, and a
  // new link with group `link_group` joins the two.
  struct ExpandSpec {
    VertexSet                keep;
    VertexSet                split;
    VertexSet                link_group;
    std::vector<std::size_t> moved;  // link ids
    NodeColour               colour = NodeColour::plain;

    friend bool operator==(ExpandSpec const&, ExpandSpec const&) = default;
  };

  struct GogMove {
    enum class Kind { collapse, expand };

    Kind        kind = Kind::collapse;
    std::size_t link = 0;  // collapsed link, or the link an expansion created
    std::size_t kept = 0;  // surviving node, or the node that was expanded
    std::size_t other = 0;  // absorbed node, or the node an expansion created
    // The absorbed node's data for collapses, the split for expansions.
    ExpandSpec  spec;

    friend bool operator==(GogMove const&, GogMove const&) = default;
  };

  using MoveLog = std::vector<GogMove>;

  class InvalidGogMove : public Error {
   public:
    using Error::Error;
  };

  class GraphOfGroups {
   public:
    GraphOfGroups(DefiningGraph base, std::vector<GogNode> nodes,
                  std::vector<GogLink> links);

    [[nodiscard]] DefiningGraph const&        base() const noexcept { return _base; }
    [[nodiscard]] std::vector<GogNode> const& nodes() const noexcept { return _nodes; }
    [[nodiscard]] std::vector<GogLink> const& links() const noexcept { return _links; }
    [[nodiscard]] MoveLog const&              log() const noexcept { return _log; }

    [[nodiscard]] GogNode const& node(std::size_t id) const;
    [[nodiscard]] GogLink const& link(std::size_t id) const;
    [[nodiscard]] bool           has_link(std::size_t id) const;

    // Non-loop links whose group equals the group of an endpoint.
    [[nodiscard]] std::vector<std::size_t> collapsible_links() const;
    [[nodiscard]] bool                     is_collapsible(std::size_t link) const;

    // Removes the link and merges its endpoints into the endpoint with the
    // larger group.  On a tie `keep` names the survivor (default: the lower
    // id); otherwise it is ignored.  Throws InvalidGogMove.
    [[nodiscard]] GraphOfGroups collapse(std::size_t                link,
                                         std::optional<std::size_t> keep = {}) const;
    [[nodiscard]] GraphOfGroups expand(std::size_t node, ExpandSpec const& spec) const;
    // Undoes the last logged move.
    [[nodiscard]] GraphOfGroups undo() const;

    // Collapses the least collapsible link id until none is left.
    [[nodiscard]] GraphOfGroups reduce() const;
    [[nodiscard]] bool          is_reduced() const;

    // Link ids that some full reduction never collapses.  Exhaustive.
    [[nodiscard]] std::vector<std::size_t> surviving_links() const;

    // Links - nodes + connected components of the underlying graph.
    [[nodiscard]] long betti() const;
    [[nodiscard]] bool is_tree() const;

    // Loop links whose group is the whole node group: a quotient-level
    // necessary condition for being non-ascending, not a full check.
    [[nodiscard]] std::vector<std::size_t> ascending_loops() const;

    // Exact equality, ids and log included.
    friend bool operator==(GraphOfGroups const&, GraphOfGroups const&) = default;

   private:
    std::size_t   node_index(std::size_t id) const;
    std::size_t   link_index(std::size_t id) const;
    DefiningGraph _base;
    std::vector<GogNode> _nodes;
    std::vector<GogLink> _links;
    MoveLog              _log;
    std::size_t          _next_node = 0;
    std::size_t          _next_link = 0;
  };

  // The crushed decomposition: a white node {v} per separating vertex, a
  // black node per big chunk, and a link {v} whenever v lies in the chunk.
  // Throws Error unless g is one-ended.
  GraphOfGroups build_MS(DefiningGraph const& g);

  // Applies `log` to `start` move by move.
  GraphOfGroups replay(GraphOfGroups const& start, MoveLog const& log);

  // Node bijection preserving groups that carries the link multiset onto
  // the other's; colours and ids are ignored.  Both must share a base.
  std::optional<std::vector<std::size_t>> isomorphism(GraphOfGroups const& a,
                                                      GraphOfGroups const& b);

  char const* colour_name(NodeColour c);

}  // namespace artin

#endif  // ARTIN_GOG_HPP_
