#include "artin/gog.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "artin/decomposition.hpp"

namespace artin {

  char const* colour_name(NodeColour c) {
    switch (c) {
      case NodeColour::black:
        return "black";
      case NodeColour::white:
        return "white";
      case NodeColour::plain:
        return "plain";
    }
    return "?";
  }

  GraphOfGroups::GraphOfGroups(DefiningGraph base, std::vector<GogNode> nodes,
                               std::vector<GogLink> links)
      : _base(std::move(base)), _nodes(std::move(nodes)), _links(std::move(links)) {
    std::set<std::size_t> ids;
    for (auto const& n : _nodes) {
      if (!ids.insert(n.id).second) {
        throw InvalidGogMove("duplicate node id " + std::to_string(n.id));
      }
      if (!n.group.is_subset_of(_base.all())) {
        throw InvalidGogMove("node group outside the base graph");
      }
      _next_node = std::max(_next_node, n.id + 1);
    }
    std::set<std::size_t> link_ids;
    for (auto const& l : _links) {
      if (!link_ids.insert(l.id).second) {
        throw InvalidGogMove("duplicate link id " + std::to_string(l.id));
      }
      if (!ids.contains(l.u) || !ids.contains(l.v)) {
        throw InvalidGogMove("link " + std::to_string(l.id) + " has a missing endpoint");
      }
      if (!l.group.is_subset_of(node(l.u).group)
          || !l.group.is_subset_of(node(l.v).group)) {
        throw InvalidGogMove("link " + std::to_string(l.id)
                             + " group is not contained in its endpoint groups");
      }
      _next_link = std::max(_next_link, l.id + 1);
    }
  }

  std::size_t GraphOfGroups::node_index(std::size_t id) const {
    for (std::size_t i = 0; i < _nodes.size(); ++i) {
      if (_nodes[i].id == id) {
        return i;
      }
    }
    throw InvalidGogMove("no node with id " + std::to_string(id));
  }

  std::size_t GraphOfGroups::link_index(std::size_t id) const {
    for (std::size_t i = 0; i < _links.size(); ++i) {
      if (_links[i].id == id) {
        return i;
      }
    }
    throw InvalidGogMove("no link with id " + std::to_string(id));
  }

  GogNode const& GraphOfGroups::node(std::size_t id) const {
    return _nodes[node_index(id)];
  }

  GogLink const& GraphOfGroups::link(std::size_t id) const {
    return _links[link_index(id)];
  }

  bool GraphOfGroups::has_link(std::size_t id) const {
    return std::any_of(_links.begin(), _links.end(),
                       [&](GogLink const& l) { return l.id == id; });
  }

  bool GraphOfGroups::is_collapsible(std::size_t id) const {
    auto const& l = link(id);
    return !l.is_loop()
           && (l.group == node(l.u).group || l.group == node(l.v).group);
  }

  std::vector<std::size_t> GraphOfGroups::collapsible_links() const {
    std::vector<std::size_t> out;
    for (auto const& l : _links) {
      if (is_collapsible(l.id)) {
        out.push_back(l.id);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  GraphOfGroups GraphOfGroups::collapse(std::size_t                id,
                                        std::optional<std::size_t> keep) const {
    if (!is_collapsible(id)) {
      throw InvalidGogMove("link " + std::to_string(id) + " is not collapsible");
    }
    auto const  e  = link(id);
    auto const& nu = node(e.u);
    auto const& nv = node(e.v);
    std::size_t survivor;
    if (e.group == nu.group && e.group == nv.group) {
      survivor = keep && (*keep == e.u || *keep == e.v) ? *keep : std::min(e.u, e.v);
    } else {
      survivor = e.group == nu.group ? e.v : e.u;
    }
    auto const absorbed = survivor == e.u ? e.v : e.u;
    auto const& gone    = node(absorbed);

    GogMove rec;
    rec.kind            = GogMove::Kind::collapse;
    rec.link            = id;
    rec.kept            = survivor;
    rec.other           = absorbed;
    rec.spec.keep       = node(survivor).group;
    rec.spec.split      = gone.group;
    rec.spec.link_group = e.group;
    rec.spec.colour     = gone.colour;

    auto out = *this;
    out._links.erase(out._links.begin() + static_cast<std::ptrdiff_t>(link_index(id)));
    for (auto& l : out._links) {
      if (l.u == absorbed || l.v == absorbed) {
        rec.spec.moved.push_back(l.id);
      }
      if (l.u == absorbed) {
        l.u = survivor;
      }
      if (l.v == absorbed) {
        l.v = survivor;
      }
    }
    out._nodes.erase(out._nodes.begin()
                     + static_cast<std::ptrdiff_t>(node_index(absorbed)));
    out._log.push_back(std::move(rec));
    return out;
  }

  GraphOfGroups GraphOfGroups::expand(std::size_t id, ExpandSpec const& spec) const {
    auto const& n = node(id);
    if (!spec.link_group.is_subset_of(spec.keep & spec.split)) {
      throw InvalidGogMove("expand: link group must lie in both sides");
    }
    if (spec.link_group != spec.keep && spec.link_group != spec.split) {
      throw InvalidGogMove("expand: link group must equal one side");
    }
    if ((spec.keep | spec.split) != n.group) {
      throw InvalidGogMove("expand: the larger side must be the node's group");
    }
    std::set<std::size_t> moved(spec.moved.begin(), spec.moved.end());
    for (auto const& l : _links) {
      bool const incident = l.u == id || l.v == id;
      if (moved.contains(l.id)) {
        if (!incident) {
          throw InvalidGogMove("expand: link " + std::to_string(l.id)
                               + " is not incident to the node");
        }
        if (!l.group.is_subset_of(spec.split)) {
          throw InvalidGogMove("expand: link " + std::to_string(l.id)
                               + " does not fit the new node");
        }
        moved.erase(l.id);
      } else if (incident && !l.group.is_subset_of(spec.keep)) {
        throw InvalidGogMove("expand: link " + std::to_string(l.id)
                             + " does not fit the remaining node");
      }
    }
    if (!moved.empty()) {
      throw InvalidGogMove("expand: unknown link " + std::to_string(*moved.begin()));
    }

    auto       out      = *this;
    auto const fresh    = out._next_node++;
    auto const new_link = out._next_link++;
    out._nodes[node_index(id)].group = spec.keep;
    out._nodes.push_back({fresh, spec.colour, spec.split});
    for (auto& l : out._links) {
      if (std::find(spec.moved.begin(), spec.moved.end(), l.id) != spec.moved.end()) {
        if (l.u == id) {
          l.u = fresh;
        }
        if (l.v == id) {
          l.v = fresh;
        }
      }
    }
    out._links.push_back({new_link, id, fresh, spec.link_group});
    out._log.push_back({GogMove::Kind::expand, new_link, id, fresh, spec});
    return out;
  }

  GraphOfGroups GraphOfGroups::undo() const {
    if (_log.empty()) {
      throw InvalidGogMove("undo: empty log");
    }
    // Restores the previous state exactly, ids included, so that earlier
    // log entries stay meaningful.
    auto const& last = _log.back();
    auto        out  = *this;
    out._log.pop_back();
    auto reattach = [&](std::size_t from, std::size_t to) {
      for (auto& l : out._links) {
        if (std::find(last.spec.moved.begin(), last.spec.moved.end(), l.id)
            != last.spec.moved.end()) {
          if (l.u == from) {
            l.u = to;
          }
          if (l.v == from) {
            l.v = to;
          }
        }
      }
    };
    if (last.kind == GogMove::Kind::collapse) {
      out._nodes.push_back({last.other, last.spec.colour, last.spec.split});
      reattach(last.kept, last.other);
      out._links.push_back({last.link, last.kept, last.other, last.spec.link_group});
    } else {
      out._links.erase(out._links.begin()
                       + static_cast<std::ptrdiff_t>(link_index(last.link)));
      reattach(last.other, last.kept);
      out._nodes.erase(out._nodes.begin()
                       + static_cast<std::ptrdiff_t>(node_index(last.other)));
      out._nodes[out.node_index(last.kept)].group = last.spec.keep | last.spec.split;
    }
    return out;
  }

  GraphOfGroups GraphOfGroups::reduce() const {
    auto g = *this;
    for (auto c = g.collapsible_links(); !c.empty(); c = g.collapsible_links()) {
      g = g.collapse(c.front());
    }
    return g;
  }

  bool GraphOfGroups::is_reduced() const {
    return collapsible_links().empty();
  }

  std::vector<std::size_t> GraphOfGroups::surviving_links() const {
    std::set<std::size_t>                survivors;
    std::set<std::vector<std::size_t>>   seen;
    std::function<void(GraphOfGroups const&, std::vector<std::size_t>)> search;
    search = [&](GraphOfGroups const& g, std::vector<std::size_t> collapsed) {
      std::sort(collapsed.begin(), collapsed.end());
      if (!seen.insert(collapsed).second) {
        return;
      }
      auto const options = g.collapsible_links();
      if (options.empty()) {
        for (auto const& l : g.links()) {
          survivors.insert(l.id);
        }
        return;
      }
      for (auto id : options) {
        auto next = collapsed;
        next.push_back(id);
        search(g.collapse(id), std::move(next));
      }
    };
    search(*this, {});
    return {survivors.begin(), survivors.end()};
  }

  namespace {

    std::size_t count_components(std::vector<GogNode> const& nodes,
                                 std::vector<GogLink> const& links) {
      std::vector<std::size_t> ids;
      for (auto const& n : nodes) {
        ids.push_back(n.id);
      }
      std::sort(ids.begin(), ids.end());
      auto at = [&](std::size_t id) {
        return static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), id)
                                        - ids.begin());
      };
      std::vector<std::size_t> parent(ids.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
      };
      auto count = ids.size();
      for (auto const& l : links) {
        auto a = find(at(l.u));
        auto b = find(at(l.v));
        if (a != b) {
          parent[a] = b;
          --count;
        }
      }
      return count;
    }

  }  // namespace

  long GraphOfGroups::betti() const {
    return static_cast<long>(_links.size()) - static_cast<long>(_nodes.size())
           + static_cast<long>(count_components(_nodes, _links));
  }

  bool GraphOfGroups::is_tree() const {
    return betti() == 0 && count_components(_nodes, _links) == 1;
  }

  std::vector<std::size_t> GraphOfGroups::ascending_loops() const {
    std::vector<std::size_t> out;
    for (auto const& l : _links) {
      if (l.is_loop() && l.group == node(l.u).group) {
        out.push_back(l.id);
      }
    }
    return out;
  }

  GraphOfGroups build_MS(DefiningGraph const& g) {
    if (!is_one_ended(g)) {
      throw Error("build_MS: the defining graph must be connected with at least two "
                  "vertices");
    }
    auto const           dec = big_chunks(g);
    std::vector<GogNode> nodes;
    std::vector<GogLink> links;
    std::vector<std::pair<std::size_t, std::size_t>> white;  // (vertex, node id)
    for (auto v : dec.separating_vertices.to_vector()) {
      white.emplace_back(v, nodes.size());
      nodes.push_back({nodes.size(), NodeColour::white, VertexSet::singleton(v)});
    }
    for (auto const& chunk : dec.chunks) {
      auto const id = nodes.size();
      nodes.push_back({id, NodeColour::black, chunk});
      for (auto [v, w] : white) {
        if (chunk.contains(v)) {
          links.push_back({links.size(), w, id, VertexSet::singleton(v)});
        }
      }
    }
    return GraphOfGroups(g, std::move(nodes), std::move(links));
  }

  GraphOfGroups replay(GraphOfGroups const& start, MoveLog const& log) {
    auto g = start;
    for (std::size_t i = 0; i < log.size(); ++i) {
      auto const& m = log[i];
      g = m.kind == GogMove::Kind::collapse ? g.collapse(m.link, m.kept)
                                            : g.expand(m.kept, m.spec);
      if (!(g.log().back() == m)) {
        throw InvalidGogMove("replay diverged at move " + std::to_string(i));
      }
    }
    return g;
  }

  std::optional<std::vector<std::size_t>> isomorphism(GraphOfGroups const& a,
                                                      GraphOfGroups const& b) {
    if (!(a.base() == b.base()) || a.nodes().size() != b.nodes().size()
        || a.links().size() != b.links().size()) {
      return std::nullopt;
    }
    auto const& na = a.nodes();
    auto const& nb = b.nodes();
    auto index_of  = [](std::vector<GogNode> const& ns, std::size_t id) {
      for (std::size_t i = 0; i < ns.size(); ++i) {
        if (ns[i].id == id) {
          return i;
        }
      }
      return ns.size();
    };
    using Key = std::tuple<std::size_t, std::size_t, std::uint64_t>;
    auto key_list = [&](GraphOfGroups const& g, std::vector<std::size_t> const& f) {
      std::vector<Key> ks;
      for (auto const& l : g.links()) {
        auto u = f[index_of(g.nodes(), l.u)];
        auto v = f[index_of(g.nodes(), l.v)];
        ks.emplace_back(std::min(u, v), std::max(u, v), l.group.bits());
      }
      std::sort(ks.begin(), ks.end());
      return ks;
    };
    std::vector<std::size_t> identity(nb.size());
    std::iota(identity.begin(), identity.end(), 0);
    auto const target = key_list(b, identity);

    auto degree = [](GraphOfGroups const& g, std::size_t id) {
      std::size_t d = 0;
      for (auto const& l : g.links()) {
        d += (l.u == id) + (l.v == id);
      }
      return d;
    };
    std::vector<std::size_t> f(na.size(), nb.size());
    std::vector<bool>        used(nb.size(), false);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
      if (i == na.size()) {
        return key_list(a, f) == target;
      }
      for (std::size_t j = 0; j < nb.size(); ++j) {
        if (!used[j] && na[i].group == nb[j].group
            && degree(a, na[i].id) == degree(b, nb[j].id)) {
          used[j] = true;
          f[i]    = j;
          if (assign(i + 1)) {
            return true;
          }
          used[j] = false;
        }
      }
      return false;
    };
    if (!assign(0)) {
      return std::nullopt;
    }
    return f;
  }

}  // namespace artin
