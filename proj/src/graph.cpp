#include "artin/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace artin {

  DefiningGraph::DefiningGraph(std::vector<std::string> names,
                               std::vector<Edge> const& edges)
      : _names(std::move(names)) {
    auto const n = _names.size();
    if (n > max_vertices) {
      throw ParseError("too many vertices: " + std::to_string(n) + " > "
                       + std::to_string(max_vertices));
    }
    {
      auto sorted = _names;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) {
        throw ParseError("duplicate vertex \"" + *dup + "\"");
      }
    }
    _labels.assign(n * n, 0);
    _adjacency.assign(n, VertexSet());
    for (auto const& e : edges) {
      if (e.u >= n || e.v >= n) {
        throw ParseError("edge endpoint out of range");
      }
      if (e.u == e.v) {
        throw ParseError("loop at vertex \"" + _names[e.u] + "\"");
      }
      if (e.label < 2) {
        throw ParseError("label " + std::to_string(e.label) + " on edge {"
                         + _names[e.u] + "," + _names[e.v] + "} is < 2");
      }
      auto& slot = _labels[e.u * n + e.v];
      if (slot != 0 && slot != e.label) {
        throw ParseError("conflicting labels on edge {" + _names[e.u] + ","
                         + _names[e.v] + "}");
      }
      slot                    = e.label;
      _labels[e.v * n + e.u]  = e.label;
      _adjacency[e.u].insert(e.v);
      _adjacency[e.v].insert(e.u);
    }
  }

  DefiningGraph DefiningGraph::from_names(
      std::vector<std::string> names,
      std::vector<std::tuple<std::string, std::string, int>> const& edges) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < names.size(); ++i) {
      idx.emplace(names[i], i);
    }
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto const& [a, b, m] : edges) {
      auto ia = idx.find(a);
      auto ib = idx.find(b);
      if (ia == idx.end() || ib == idx.end()) {
        throw ParseError("edge {" + a + "," + b + "} names an unknown vertex");
      }
      es.push_back({ia->second, ib->second, m});
    }
    return DefiningGraph(std::move(names), es);
  }

  std::optional<std::size_t> DefiningGraph::index(std::string_view name) const {
    auto it = std::find(_names.begin(), _names.end(), name);
    if (it == _names.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _names.begin());
  }

  std::size_t DefiningGraph::at(std::string_view name) const {
    auto i = index(name);
    if (!i) {
      throw ParseError("unknown vertex \"" + std::string(name) + "\"");
    }
    return *i;
  }

  std::vector<Edge> DefiningGraph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < size(); ++u) {
      for (std::size_t v = u + 1; v < size(); ++v) {
        if (auto m = raw_label(u, v); m != 0) {
          out.push_back({u, v, m});
        }
      }
    }
    return out;
  }

  std::size_t DefiningGraph::edge_count() const noexcept {
    std::size_t total = 0;
    for (auto const& a : _adjacency) {
      total += a.size();
    }
    return total / 2;
  }

  std::vector<int> DefiningGraph::label_multiset() const {
    std::vector<int> out;
    for (auto const& e : edges()) {
      out.push_back(e.label);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  DefiningGraph DefiningGraph::induced(VertexSet subset) const {
    auto const        keep = subset.to_vector();
    std::vector<std::string> names;
    for (auto v : keep) {
      names.push_back(_names.at(v));
    }
    std::vector<Edge> es;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (auto m = raw_label(keep[i], keep[j]); m != 0) {
          es.push_back({i, j, m});
        }
      }
    }
    return DefiningGraph(std::move(names), es);
  }

  DefiningGraph DefiningGraph::renamed(std::vector<std::string> names) const {
    if (names.size() != size()) {
      throw ParseError("renamed: wrong number of names");
    }
    return DefiningGraph(std::move(names), edges());
  }

  DefiningGraph DefiningGraph::permuted(std::vector<std::size_t> const& perm) const {
    std::vector<std::string> names(size());
    for (std::size_t i = 0; i < size(); ++i) {
      names.at(perm.at(i)) = _names[i];
    }
    std::vector<Edge> es;
    for (auto const& e : edges()) {
      es.push_back({perm[e.u], perm[e.v], e.label});
    }
    return DefiningGraph(std::move(names), es);
  }

  std::string DefiningGraph::to_string(VertexSet s) const {
    std::string out = "{";
    bool        first = true;
    for (auto v : s.to_vector()) {
      if (!first) {
        out += ",";
      }
      out += _names.at(v);
      first = false;
    }
    return out + "}";
  }

  DefiningGraph parse_graph(std::string_view text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
      if (!doc.is_object() || !doc.contains("vertices")
          || !doc["vertices"].is_array()) {
        throw ParseError("graph document needs a \"vertices\" array");
      }
      std::vector<std::string> names;
      for (auto const& v : doc["vertices"]) {
        if (!v.is_string()) {
          throw ParseError("vertex names must be strings");
        }
        names.push_back(v.get<std::string>());
      }
      std::vector<std::tuple<std::string, std::string, int>> edges;
      if (doc.contains("edges")) {
        if (!doc["edges"].is_array()) {
          throw ParseError("\"edges\" must be an array");
        }
        for (auto const& e : doc["edges"]) {
          if (!e.is_array() || e.size() != 3 || !e[0].is_string()
              || !e[1].is_string() || !e[2].is_number_integer()) {
            throw ParseError("each edge must be [string, string, int]");
          }
          edges.emplace_back(e[0].get<std::string>(),
                             e[1].get<std::string>(),
                             e[2].get<int>());
        }
      }
      return DefiningGraph::from_names(std::move(names), edges);
    } catch (nlohmann::json::exception const& e) {
      throw ParseError(std::string("malformed graph document: ") + e.what());
    }
  }

  std::string serialize_graph(DefiningGraph const& g) {
    nlohmann::json doc;
    doc["vertices"] = g.names();
    doc["edges"]    = nlohmann::json::array();
    for (auto const& e : g.edges()) {
      doc["edges"].push_back({g.name(e.u), g.name(e.v), e.label});
    }
    return doc.dump();
  }

  std::vector<VertexSet> components(DefiningGraph const& g, VertexSet within) {
    std::vector<VertexSet> out;
    auto                   left = within;
    while (!left.empty()) {
      VertexSet comp     = VertexSet::singleton(left.front());
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        VertexSet next;
        for (auto v : frontier.to_vector()) {
          next |= g.neighbours(v);
        }
        next &= within;
        next -= comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      left -= comp;
    }
    return out;
  }

  std::vector<VertexSet> components(DefiningGraph const& g) {
    return components(g, g.all());
  }

  bool is_connected(DefiningGraph const& g, VertexSet within) {
    return components(g, within).size() <= 1;
  }

  bool is_connected(DefiningGraph const& g) {
    return is_connected(g, g.all());
  }

}  // namespace artin
