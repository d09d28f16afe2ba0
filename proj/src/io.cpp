#include "artin/io.hpp"

#include <sstream>

namespace artin::io {

  namespace {

    template <typename T>
    T get(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      try {
        return j.at(key).get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw ParseError(std::string("bad field \"") + key + "\": " + e.what());
      }
    }

    int exponent_from_json(Json const& j) {
      if (!j.contains("exp")) {
        return 1;
      }
      auto e = get<int>(j, "exp");
      if (e == 0) {
        throw ParseError("exponent 0");
      }
      return e;
    }

    Json names_of(DefiningGraph const& g, std::vector<std::size_t> const& vs) {
      Json out = Json::array();
      for (auto v : vs) {
        out.push_back(g.name(v));
      }
      return out;
    }

    std::vector<std::string> strings(Json const& j) {
      if (!j.is_array()) {
        throw ParseError("expected an array of names");
      }
      std::vector<std::string> out;
      for (auto const& x : j) {
        if (!x.is_string()) {
          throw ParseError("expected a vertex name");
        }
        out.push_back(x.get<std::string>());
      }
      return out;
    }

  }  // namespace

  Json graph_to_json(DefiningGraph const& g) {
    return Json::parse(serialize_graph(g));
  }

  DefiningGraph graph_from_json(Json const& j) {
    return parse_graph(j.dump());
  }

  Json set_to_json(DefiningGraph const& g, VertexSet s) {
    Json out = Json::array();
    for (auto v : s.to_vector()) {
      out.push_back(g.name(v));
    }
    return out;
  }

  VertexSet set_from_json(DefiningGraph const& g, Json const& j) {
    VertexSet s;
    for (auto const& n : strings(j)) {
      s.insert(g.at(n));
    }
    return s;
  }

  std::size_t vertex_from_json(DefiningGraph const& g, Json const& j) {
    if (!j.is_string()) {
      throw ParseError("expected a vertex name");
    }
    return g.at(j.get<std::string>());
  }

  Json to_json(DefiningGraph const& g, ChunkDecomposition const& d) {
    Json chunks = Json::array();
    for (auto c : d.chunks) {
      chunks.push_back(set_to_json(g, c));
    }
    return {{"chunks", chunks},
            {"separating_vertices", set_to_json(g, d.separating_vertices)}};
  }

  Json to_json(DefiningGraph const&, CoxeterClass const& c) {
    Json comps = Json::array();
    for (auto const& f : c.finite_components) {
      comps.push_back(f.to_string());
    }
    return {{"spherical", c.spherical},
            {"right_angled", c.right_angled},
            {"large_type", c.large_type},
            {"xxxl", c.xxxl},
            {"triangle_free", c.triangle_free},
            {"free_of_infinity", c.free_of_infinity},
            {"dihedral", c.dihedral},
            {"indecomposable", c.indecomposable},
            {"finite_components", comps}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Words and twists
  ////////////////////////////////////////////////////////////////////////

  Json to_json(DefiningGraph const& g, FormalWord const& w) {
    Json out = Json::array();
    for (auto const& l : w.letters()) {
      if (l.kind == Letter::Kind::generator) {
        out.push_back({{"gen", g.name(l.payload.front())}, {"exp", l.exponent}});
      } else {
        out.push_back({{"garside", set_to_json(g, l.payload)}, {"exp", l.exponent}});
      }
    }
    return out;
  }

  FormalWord word_from_json(DefiningGraph const& g, Json const& j) {
    if (!j.is_array()) {
      throw ParseError("a word is an array of letters");
    }
    FormalWord w;
    for (auto const& x : j) {
      auto e = exponent_from_json(x);
      if (x.contains("gen")) {
        w.push_back(Letter::generator(vertex_from_json(g, x["gen"]), e));
      } else if (x.contains("garside")) {
        auto J = set_from_json(g, x["garside"]);
        if (J.empty()) {
          throw ParseError("empty Garside letter");
        }
        w.push_back(Letter::garside(J, e));
      } else {
        throw ParseError("letter needs \"gen\" or \"garside\"");
      }
    }
    return w;
  }

  Json to_json(DefiningGraph const& g, TwistMove const& m) {
    Json pi = Json::object();
    for (auto v : m.J.to_vector()) {
      pi[g.name(v)] = g.name(m.pi[v]);
    }
    return {{"J", set_to_json(g, m.J)},
            {"J_perp", set_to_json(g, m.J_perp)},
            {"B", set_to_json(g, m.B)},
            {"C", set_to_json(g, m.C)},
            {"pi", pi},
            {"exponent", m.exponent}};
  }

  Json to_json(DefiningGraph const& g, TwistSequence const& s) {
    Json steps = Json::array();
    for (auto const& st : s.steps) {
      if (st.kind == TwistStep::Kind::twist) {
        Json t = {{"type", "twist"},
                  {"J", set_to_json(g, st.move.J)},
                  {"B", set_to_json(g, st.move.B)}};
        if (st.move.exponent != 1) {
          t["exponent"] = st.move.exponent;
        }
        steps.push_back(t);
      } else {
        steps.push_back({{"type", "conj"}, {"word", to_json(g, st.word)}});
      }
    }
    Json conj = Json::object();
    for (std::size_t v = 0; v < s.conjugators.size() && v < g.size(); ++v) {
      conj[g.name(v)] = to_json(g, s.conjugators[v]);
    }
    return {{"steps", steps}, {"conjugators", conj}};
  }

  TwistSequence sequence_from_json(DefiningGraph const& g, Json const& j) {
    Json const& steps = j.is_object() ? j.value("steps", Json()) : j;
    if (!steps.is_array()) {
      throw ParseError("a twist sequence needs a \"steps\" array");
    }
    TwistSequence out;
    for (auto const& st : steps) {
      auto type = get<std::string>(st, "type");
      if (type == "twist") {
        TwistMove m;
        m.J        = set_from_json(g, st.value("J", Json()));
        m.B        = set_from_json(g, st.value("B", Json()));
        m.exponent = st.value("exponent", 1);
        if (m.exponent != 1 && m.exponent != -1) {
          throw ParseError("twist exponent must be 1 or -1");
        }
        out.steps.push_back(TwistStep::twist(m));
      } else if (type == "conj") {
        out.steps.push_back(TwistStep::conjugation(word_from_json(g, st.value("word", Json()))));
      } else {
        throw ParseError("unknown step type \"" + type + "\"");
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ribbons
  ////////////////////////////////////////////////////////////////////////

  Json to_json(DefiningGraph const& g, RibbonLetter const& l) {
    Json out = {{"kind", kind_name(l.kind)}, {"x", g.name(l.x)}};
    switch (l.kind) {
      case RibbonLetter::Kind::odd_garside:
        out["y"] = g.name(l.y);
        break;
      case RibbonLetter::Kind::even_garside:
      case RibbonLetter::Kind::commuting_generator:
        out["t"] = g.name(l.y);
        break;
      case RibbonLetter::Kind::self_generator:
        break;
    }
    out["exp"] = l.exponent;
    return out;
  }

  Json to_json(DefiningGraph const& g, std::vector<RibbonLetter> const& letters) {
    Json out = Json::array();
    for (auto const& l : letters) {
      out.push_back(to_json(g, l));
    }
    return out;
  }

  std::vector<RibbonLetter> ribbon_from_json(DefiningGraph const& g, Json const& j) {
    Json const& letters = j.is_object() ? j.value("letters", Json()) : j;
    if (!letters.is_array()) {
      throw ParseError("a ribbon word is an array of letters");
    }
    std::vector<RibbonLetter> out;
    for (auto const& x : letters) {
      auto kind = get<std::string>(x, "kind");
      auto v    = vertex_from_json(g, x.value("x", Json()));
      auto e    = exponent_from_json(x);
      if (kind == "odd_garside") {
        out.push_back(RibbonLetter::odd(v, vertex_from_json(g, x.value("y", Json())), e));
      } else if (kind == "self_generator") {
        out.push_back(RibbonLetter::self(v, e));
      } else if (kind == "even_garside") {
        out.push_back(RibbonLetter::even(v, vertex_from_json(g, x.value("t", Json())), e));
      } else if (kind == "commuting_generator") {
        out.push_back(
            RibbonLetter::commuting(v, vertex_from_json(g, x.value("t", Json())), e));
      } else {
        throw ParseError("unknown ribbon letter kind \"" + kind + "\"");
      }
    }
    return out;
  }

  Json to_json(DefiningGraph const& g, RibbonWord const& w) {
    return {{"source", g.name(w.source())},
            {"target", g.name(w.target())},
            {"chain", names_of(g, w.chain())},
            {"letters", to_json(g, w.letters())},
            {"word", to_json(g, w.as_word())}};
  }

  DehnTwistSpec dehn_spec_from_json(DefiningGraph const& g, Json const& j) {
    DehnTwistSpec spec;
    spec.r = vertex_from_json(g, j.value("r", Json()));
    spec.B = set_from_json(g, j.value("B", Json()));
    if (j.contains("C")) {
      spec.C = set_from_json(g, j["C"]);
    } else {
      spec.C = g.all() - spec.B;
      spec.C.erase(spec.r);
    }
    spec.h = ribbon_from_json(g, j.value("h", Json()));
    return spec;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphs of groups
  ////////////////////////////////////////////////////////////////////////

  namespace {

    NodeColour colour_from(std::string const& s) {
      for (auto c : {NodeColour::black, NodeColour::white, NodeColour::plain}) {
        if (s == colour_name(c)) {
          return c;
        }
      }
      throw ParseError("unknown node colour \"" + s + "\"");
    }

    Json spec_json(DefiningGraph const& g, ExpandSpec const& s) {
      return {{"keep", set_to_json(g, s.keep)},
              {"split", set_to_json(g, s.split)},
              {"link_group", set_to_json(g, s.link_group)},
              {"moved", s.moved},
              {"colour", colour_name(s.colour)}};
    }

  }  // namespace

  Json to_json(GraphOfGroups const& G) {
    auto const& g     = G.base();
    Json        nodes = Json::array();
    for (auto const& n : G.nodes()) {
      nodes.push_back(
          {{"id", n.id}, {"colour", colour_name(n.colour)}, {"group", set_to_json(g, n.group)}});
    }
    Json links = Json::array();
    for (auto const& l : G.links()) {
      links.push_back(
          {{"id", l.id}, {"u", l.u}, {"v", l.v}, {"group", set_to_json(g, l.group)}});
    }
    Json log = Json::array();
    for (auto const& m : G.log()) {
      log.push_back({{"kind", m.kind == GogMove::Kind::collapse ? "collapse" : "expand"},
                     {"link", m.link},
                     {"kept", m.kept},
                     {"other", m.other},
                     {"spec", spec_json(g, m.spec)}});
    }
    return {{"base", graph_to_json(g)},
            {"nodes", nodes},
            {"links", links},
            {"betti", G.betti()},
            {"log", log}};
  }

  GraphOfGroups gog_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("base")) {
      throw ParseError("a graph of groups needs a \"base\" graph");
    }
    auto                 g = graph_from_json(j["base"]);
    std::vector<GogNode> nodes;
    for (auto const& n : j.value("nodes", Json::array())) {
      nodes.push_back({get<std::size_t>(n, "id"),
                       colour_from(n.value("colour", std::string("plain"))),
                       set_from_json(g, n.value("group", Json()))});
    }
    std::vector<GogLink> links;
    for (auto const& l : j.value("links", Json::array())) {
      links.push_back({get<std::size_t>(l, "id"),
                       get<std::size_t>(l, "u"),
                       get<std::size_t>(l, "v"),
                       set_from_json(g, l.value("group", Json()))});
    }
    try {
      return GraphOfGroups(g, std::move(nodes), std::move(links));
    } catch (Error const& e) {
      throw ParseError(e.what());
    }
  }

  ExpandSpec expand_spec_from_json(DefiningGraph const& g, Json const& j) {
    ExpandSpec s;
    s.keep       = set_from_json(g, j.value("keep", Json()));
    s.split      = set_from_json(g, j.value("split", Json()));
    s.link_group = set_from_json(g, j.value("link_group", Json()));
    s.moved      = j.value("moved", std::vector<std::size_t>{});
    s.colour     = colour_from(j.value("colour", std::string("plain")));
    return s;
  }

  std::string to_dot(GraphOfGroups const& G) {
    auto const&        g = G.base();
    std::ostringstream os;
    auto               group = [&](VertexSet s) {
      std::string out;
      for (auto v : s.to_vector()) {
        out += (out.empty() ? "" : ",") + g.name(v);
      }
      return "<" + out + ">";
    };
    os << "graph gog {\n";
    for (auto const& n : G.nodes()) {
      os << "  n" << n.id << " [label=\"" << group(n.group) << "\"";
      if (n.colour == NodeColour::black) {
        os << ", style=filled, fillcolor=black, fontcolor=white";
      } else if (n.colour == NodeColour::white) {
        os << ", shape=circle";
      }
      os << "];\n";
    }
    for (auto const& l : G.links()) {
      os << "  n" << l.u << " -- n" << l.v << " [label=\"" << group(l.group)
         << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  Json to_json(DefiningGraph const& g, Verdict const& v) {
    Json chunks = Json::array();
    for (auto const& c : v.chunks) {
      chunks.push_back({{"chunk", set_to_json(g, c.chunk)},
                        {"class", c.label ? Json(c.label->to_string()) : Json()}});
    }
    Json cliques = Json::array();
    for (auto const& c : v.cliques) {
      cliques.push_back({{"clique", set_to_json(g, c.clique)},
                         {"certified", c.certified},
                         {"reason", c.reason}});
    }
    return {{"level", level_name(v.level)},
            {"chunks", chunks},
            {"cliques", cliques},
            {"reasons", v.reasons}};
  }

  std::string hex(std::string const& bytes) {
    static char const digits[] = "0123456789abcdef";
    std::string       out;
    out.reserve(2 * bytes.size());
    for (unsigned char c : bytes) {
      out += digits[c >> 4];
      out += digits[c & 15];
    }
    return out;
  }

  Json to_json(Orbit const& o) {
    Json certs = Json::array();
    for (auto const& n : o.nodes) {
      certs.push_back(hex(n.certificate));
    }
    return {{"size", o.nodes.size()}, {"truncated", o.truncated}, {"certificates", certs}};
  }

  Json to_json(DefiningGraph const& g1, DefiningGraph const& g2, Equivalence const& e) {
    static char const* const answers[] = {"yes", "no", "inconclusive"};
    Json out = {{"answer", answers[static_cast<int>(e.answer)]}, {"reason", e.reason}};
    if (e.answer == Equivalence::Answer::yes) {
      out["witness"] = to_json(g1, e.witness);
      out["length"]  = e.witness.steps.size();
      Json iso       = Json::object();
      for (std::size_t v = 0; v < e.final_isomorphism.size(); ++v) {
        iso[g1.name(v)] = g2.name(e.final_isomorphism[v]);
      }
      out["final_isomorphism"] = iso;
    }
    return out;
  }

}  // namespace artin::io
