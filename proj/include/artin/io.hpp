#ifndef ARTIN_IO_HPP_
#define ARTIN_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "certifier.hpp"
#include "coxeter.hpp"
#include "decomposition.hpp"
#include "dehn.hpp"
#include "gog.hpp"
#include "ribbons.hpp"
#include "twists.hpp"

// JSON forms of the library's values.  Vertices are always referred to by
// name; readers throw ParseError on malformed input.
namespace artin::io {

  using Json = nlohmann::json;

  Json graph_to_json(DefiningGraph const& g);
  DefiningGraph graph_from_json(Json const& j);

  Json      set_to_json(DefiningGraph const& g, VertexSet s);
  VertexSet set_from_json(DefiningGraph const& g, Json const& j);
  std::size_t vertex_from_json(DefiningGraph const& g, Json const& j);

  Json to_json(DefiningGraph const& g, ChunkDecomposition const& d);
  Json to_json(DefiningGraph const& g, CoxeterClass const& c);

  // [{"gen": "a", "exp": 1}, {"garside": ["a", "b"], "exp": -1}, ...]
  Json       to_json(DefiningGraph const& g, FormalWord const& w);
  FormalWord word_from_json(DefiningGraph const& g, Json const& j);

  Json to_json(DefiningGraph const& g, TwistMove const& m);
  // {"steps": [{"type": "twist", "J": [...], "B": [...]} |
  //            {"type": "conj", "word": [...]}], "conjugators": {...}}
  // A twist carries "exponent": -1 when it conjugates by Delta_J^{-1}.
  Json to_json(DefiningGraph const& g, TwistSequence const& s);
  // Only J, B and the exponent of each twist are read; replay re-derives
  // the rest.
  TwistSequence sequence_from_json(DefiningGraph const& g, Json const& j);

  // [{"kind": "odd_garside", "x": "a", "y": "b", "exp": 1}, ...]; even and
  // commuting letters use "t" for their second vertex.
  Json to_json(DefiningGraph const& g, RibbonLetter const& l);
  Json to_json(DefiningGraph const& g, std::vector<RibbonLetter> const& letters);
  std::vector<RibbonLetter> ribbon_from_json(DefiningGraph const& g, Json const& j);
  Json to_json(DefiningGraph const& g, RibbonWord const& w);

  // {"r": "a", "B": [...], "C": [...], "h": [letters]}; C defaults to the
  // complement of B and r.
  DehnTwistSpec dehn_spec_from_json(DefiningGraph const& g, Json const& j);

  // {"base": graph, "nodes": [...], "links": [...], "log": [...]}.  The log
  // is written for reference and ignored on reading.
  Json          to_json(GraphOfGroups const& G);
  GraphOfGroups gog_from_json(Json const& j);
  ExpandSpec    expand_spec_from_json(DefiningGraph const& g, Json const& j);
  std::string   to_dot(GraphOfGroups const& G);

  Json to_json(DefiningGraph const& g, Verdict const& v);
  Json to_json(Orbit const& o);
  // The final isomorphism is written as a name map from g1 to g2.
  Json to_json(DefiningGraph const& g1, DefiningGraph const& g2,
               Equivalence const& e);

  // Lowercase hex of a canonical certificate.
  std::string hex(std::string const& bytes);

}  // namespace artin::io

#endif  // ARTIN_IO_HPP_
