#ifndef ARTIN_CANONICAL_HPP_
#define ARTIN_CANONICAL_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace artin {

  struct CanonicalOptions {
    // Graphs larger than this are rejected; the search is exponential in the
    // worst case.
    std::size_t max_vertices = 16;
  };

  struct CanonicalForm {
    // Byte string; equal for two graphs iff they are isomorphic as labelled
    // graphs.  Vertex names do not enter.
    std::string certificate;
    // position[v] is the place of vertex v in the canonical ordering.
    std::vector<std::size_t> position;
  };

  CanonicalForm canonical_form(DefiningGraph const&    g,
                               CanonicalOptions const& opts = {});

  inline std::string certificate(DefiningGraph const& g) {
    return canonical_form(g).certificate;
  }

  // A label-preserving bijection f (f[v] is the image in g2 of vertex v of
  // g1), or nullopt when the graphs are not isomorphic.
  std::optional<std::vector<std::size_t>>
  is_isomorphic(DefiningGraph const& g1, DefiningGraph const& g2);

  // Checks that f is a label-preserving bijection from g1 to g2.
  bool is_isomorphism(DefiningGraph const&             g1,
                      DefiningGraph const&             g2,
                      std::vector<std::size_t> const& f);

}  // namespace artin

#endif  // ARTIN_CANONICAL_HPP_
