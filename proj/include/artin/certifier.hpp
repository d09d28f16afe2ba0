#ifndef ARTIN_CERTIFIER_HPP_
#define ARTIN_CERTIFIER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace artin {

  // Chunk classes for which strong twist rigidity is known.
  enum class ChunkClass {
    dihedral,
    right_angled,
    large_triangle_free,
    large_free_of_infinity,
    xxxl,
    spherical_A,
    spherical_B,
    spherical_D,
  };

  struct ChunkLabel {
    ChunkClass  cls;
    std::size_t rank = 0;  // n for the spherical families

    [[nodiscard]] std::string to_string() const;  // e.g. "spherical_D4"
    friend bool operator==(ChunkLabel const&, ChunkLabel const&) = default;
  };

  // First matching class in the order dihedral, right_angled,
  // large_triangle_free, large_free_of_infinity, xxxl, spherical A_n (n >= 3),
  // B_n (n >= 3), D_n (n >= 4, n != 5).
  std::optional<ChunkLabel> chunk_class(DefiningGraph const& g, VertexSet chunk);

  struct CertifyOptions {
    // Largest graph the clique enumeration accepts.
    std::size_t max_vertices = 16;
  };

  // Maximal cliques by Bron-Kerbosch with pivoting, sorted.
  std::vector<VertexSet> maximal_cliques(DefiningGraph const&  g,
                                         CertifyOptions const& opts = {});

  struct CliqueStatus {
    VertexSet   clique;
    bool        certified = false;
    std::string reason;  // "spherical", "large-type", "right-angled" or why not
  };

  // A clique has the vertex ribbon property if its system is spherical,
  // large-type or right-angled.
  std::vector<CliqueStatus> clique_ribbon_certified(DefiningGraph const&  g,
                                                    CertifyOptions const& opts = {});

  struct ChunkStatus {
    VertexSet                 chunk;
    std::optional<ChunkLabel> label;
  };

  struct Verdict {
    enum class Level { strong_certified, weak_certified, not_certified };

    Level                     level = Level::not_certified;
    std::vector<ChunkStatus>  chunks;
    std::vector<CliqueStatus> cliques;
    std::vector<std::string>  reasons;
  };

  char const* level_name(Verdict::Level l);

  // A sufficient-condition check: not_certified only means the hypotheses
  // are not met.  Throws Error unless g is one-ended.
  Verdict strong_twist_verdict(DefiningGraph const& g, CertifyOptions const& opts = {});

}  // namespace artin

#endif  // ARTIN_CERTIFIER_HPP_
