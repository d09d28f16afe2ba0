#ifndef ARTIN_DECOMPOSITION_HPP_
#define ARTIN_DECOMPOSITION_HPP_

#include <vector>

#include "graph.hpp"

namespace artin {

  // Big chunks are the maximal connected induced subgraphs without a
  // separating vertex.  For a simple graph these are exactly the blocks of
  // the block-cut tree; an isolated vertex is its own chunk.
  struct ChunkDecomposition {
    std::vector<VertexSet> chunks;  // sorted
    VertexSet              separating_vertices;
  };

  // Vertices whose removal disconnects g.  Throws Error if g is disconnected.
  VertexSet separating_vertices(DefiningGraph const& g);

  // Lowpoint (Hopcroft-Tarjan) block decomposition, per component.
  ChunkDecomposition big_chunks(DefiningGraph const& g);

  // Exhaustive enumeration over vertex subsets; exponential, for testing.
  ChunkDecomposition big_chunks_brute_force(DefiningGraph const& g);

  // True iff the induced subgraph on s is connected and has no separating
  // vertex of its own.
  bool is_cut_free(DefiningGraph const& g, VertexSet s);

  // Components of the subgraph keeping only odd-labelled edges.  Two standard
  // generators are conjugate exactly when they share a class.
  std::vector<VertexSet> odd_components(DefiningGraph const& g);

  // Connected with at least two vertices.
  bool is_one_ended(DefiningGraph const& g);

}  // namespace artin

#endif  // ARTIN_DECOMPOSITION_HPP_
