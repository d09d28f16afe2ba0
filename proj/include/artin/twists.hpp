#ifndef ARTIN_TWISTS_HPP_
#define ARTIN_TWISTS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "word.hpp"

namespace artin {

  // An elementary twist of B around J.  J is spherical and indecomposable,
  // J_perp is everything outside J commuting with all of J, and B, C
  // partition the rest with no edge between them.  `pi` is the diagram
  // automorphism of Delta_J (identity outside J).  The exponent records
  // whether B is conjugated by Delta_J or its inverse; both act the same way
  // on the defining graph.
  struct TwistMove {
    VertexSet                J;
    VertexSet                J_perp;
    VertexSet                B;
    VertexSet                C;
    std::vector<std::size_t> pi;
    int                      exponent = 1;

    friend bool operator==(TwistMove const&, TwistMove const&) = default;
  };

  class InvalidMove : public Error {
   public:
    using Error::Error;
  };

  // Why (J, B) is not a legal twist on g, or nullopt if it is.
  std::optional<std::string> check_move(DefiningGraph const& g, VertexSet J,
                                        VertexSet B);

  // Completes (J, B) to a full move; throws InvalidMove.
  TwistMove make_move(DefiningGraph const& g, VertexSet J, VertexSet B,
                      int exponent = 1);

  struct EnumerateOptions {
    // Largest |J| considered; 0 means no cap.
    std::size_t max_j_size = 0;
  };

  // Every legal move, except that of (J, B) and (J, C) only the one whose B
  // holds the smallest vertex index of B u C is listed: the two results
  // differ by relabelling along pi.
  std::vector<TwistMove> enumerate_twists(DefiningGraph const&    g,
                                          EnumerateOptions const& opts = {});

  // Rewires every edge {b, j}, b in B, j in J, to {b, pi(j)}.  The move is
  // re-derived from (J, B) on g and must match; throws InvalidMove otherwise.
  DefiningGraph apply_twist(DefiningGraph const& g, TwistMove const& move);

  // The generating set as seen from the original one: current vertex v is
  // conjugator[v] * base[v] * conjugator[v]^{-1}.
  struct MarkedGeneratingSet {
    DefiningGraph            current;
    std::vector<std::size_t> base;
    std::vector<FormalWord>  conjugator;

    static MarkedGeneratingSet fresh(DefiningGraph const& g);
  };

  // Prepends Delta_J^{exponent} to the conjugator of each vertex of B, where
  // Delta_J is taken in the current generators of J and written out in the
  // original ones.
  MarkedGeneratingSet apply_twist_marked(MarkedGeneratingSet const& state,
                                         TwistMove const&           move);
  // Prepends `word` to every conjugator; the graph does not change.
  MarkedGeneratingSet apply_conjugation(MarkedGeneratingSet const& state,
                                        FormalWord const&          word);

  struct TwistStep {
    enum class Kind { twist, conjugation };

    Kind       kind = Kind::twist;
    TwistMove  move;  // for twist
    FormalWord word;  // for conjugation

    static TwistStep twist(TwistMove m) {
      return {Kind::twist, std::move(m), {}};
    }
    static TwistStep conjugation(FormalWord w) {
      return {Kind::conjugation, {}, std::move(w)};
    }
  };

  struct TwistSequence {
    std::vector<TwistStep> steps;
    // Cumulative conjugator of each vertex after all steps.
    std::vector<FormalWord> conjugators;
  };

  // Raised when a step of a sequence is not legal on its intermediate graph.
  class StepFailure : public Error {
   public:
    StepFailure(std::string const& what, std::size_t index, DefiningGraph graph)
        : Error(what), _index(index), _graph(std::move(graph)) {}
    [[nodiscard]] std::size_t index() const noexcept {
      return _index;
    }
    [[nodiscard]] DefiningGraph const& graph() const noexcept {
      return _graph;
    }

   private:
    std::size_t   _index;
    DefiningGraph _graph;
  };

  // Re-validates and applies every step from g.  Only J and B of each twist
  // are trusted; the rest is re-derived.  Throws StepFailure.
  MarkedGeneratingSet replay(DefiningGraph const& g, TwistSequence const& seq);

  ////////////////////////////////////////////////////////////////////////
  // Orbits and equivalence
  ////////////////////////////////////////////////////////////////////////

  struct OrbitOptions {
    std::size_t node_budget = 100000;
    // Worker threads used to expand each BFS layer.
    std::size_t jobs = 1;
  };

  struct OrbitNode {
    std::string   certificate;
    DefiningGraph representative;
    // Index of the node this one was reached from, and the move applied to
    // that node's representative.
    std::optional<std::size_t> parent;
    std::optional<TwistMove>   move;
  };

  struct Orbit {
    std::vector<OrbitNode> nodes;
    bool                   truncated = false;
  };

  // Breadth-first closure of {g} under elementary twists, modulo
  // isomorphism.  Stops with truncated = true once node_budget certificates
  // have been found.
  Orbit twist_orbit(DefiningGraph const& g, OrbitOptions const& opts = {});

  struct Equivalence {
    enum class Answer { yes, no, inconclusive };

    Answer        answer = Answer::no;
    TwistSequence witness;  // for yes: replays from g1 onto a copy of g2
    // For yes: isomorphism from the replayed graph onto g2.
    std::vector<std::size_t> final_isomorphism;
    std::string              reason;
  };

  // Bidirectional search between the two orbits.  Both graphs must be
  // connected.
  Equivalence are_twist_equivalent(DefiningGraph const& g1,
                                   DefiningGraph const& g2,
                                   OrbitOptions const&  opts = {});

}  // namespace artin

#endif  // ARTIN_TWISTS_HPP_
