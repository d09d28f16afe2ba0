#ifndef ARTIN_COXETER_HPP_
#define ARTIN_COXETER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "word.hpp"

namespace artin {

  // The bilinear form of the Coxeter system on a vertex subset J: 1 on the
  // diagonal, -cos(pi/m) off it, and -1 for m = infinity.  Entries are kept
  // as labels so that exact arithmetic can be done on demand.
  class GramMatrix {
   public:
    GramMatrix(DefiningGraph const& g, VertexSet subset);

    [[nodiscard]] std::size_t size() const noexcept {
      return _order.size();
    }
    // Vertices of the defining graph, in row order.
    [[nodiscard]] std::vector<std::size_t> const& vertices() const noexcept {
      return _order;
    }
    // 1 on the diagonal, m for a finite label, 0 for infinity.
    [[nodiscard]] int label(std::size_t i, std::size_t j) const {
      return _labels[i * size() + j];
    }
    [[nodiscard]] double at(std::size_t i, std::size_t j) const;

    // Determinant of the leading k x k block in floating point.
    [[nodiscard]] double leading_minor(std::size_t k) const;

    // Exact zero test for the leading k x k minor, using arithmetic in the
    // cyclotomic ring containing every 2cos(pi/m).  nullopt when the ring
    // would be too large (lcm of the labels above the built-in cap).
    [[nodiscard]] std::optional<bool> leading_minor_is_zero(std::size_t k) const;

   private:
    std::vector<std::size_t> _order;
    std::vector<int>         _labels;
  };

  inline GramMatrix gram_matrix(DefiningGraph const& g, VertexSet subset) {
    return GramMatrix(g, subset);
  }

  // Symmetric tolerance on leading minors before the exact test is consulted.
  inline constexpr double minor_tolerance = 1e-9;

  // The Coxeter group of J is finite iff its Gram matrix is positive definite.
  bool is_spherical(DefiningGraph const& g, VertexSet subset);

  // Components of the graph on J whose edges are pairs with m != 2
  // (infinity counts as an edge).
  std::vector<VertexSet> indecomposable_factors(DefiningGraph const& g,
                                                VertexSet            subset);

  inline bool is_indecomposable(DefiningGraph const& g, VertexSet subset) {
    return !subset.empty() && indecomposable_factors(g, subset).size() == 1;
  }

  enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

  struct FiniteType {
    Family      family;
    std::size_t parameter;  // rank, or m for I2(m)

    [[nodiscard]] std::string to_string() const;
    friend bool operator==(FiniteType const&, FiniteType const&) = default;
  };

  // Classification of a spherical indecomposable subset.  A rank-2 subset is
  // always reported as I2(m), including m = 3, 4, 6.  nullopt if J is not
  // spherical or not indecomposable.
  std::optional<FiniteType> finite_type(DefiningGraph const& g, VertexSet subset);

  // One entry of the hardcoded classification table (rank >= 3), in the
  // defining-graph convention: pairs not joined in the Coxeter diagram carry
  // label 2.
  struct FiniteTypeEntry {
    FiniteType               type;
    DefiningGraph            graph;
    std::vector<std::size_t> w0_automorphism;
  };
  // All table entries of rank 3..max_rank.
  std::vector<FiniteTypeEntry> const& finite_type_table();
  inline constexpr std::size_t        finite_type_table_max_rank = 16;

  // The diagram automorphism of J induced by conjugation by Delta_J, as a
  // permutation of all vertices of g fixing everything outside J.  Throws
  // Error if J is not spherical and indecomposable.
  std::vector<std::size_t> longest_element_automorphism(DefiningGraph const& g,
                                                        VertexSet subset);

  // Delta_J written out: the generator for |J| = 1, prod(a, b, m) for
  // |J| = 2 (a the smaller index), and a single symbolic letter otherwise.
  FormalWord garside_word(DefiningGraph const& g, VertexSet subset);

  // A reduced word for the longest element of W_J, as vertex indices.  Read
  // as a positive word in the generators it spells Delta_J.
  std::vector<std::size_t> longest_element_word(DefiningGraph const& g,
                                                VertexSet            subset);

  struct CoxeterClass {
    bool spherical        = false;
    bool right_angled     = false;
    bool large_type       = false;
    bool xxxl             = false;
    bool triangle_free    = false;
    bool free_of_infinity = false;
    bool dihedral         = false;
    bool indecomposable   = false;
    // One entry per indecomposable factor of finite type.
    std::vector<FiniteType> finite_components;
  };

  CoxeterClass classify(DefiningGraph const& g, VertexSet subset);

}  // namespace artin

#endif  // ARTIN_COXETER_HPP_
