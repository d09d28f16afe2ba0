#ifndef ARTIN_DEHN_HPP_
#define ARTIN_DEHN_HPP_

#include <cstddef>
#include <vector>

#include "graph.hpp"
#include "ribbons.hpp"
#include "twists.hpp"

namespace artin {

  // One factor t_i^{epsilon_i} of an (a, a)-ribbon h = t_n^{e_n} ... t_0^{e_0},
  // t_0 being the rightmost letter.  m is 1 for the generator a_i itself,
  // 2 for a commuting generator b_i, and m_{a_i b_i} otherwise.
  struct DecomposedLetter {
    std::size_t a;
    std::size_t b;
    int         m;
    Letter      t;  // exponent +1
    int         epsilon;

    friend bool operator==(DecomposedLetter const&, DecomposedLetter const&) = default;
  };

  // Throws Error unless `letters` is an (a, a)-ribbon in g.
  std::vector<DecomposedLetter>
  decompose_aa_ribbon(DefiningGraph const& g, std::size_t a,
                      std::vector<RibbonLetter> const& letters);

  // Conjugate B by h, h an (r, r)-ribbon; r separates B from C.
  struct DehnTwistSpec {
    std::size_t               r;
    VertexSet                 B;
    VertexSet                 C;
    std::vector<RibbonLetter> h;
  };

  // Throws Error describing the first violated condition, if any.
  void check_dehn_spec(DefiningGraph const& g, DehnTwistSpec const& spec);

  // Writes the Dehn twist as elementary twists.  When h lives on the B side
  // of r, C is conjugated by h^{-1} instead and a global conjugation by h
  // follows; h touching both sides is rejected.  Every step is checked on
  // its intermediate graph; a failure raises StepFailure with the step index
  // and that graph.
  TwistSequence compile_dehn_twist(DefiningGraph const& g, DehnTwistSpec const& spec);

}  // namespace artin

#endif  // ARTIN_DEHN_HPP_
