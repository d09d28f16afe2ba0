#ifndef ARTIN_RIBBONS_HPP_
#define ARTIN_RIBBONS_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "word.hpp"

namespace artin {

  // One elementary ribbon.  With c the tracked vertex before the letter:
  //   odd_garside(x, y)          Delta_xy, m_xy >= 3 odd; c in {x, y}, moves c
  //                              to the other endpoint
  //   self_generator(x)          x itself; c == x
  //   even_garside(x, t)         Delta_xt, m_xt >= 4 even; c == x (or t)
  //   commuting_generator(x, t)  the generator t, m_xt == 2; c == x
  // Signs never affect the tracked vertex.
  struct RibbonLetter {
    enum class Kind { odd_garside, self_generator, even_garside, commuting_generator };

    Kind        kind;
    std::size_t x;
    std::size_t y;  // the other endpoint, or t; equal to x for self_generator
    int         exponent = 1;

    static RibbonLetter odd(std::size_t x, std::size_t y, int e = 1) {
      return {Kind::odd_garside, x, y, e};
    }
    static RibbonLetter self(std::size_t x, int e = 1) {
      return {Kind::self_generator, x, x, e};
    }
    static RibbonLetter even(std::size_t x, std::size_t t, int e = 1) {
      return {Kind::even_garside, x, t, e};
    }
    static RibbonLetter commuting(std::size_t x, std::size_t t, int e = 1) {
      return {Kind::commuting_generator, x, t, e};
    }

    [[nodiscard]] RibbonLetter inverse() const {
      return {kind, x, y, -exponent};
    }
    // The group element this letter denotes, as a formal letter.
    [[nodiscard]] Letter as_letter() const;

    friend bool operator==(RibbonLetter const&, RibbonLetter const&) = default;
  };

  char const* kind_name(RibbonLetter::Kind k);

  // A validated ribbon word g_1 ... g_n with its chain x_0, ..., x_n: each
  // g_i is an elementary (x_{i-1}, x_i)-ribbon, so x_0 = g x_n g^{-1}.
  class RibbonWord {
   public:
    [[nodiscard]] std::vector<RibbonLetter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] std::size_t source() const noexcept {
      return _chain.front();
    }
    [[nodiscard]] std::size_t target() const noexcept {
      return _chain.back();
    }
    [[nodiscard]] std::vector<std::size_t> const& chain() const noexcept {
      return _chain;
    }
    [[nodiscard]] FormalWord as_word() const;

   private:
    friend struct RibbonCheck validate_ribbon(DefiningGraph const&,
                                              std::vector<RibbonLetter> const&,
                                              std::size_t,
                                              std::size_t);
    std::vector<RibbonLetter> _letters;
    std::vector<std::size_t>  _chain;
  };

  struct RibbonCheck {
    std::optional<RibbonWord> word;
    std::size_t               failing_index = 0;  // meaningful when !word
    std::string               reason;

    explicit operator bool() const noexcept {
      return word.has_value();
    }
  };

  // Recomputes the chain from `source`; succeeds iff every letter is
  // elementary at its chain vertex and the chain ends at `target`.
  RibbonCheck validate_ribbon(DefiningGraph const&             g,
                              std::vector<RibbonLetter> const& letters,
                              std::size_t                      source,
                              std::size_t                      target);

  // All elementary ribbons at x, both exponents, paired with the vertex the
  // chain moves to.
  std::vector<std::pair<std::size_t, RibbonLetter>>
  elementary_ribbons(DefiningGraph const& g, std::size_t x);

  // Product of odd Garside letters along a shortest odd path from s to t,
  // an (s, t)-ribbon; nullopt when s and t lie in different odd components.
  std::optional<RibbonWord> ribbon_witness(DefiningGraph const& g,
                                           std::size_t          s,
                                           std::size_t          t);

  // Concatenation; throws Error unless lhs.target() == rhs.source().
  RibbonWord compose(DefiningGraph const& g, RibbonWord const& lhs,
                     RibbonWord const& rhs);
  RibbonWord invert(DefiningGraph const& g, RibbonWord const& w);

}  // namespace artin

#endif  // ARTIN_RIBBONS_HPP_
