#ifndef ARTIN_WORD_HPP_
#define ARTIN_WORD_HPP_

#include <string>
#include <vector>

#include "graph.hpp"
#include "vertex_set.hpp"

namespace artin {

  // A letter of a formal word: a standard generator s^{+-1}, or the Garside
  // element Delta_J^{+-1} of a spherical indecomposable subset J, kept
  // symbolic.  Delta of a singleton {s} is s, so singletons are always stored
  // as generator letters.
  struct Letter {
    enum class Kind { generator, garside };

    Kind      kind     = Kind::generator;
    VertexSet payload;  // {s} for a generator, J for a Garside letter
    int       exponent = 1;

    static Letter generator(std::size_t v, int exp = 1) {
      return {Kind::generator, VertexSet::singleton(v), exp};
    }
    static Letter garside(VertexSet j, int exp = 1) {
      return {j.size() == 1 ? Kind::generator : Kind::garside, j, exp};
    }

    [[nodiscard]] Letter inverse() const {
      return {kind, payload, -exponent};
    }
    [[nodiscard]] bool cancels(Letter const& other) const {
      return kind == other.kind && payload == other.payload
             && exponent == -other.exponent;
    }
    friend bool operator==(Letter const&, Letter const&) = default;
  };

  // A freely reduced product of letters.
  class FormalWord {
   public:
    FormalWord() = default;
    explicit FormalWord(std::vector<Letter> const& letters) {
      for (auto const& l : letters) {
        push_back(l);
      }
    }

    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }

    // Appends on the right, cancelling against the last letter.
    void push_back(Letter const& l) {
      if (!_letters.empty() && _letters.back().cancels(l)) {
        _letters.pop_back();
      } else {
        _letters.push_back(l);
      }
    }
    // Prepends on the left, cancelling against the first letter.
    void push_front(Letter const& l) {
      if (!_letters.empty() && _letters.front().cancels(l)) {
        _letters.erase(_letters.begin());
      } else {
        _letters.insert(_letters.begin(), l);
      }
    }

    [[nodiscard]] FormalWord inverse() const {
      FormalWord out;
      for (auto it = _letters.rbegin(); it != _letters.rend(); ++it) {
        out._letters.push_back(it->inverse());
      }
      return out;
    }

    friend FormalWord operator*(FormalWord lhs, FormalWord const& rhs) {
      for (auto const& l : rhs._letters) {
        lhs.push_back(l);
      }
      return lhs;
    }

    friend bool operator==(FormalWord const&, FormalWord const&) = default;

    // e.g. "D(a,b) y^-1 b"
    [[nodiscard]] std::string to_string(DefiningGraph const& g) const;

   private:
    std::vector<Letter> _letters;
  };

}  // namespace artin

#endif  // ARTIN_WORD_HPP_
