#include "artin/word.hpp"

namespace artin {

  std::string FormalWord::to_string(DefiningGraph const& g) const {
    std::string out;
    for (auto const& l : _letters) {
      if (!out.empty()) {
        out += ' ';
      }
      if (l.kind == Letter::Kind::generator) {
        out += g.name(l.payload.front());
      } else {
        out += "D(";
        bool first = true;
        for (auto v : l.payload.to_vector()) {
          out += (first ? "" : ",") + g.name(v);
          first = false;
        }
        out += ')';
      }
      if (l.exponent != 1) {
        out += "^" + std::to_string(l.exponent);
      }
    }
    return out.empty() ? "1" : out;
  }

}  // namespace artin
