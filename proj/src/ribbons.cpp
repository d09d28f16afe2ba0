#include "artin/ribbons.hpp"

#include <algorithm>
#include <deque>

namespace artin {

  Letter RibbonLetter::as_letter() const {
    switch (kind) {
      case Kind::odd_garside:
      case Kind::even_garside:
        return Letter::garside(VertexSet::singleton(x) | VertexSet::singleton(y),
                               exponent);
      case Kind::self_generator:
        return Letter::generator(x, exponent);
      case Kind::commuting_generator:
        return Letter::generator(y, exponent);
    }
    return {};
  }

  char const* kind_name(RibbonLetter::Kind k) {
    switch (k) {
      case RibbonLetter::Kind::odd_garside:
        return "odd_garside";
      case RibbonLetter::Kind::self_generator:
        return "self_generator";
      case RibbonLetter::Kind::even_garside:
        return "even_garside";
      case RibbonLetter::Kind::commuting_generator:
        return "commuting_generator";
    }
    return "?";
  }

  FormalWord RibbonWord::as_word() const {
    FormalWord w;
    for (auto const& l : _letters) {
      w.push_back(l.as_letter());
    }
    return w;
  }

  namespace {

    // The vertex the chain moves to, or an explanation of why the letter is
    // not elementary at `at`.
    std::pair<std::optional<std::size_t>, std::string>
    step(DefiningGraph const& g, RibbonLetter const& l, std::size_t at) {
      auto const n = g.size();
      if (l.x >= n || l.y >= n) {
        return {std::nullopt, "vertex out of range"};
      }
      if (l.exponent != 1 && l.exponent != -1) {
        return {std::nullopt, "exponent must be +1 or -1"};
      }
      auto const m = g.raw_label(l.x, l.y);
      switch (l.kind) {
        case RibbonLetter::Kind::odd_garside:
          if (l.x == l.y || m < 3 || m % 2 == 0) {
            return {std::nullopt, "odd_garside needs an odd label >= 3"};
          }
          if (at == l.x) {
            return {l.y, {}};
          }
          if (at == l.y) {
            return {l.x, {}};
          }
          return {std::nullopt, "odd_garside does not touch the chain vertex"};
        case RibbonLetter::Kind::self_generator:
          if (l.x != at || l.y != at) {
            return {std::nullopt, "self_generator must be the chain vertex"};
          }
          return {at, {}};
        case RibbonLetter::Kind::even_garside:
          if (l.x == l.y || m < 4 || m % 2 == 1) {
            return {std::nullopt, "even_garside needs an even label >= 4"};
          }
          if (at != l.x && at != l.y) {
            return {std::nullopt, "even_garside does not touch the chain vertex"};
          }
          return {at, {}};
        case RibbonLetter::Kind::commuting_generator:
          if (m != 2) {
            return {std::nullopt, "commuting_generator needs label 2"};
          }
          if (at != l.x) {
            return {std::nullopt, "commuting_generator is not based at the chain vertex"};
          }
          return {at, {}};
      }
      return {std::nullopt, "unknown letter kind"};
    }

  }  // namespace

  RibbonCheck validate_ribbon(DefiningGraph const&             g,
                              std::vector<RibbonLetter> const& letters,
                              std::size_t                      source,
                              std::size_t                      target) {
    RibbonCheck out;
    if (source >= g.size() || target >= g.size()) {
      out.reason = "endpoint out of range";
      return out;
    }
    std::vector<std::size_t> chain{source};
    for (std::size_t i = 0; i < letters.size(); ++i) {
      auto [next, why] = step(g, letters[i], chain.back());
      if (!next) {
        out.failing_index = i;
        out.reason        = why;
        return out;
      }
      chain.push_back(*next);
    }
    if (chain.back() != target) {
      out.failing_index = letters.size();
      out.reason        = "chain ends at " + g.name(chain.back()) + ", not "
                   + g.name(target);
      return out;
    }
    RibbonWord w;
    w._letters = letters;
    w._chain   = std::move(chain);
    out.word   = std::move(w);
    return out;
  }

  std::vector<std::pair<std::size_t, RibbonLetter>>
  elementary_ribbons(DefiningGraph const& g, std::size_t x) {
    std::vector<std::pair<std::size_t, RibbonLetter>> out;
    for (int e : {1, -1}) {
      out.emplace_back(x, RibbonLetter::self(x, e));
      for (auto t : g.neighbours(x).to_vector()) {
        auto m = g.raw_label(x, t);
        if (m % 2 == 1) {
          out.emplace_back(t, RibbonLetter::odd(x, t, e));
        } else if (m == 2) {
          out.emplace_back(x, RibbonLetter::commuting(x, t, e));
        } else {
          out.emplace_back(x, RibbonLetter::even(x, t, e));
        }
      }
    }
    return out;
  }

  std::optional<RibbonWord> ribbon_witness(DefiningGraph const& g,
                                           std::size_t          s,
                                           std::size_t          t) {
    auto const               n = g.size();
    std::vector<std::size_t> parent(n, n);
    std::deque<std::size_t>  queue{t};
    parent[t] = t;
    while (!queue.empty() && parent[s] == n) {
      auto v = queue.front();
      queue.pop_front();
      for (auto w : g.neighbours(v).to_vector()) {
        if (parent[w] == n && g.raw_label(v, w) % 2 == 1) {
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (parent[s] == n) {
      return std::nullopt;
    }
    // Walk from s towards t; parents point towards t.
    std::vector<RibbonLetter> letters;
    for (auto v = s; v != t; v = parent[v]) {
      letters.push_back(RibbonLetter::odd(v, parent[v]));
    }
    return validate_ribbon(g, letters, s, t).word;
  }

  RibbonWord compose(DefiningGraph const& g, RibbonWord const& lhs,
                     RibbonWord const& rhs) {
    if (lhs.target() != rhs.source()) {
      throw Error("compose: endpoint mismatch (" + g.name(lhs.target()) + " vs "
                  + g.name(rhs.source()) + ")");
    }
    auto letters = lhs.letters();
    letters.insert(letters.end(), rhs.letters().begin(), rhs.letters().end());
    auto check = validate_ribbon(g, letters, lhs.source(), rhs.target());
    if (!check) {
      throw Error("compose: result does not validate: " + check.reason);
    }
    return std::move(*check.word);
  }

  RibbonWord invert(DefiningGraph const& g, RibbonWord const& w) {
    std::vector<RibbonLetter> letters;
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      letters.push_back(it->inverse());
    }
    auto check = validate_ribbon(g, letters, w.target(), w.source());
    if (!check) {
      throw Error("invert: result does not validate: " + check.reason);
    }
    return std::move(*check.word);
  }

}  // namespace artin
