#include "artin/dehn.hpp"

#include <algorithm>

#include "artin/canonical.hpp"

namespace artin {

  std::vector<DecomposedLetter>
  decompose_aa_ribbon(DefiningGraph const& g, std::size_t a,
                      std::vector<RibbonLetter> const& letters) {
    auto check = validate_ribbon(g, letters, a, a);
    if (!check) {
      throw Error("not an (" + (a < g.size() ? g.name(a) : std::string("?")) + ","
                  + (a < g.size() ? g.name(a) : std::string("?"))
                  + ")-ribbon: letter " + std::to_string(check.failing_index) + ": "
                  + check.reason);
    }
    auto const& chain = check.word->chain();
    auto const  n     = letters.size();
    std::vector<DecomposedLetter> out;
    for (std::size_t i = 0; i < n; ++i) {
      // t_i is letter n - 1 - i; a_i is the chain vertex to its right.
      auto const& l  = letters[n - 1 - i];
      auto const  ai = chain[n - i];
      DecomposedLetter d{ai, ai, 1, Letter::generator(ai), l.exponent};
      switch (l.kind) {
        case RibbonLetter::Kind::self_generator:
          break;
        case RibbonLetter::Kind::commuting_generator:
          d.b = l.y;
          d.m = 2;
          d.t = Letter::generator(l.y);
          break;
        case RibbonLetter::Kind::odd_garside:
        case RibbonLetter::Kind::even_garside:
          d.b = l.x == ai ? l.y : l.x;
          d.m = g.raw_label(l.x, l.y);
          d.t = Letter::garside(VertexSet::singleton(l.x) | VertexSet::singleton(l.y));
          break;
      }
      out.push_back(d);
    }
    return out;
  }

  namespace {

    bool touches(DefiningGraph const& g, VertexSet X, VertexSet Y) {
      for (auto x : X.to_vector()) {
        if (g.neighbours(x).intersects(Y)) {
          return true;
        }
      }
      return false;
    }

  }  // namespace

  void check_dehn_spec(DefiningGraph const& g, DehnTwistSpec const& spec) {
    if (spec.r >= g.size()) {
      throw Error("dehn twist: r out of range");
    }
    auto const r = VertexSet::singleton(spec.r);
    if (spec.B.empty() || spec.C.empty()) {
      throw Error("dehn twist: B and C must be nonempty");
    }
    if (spec.B.intersects(spec.C) || (spec.B | spec.C) != g.all() - r) {
      throw Error("dehn twist: B and C must partition the vertices other than "
                  + g.name(spec.r));
    }
    if (touches(g, spec.B, spec.C)) {
      throw Error("dehn twist: an edge joins B to C");
    }
    auto check = validate_ribbon(g, spec.h, spec.r, spec.r);
    if (!check) {
      throw Error("dehn twist: h is not an (" + g.name(spec.r) + "," + g.name(spec.r)
                  + ")-ribbon: letter " + std::to_string(check.failing_index) + ": "
                  + check.reason);
    }
  }

  namespace {

    struct Compiler {
      DefiningGraph const& original;
      TwistSequence        seq;
      MarkedGeneratingSet  state;

      explicit Compiler(DefiningGraph const& g)
          : original(g), state(MarkedGeneratingSet::fresh(g)) {}

      [[noreturn]] void fail(std::string const& what) const {
        throw StepFailure("step " + std::to_string(seq.steps.size()) + ": " + what,
                          seq.steps.size(), state.current);
      }

      // Conjugates `moving` by the ribbon `factor` (an (r, r)-ribbon whose
      // odd loop avoids `moving`), one elementary twist per letter.
      void conjugate_side(std::size_t r, VertexSet moving,
                          std::vector<RibbonLetter> const& factor) {
        auto const& g = original;
        for (auto const& d : decompose_aa_ribbon(original, r, factor)) {
          // a_i separates the moving side from everything else.
          for (auto v : moving.to_vector()) {
            auto outside = state.current.neighbours(v) - moving;
            if (!outside.is_subset_of(VertexSet::singleton(d.a))) {
              fail(g.name(v) + " is attached outside " + g.name(d.a));
            }
          }
          VertexSet J;
          if (d.m == 1) {
            J = VertexSet::singleton(d.a);
          } else if (d.m == 2) {
            J = VertexSet::singleton(d.b);
          } else {
            J = VertexSet::singleton(d.a) | VertexSet::singleton(d.b);
          }
          if (J.intersects(moving)) {
            fail("twist set " + g.to_string(J) + " meets the moving side "
                 + g.to_string(moving));
          }
          auto const perp_free = moving - perp(J);
          if (perp_free.empty()) {
            fail("every vertex of " + g.to_string(moving) + " commutes with "
                 + g.to_string(J));
          }
          if (auto why = check_move(state.current, J, perp_free)) {
            fail(*why);
          }
          auto move = make_move(state.current, J, perp_free, d.epsilon);
          state     = apply_twist_marked(state, move);
          seq.steps.push_back(TwistStep::twist(std::move(move)));
        }
      }

      [[nodiscard]] VertexSet perp(VertexSet J) const {
        VertexSet out;
        for (auto s : (state.current.all() - J).to_vector()) {
          bool all2 = true;
          for (auto j : J.to_vector()) {
            all2 = all2 && state.current.raw_label(s, j) == 2;
          }
          if (all2) {
            out.insert(s);
          }
        }
        return out;
      }

      void conjugate_all(FormalWord const& w) {
        state = apply_conjugation(state, w);
        seq.steps.push_back(TwistStep::conjugation(w));
      }
    };

    // Which side of r a factor lives on: its odd loop and spikes, minus r.
    VertexSet support(DefiningGraph const& g, std::size_t r,
                      std::vector<RibbonLetter> const& factor) {
      VertexSet s;
      for (auto const& d : decompose_aa_ribbon(g, r, factor)) {
        s.insert(d.a);
        s.insert(d.b);
      }
      s.erase(r);
      return s;
    }

  }  // namespace

  TwistSequence compile_dehn_twist(DefiningGraph const& g, DehnTwistSpec const& spec) {
    check_dehn_spec(g, spec);
    auto const chain = validate_ribbon(g, spec.h, spec.r, spec.r).word->chain();

    // Split h = F_1 F_2 ... F_k at interior visits of r to its loop.
    std::vector<std::vector<RibbonLetter>> factors;
    std::size_t                            start = 0;
    for (std::size_t i = 1; i <= spec.h.size(); ++i) {
      if (chain[i] == spec.r) {
        factors.emplace_back(spec.h.begin() + static_cast<std::ptrdiff_t>(start),
                             spec.h.begin() + static_cast<std::ptrdiff_t>(i));
        start = i;
      }
    }

    Compiler  c(g);
    VertexSet supp;
    for (auto const& f : factors) {
      supp |= support(g, spec.r, f);
    }
    if (supp.is_subset_of(spec.C)) {
      // The rightmost factor acts first.
      for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        c.conjugate_side(spec.r, spec.B, *it);
      }
    } else if (supp.is_subset_of(spec.B)) {
      // Conjugating B by h is conjugating C by h^{-1}, then everything by h.
      for (auto const& f : factors) {
        auto inv = invert(g, validate_ribbon(g, f, spec.r, spec.r).word.value());
        c.conjugate_side(spec.r, spec.C, inv.letters());
      }
      FormalWord w;
      for (auto const& l : spec.h) {
        w.push_back(l.as_letter());
      }
      c.conjugate_all(w);
    } else {
      c.fail("h has letters on both sides of " + g.name(spec.r));
    }
    if (!is_isomorphic(c.state.current, g)) {
      throw Error("dehn twist: final graph is not isomorphic to the input: "
                  + serialize_graph(c.state.current));
    }
    c.seq.conjugators = c.state.conjugator;
    return c.seq;
  }

}  // namespace artin
