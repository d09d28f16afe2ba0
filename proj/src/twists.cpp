#include "artin/twists.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>
#include <unordered_map>

#include "artin/canonical.hpp"
#include "artin/coxeter.hpp"

namespace artin {

  namespace {

    VertexSet perp_of(DefiningGraph const& g, VertexSet J) {
      VertexSet perp;
      for (auto s : (g.all() - J).to_vector()) {
        bool commutes = true;
        for (auto j : J.to_vector()) {
          if (g.raw_label(s, j) != 2) {
            commutes = false;
            break;
          }
        }
        if (commutes) {
          perp.insert(s);
        }
      }
      return perp;
    }

    bool joined(DefiningGraph const& g, VertexSet X, VertexSet Y) {
      for (auto x : X.to_vector()) {
        if (g.neighbours(x).intersects(Y)) {
          return true;
        }
      }
      return false;
    }

    bool is_identity_on(std::vector<std::size_t> const& pi, VertexSet J) {
      for (auto j : J.to_vector()) {
        if (pi[j] != j) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::optional<std::string> check_move(DefiningGraph const& g, VertexSet J,
                                        VertexSet B) {
    if (J.empty() || !J.is_subset_of(g.all())) {
      return "J must be a nonempty set of vertices";
    }
    if (!is_indecomposable(g, J) || !is_spherical(g, J)) {
      return "J = " + g.to_string(J) + " is not spherical and indecomposable";
    }
    auto const rest = g.all() - J - perp_of(g, J);
    if (B.empty() || !B.is_subset_of(rest)) {
      return "B = " + g.to_string(B) + " must be a nonempty subset of "
             + g.to_string(rest);
    }
    auto const C = rest - B;
    if (C.empty()) {
      return "C would be empty";
    }
    if (joined(g, B, C)) {
      return "B = " + g.to_string(B) + " is adjacent to C = " + g.to_string(C);
    }
    return std::nullopt;
  }

  TwistMove make_move(DefiningGraph const& g, VertexSet J, VertexSet B,
                      int exponent) {
    if (auto why = check_move(g, J, B)) {
      throw InvalidMove("invalid twist: " + *why);
    }
    TwistMove m;
    m.J        = J;
    m.J_perp   = perp_of(g, J);
    m.B        = B;
    m.C        = g.all() - J - m.J_perp - B;
    m.pi       = longest_element_automorphism(g, J);
    m.exponent = exponent;
    return m;
  }

  namespace {

    // Extends a spherical clique by larger vertex indices; spherical
    // subsets are closed under taking subsets, so the search prunes there.
    void spherical_cliques(DefiningGraph const& g, VertexSet current,
                           std::size_t next, std::size_t cap,
                           std::vector<VertexSet>& out) {
      if (!current.empty() && is_indecomposable(g, current)) {
        out.push_back(current);
      }
      if (cap != 0 && current.size() >= cap) {
        return;
      }
      for (auto v = next; v < g.size(); ++v) {
        auto nb = g.neighbours(v);
        if (!current.is_subset_of(nb)) {
          continue;
        }
        auto bigger = current | VertexSet::singleton(v);
        if (is_spherical(g, bigger)) {
          spherical_cliques(g, bigger, v + 1, cap, out);
        }
      }
    }

  }  // namespace

  std::vector<TwistMove> enumerate_twists(DefiningGraph const&    g,
                                          EnumerateOptions const& opts) {
    std::vector<VertexSet> js;
    spherical_cliques(g, VertexSet(), 0, opts.max_j_size, js);
    std::sort(js.begin(), js.end());
    std::vector<TwistMove> out;
    for (auto J : js) {
      auto const perp  = perp_of(g, J);
      auto const rest  = g.all() - J - perp;
      auto const comps = components(g, rest);
      if (comps.size() < 2) {
        continue;
      }
      auto const pi = longest_element_automorphism(g, J);
      // comps[0] holds the least vertex of rest; it always goes to B.
      auto const k = comps.size() - 1;
      for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t(1) << k); ++mask) {
        VertexSet B = comps[0];
        for (std::size_t i = 0; i < k; ++i) {
          if ((mask >> i) & 1U) {
            B |= comps[i + 1];
          }
        }
        out.push_back({J, perp, B, rest - B, pi, 1});
      }
    }
    return out;
  }

  namespace {

    DefiningGraph rewire(DefiningGraph const& g, TwistMove const& move) {
      std::vector<Edge> edges;
      for (auto e : g.edges()) {
        if (move.B.contains(e.u) && move.J.contains(e.v)) {
          e.v = move.pi[e.v];
        } else if (move.B.contains(e.v) && move.J.contains(e.u)) {
          e.u = move.pi[e.u];
        }
        edges.push_back(e);
      }
      return DefiningGraph(g.names(), edges);
    }

  }  // namespace

  DefiningGraph apply_twist(DefiningGraph const& g, TwistMove const& move) {
    auto fresh = make_move(g, move.J, move.B, move.exponent);
    if (fresh != move) {
      throw InvalidMove("twist data does not match the graph");
    }
    return rewire(g, fresh);
  }

  MarkedGeneratingSet MarkedGeneratingSet::fresh(DefiningGraph const& g) {
    MarkedGeneratingSet s;
    s.current = g;
    s.base.resize(g.size());
    std::iota(s.base.begin(), s.base.end(), 0);
    s.conjugator.assign(g.size(), FormalWord());
    return s;
  }

  namespace {

    // Delta_J of the current generators, as a word in the original ones.
    // When every vertex of J carries the same conjugator c this is
    // c Delta c^{-1}; otherwise a positive word for Delta is expanded letter
    // by letter.
    FormalWord current_garside(MarkedGeneratingSet const& state, VertexSet J,
                               int exponent) {
      auto const verts = J.to_vector();
      VertexSet  base_j;
      bool       shared = true;
      for (auto j : verts) {
        base_j.insert(state.base[j]);
        shared = shared && state.conjugator[j] == state.conjugator[verts[0]];
      }
      FormalWord delta;
      if (shared) {
        auto const& c = state.conjugator[verts[0]];
        delta = c * FormalWord({Letter::garside(base_j, exponent)}) * c.inverse();
        return delta;
      }
      for (auto j : longest_element_word(state.current, J)) {
        auto const& c = state.conjugator[j];
        delta = delta * c * FormalWord({Letter::generator(state.base[j])}) * c.inverse();
      }
      return exponent < 0 ? delta.inverse() : delta;
    }

  }  // namespace

  MarkedGeneratingSet apply_twist_marked(MarkedGeneratingSet const& state,
                                         TwistMove const&           move) {
    auto next    = state;
    next.current = apply_twist(state.current, move);
    auto delta   = current_garside(state, move.J, move.exponent);
    for (auto b : move.B.to_vector()) {
      next.conjugator[b] = delta * state.conjugator[b];
    }
    return next;
  }

  MarkedGeneratingSet apply_conjugation(MarkedGeneratingSet const& state,
                                        FormalWord const&          word) {
    auto next = state;
    for (auto& c : next.conjugator) {
      c = word * c;
    }
    return next;
  }

  MarkedGeneratingSet replay(DefiningGraph const& g, TwistSequence const& seq) {
    auto state = MarkedGeneratingSet::fresh(g);
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
      auto const& step = seq.steps[i];
      if (step.kind == TwistStep::Kind::conjugation) {
        state = apply_conjugation(state, step.word);
        continue;
      }
      if (auto why = check_move(state.current, step.move.J, step.move.B)) {
        throw StepFailure("step " + std::to_string(i) + ": " + *why, i,
                          state.current);
      }
      auto move = make_move(state.current, step.move.J, step.move.B,
                            step.move.exponent);
      state     = apply_twist_marked(state, move);
    }
    return state;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orbit search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct Successor {
      std::string   certificate;
      DefiningGraph graph;
      TwistMove     move;
    };

    std::vector<Successor> successors(DefiningGraph const& g) {
      std::vector<Successor> out;
      for (auto& move : enumerate_twists(g)) {
        if (is_identity_on(move.pi, move.J)) {
          continue;
        }
        auto next = rewire(g, move);
        auto cert = certificate(next);
        out.push_back({std::move(cert), std::move(next), std::move(move)});
      }
      return out;
    }

    // Expands every node of `layer` (indices into nodes); results are in
    // layer order regardless of the number of jobs.
    std::vector<std::vector<Successor>>
    expand_layer(std::vector<OrbitNode> const& nodes,
                 std::vector<std::size_t> const& layer, std::size_t jobs) {
      std::vector<std::vector<Successor>> out(layer.size());
      jobs = std::max<std::size_t>(1, std::min(jobs, layer.size()));
      if (jobs == 1) {
        for (std::size_t i = 0; i < layer.size(); ++i) {
          out[i] = successors(nodes[layer[i]].representative);
        }
        return out;
      }
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < jobs; ++t) {
        pool.emplace_back([&, t] {
          for (std::size_t i = t; i < layer.size(); i += jobs) {
            out[i] = successors(nodes[layer[i]].representative);
          }
        });
      }
      for (auto& th : pool) {
        th.join();
      }
      return out;
    }

    void require_connected(DefiningGraph const& g, char const* what) {
      if (!is_connected(g)) {
        throw Error(std::string(what) + ": graph must be connected");
      }
    }

    struct SearchSide {
      std::vector<OrbitNode>                       nodes;
      std::unordered_map<std::string, std::size_t> index;
      std::vector<std::size_t>                     frontier;

      explicit SearchSide(DefiningGraph const& g) {
        auto cert = certificate(g);
        nodes.push_back({cert, g, std::nullopt, std::nullopt});
        index.emplace(std::move(cert), 0);
        frontier.push_back(0);
      }

      // Moves from the root to node i, in application order.
      [[nodiscard]] std::vector<std::size_t> path_to(std::size_t i) const {
        std::vector<std::size_t> path;
        while (nodes[i].parent) {
          path.push_back(i);
          i = *nodes[i].parent;
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
    };

  }  // namespace

  Orbit twist_orbit(DefiningGraph const& g, OrbitOptions const& opts) {
    require_connected(g, "twist_orbit");
    SearchSide side(g);
    Orbit      orbit;
    while (!side.frontier.empty()) {
      auto layer = std::move(side.frontier);
      side.frontier.clear();
      auto expanded = expand_layer(side.nodes, layer, opts.jobs);
      for (std::size_t i = 0; i < layer.size(); ++i) {
        for (auto& s : expanded[i]) {
          if (side.index.contains(s.certificate)) {
            continue;
          }
          if (side.nodes.size() >= opts.node_budget) {
            orbit.truncated = true;
            orbit.nodes     = std::move(side.nodes);
            return orbit;
          }
          side.index.emplace(s.certificate, side.nodes.size());
          side.frontier.push_back(side.nodes.size());
          side.nodes.push_back({std::move(s.certificate), std::move(s.graph),
                                layer[i], std::move(s.move)});
        }
      }
    }
    orbit.nodes = std::move(side.nodes);
    return orbit;
  }

  namespace {

    TwistMove map_move(TwistMove const& m, std::vector<std::size_t> const& f) {
      auto map_set = [&](VertexSet s) {
        VertexSet out;
        for (auto v : s.to_vector()) {
          out.insert(f[v]);
        }
        return out;
      };
      TwistMove out = m;
      out.J         = map_set(m.J);
      out.J_perp    = map_set(m.J_perp);
      out.B         = map_set(m.B);
      out.C         = map_set(m.C);
      for (std::size_t v = 0; v < f.size(); ++v) {
        out.pi[f[v]] = f[m.pi[v]];
      }
      return out;
    }

    TwistSequence build_witness(SearchSide const& from, std::size_t meet_from,
                                SearchSide const& to, std::size_t meet_to) {
      TwistSequence seq;
      for (auto i : from.path_to(meet_from)) {
        seq.steps.push_back(TwistStep::twist(*from.nodes[i].move));
      }
      // phi maps the target side's meeting graph onto ours.
      auto phi = is_isomorphic(to.nodes[meet_to].representative,
                               from.nodes[meet_from].representative);
      auto back = to.path_to(meet_to);
      for (auto it = back.rbegin(); it != back.rend(); ++it) {
        // A twist is undone by the same (J, B) on the resulting graph.
        auto m     = map_move(*to.nodes[*it].move, *phi);
        m.exponent = -m.exponent;
        seq.steps.push_back(TwistStep::twist(std::move(m)));
      }
      return seq;
    }

  }  // namespace

  Equivalence are_twist_equivalent(DefiningGraph const& g1,
                                   DefiningGraph const& g2,
                                   OrbitOptions const&  opts) {
    require_connected(g1, "are_twist_equivalent");
    require_connected(g2, "are_twist_equivalent");
    Equivalence out;
    if (g1.size() != g2.size()) {
      out.answer = Equivalence::Answer::no;
      out.reason = "vertex counts differ";
      return out;
    }
    if (g1.label_multiset() != g2.label_multiset()) {
      out.answer = Equivalence::Answer::no;
      out.reason = "edge label multisets differ";
      return out;
    }
    SearchSide                 sides[2] = {SearchSide(g1), SearchSide(g2)};
    std::optional<std::size_t> meet[2];
    if (sides[0].nodes[0].certificate == sides[1].nodes[0].certificate) {
      meet[0] = 0;
      meet[1] = 0;
    }
    while (!meet[0]) {
      if (sides[0].frontier.empty() || sides[1].frontier.empty()) {
        out.answer = Equivalence::Answer::no;
        out.reason = "orbit closed without reaching the other graph";
        return out;
      }
      int const s   = sides[0].frontier.size() <= sides[1].frontier.size() ? 0 : 1;
      auto&     me  = sides[s];
      auto&     you = sides[1 - s];
      auto layer    = std::move(me.frontier);
      me.frontier.clear();
      auto expanded = expand_layer(me.nodes, layer, opts.jobs);
      for (std::size_t i = 0; i < layer.size() && !meet[0]; ++i) {
        for (auto& succ : expanded[i]) {
          if (me.index.contains(succ.certificate)) {
            continue;
          }
          if (sides[0].nodes.size() + sides[1].nodes.size() >= opts.node_budget) {
            out.answer = Equivalence::Answer::inconclusive;
            out.reason = "node budget exhausted";
            return out;
          }
          auto idx = me.nodes.size();
          me.index.emplace(succ.certificate, idx);
          me.frontier.push_back(idx);
          auto hit = you.index.find(succ.certificate);
          me.nodes.push_back({std::move(succ.certificate), std::move(succ.graph),
                              layer[i], std::move(succ.move)});
          if (hit != you.index.end()) {
            meet[s]     = idx;
            meet[1 - s] = hit->second;
            break;
          }
        }
      }
    }
    out.answer  = Equivalence::Answer::yes;
    out.witness = build_witness(sides[0], *meet[0], sides[1], *meet[1]);
    auto state  = replay(g1, out.witness);
    out.witness.conjugators = state.conjugator;
    auto f = is_isomorphic(state.current, g2);
    if (!f) {
      throw Error("are_twist_equivalent: witness does not reach the target");
    }
    out.final_isomorphism = std::move(*f);
    return out;
  }

}  // namespace artin
