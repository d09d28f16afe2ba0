#include "artin/canonical.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace artin {

  namespace {

    using Colouring = std::vector<std::size_t>;

    std::size_t count_colours(Colouring const& c) {
      return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    }

    // Refines an ordered partition until equitable.  New colours are ranks of
    // (old colour, multiset of (label, neighbour colour)), so cells only split
    // and keep their relative order.
    void refine(DefiningGraph const& g, Colouring& colour) {
      auto const n      = g.size();
      auto       ncols  = count_colours(colour);
      using Sig         = std::pair<std::size_t, std::vector<std::pair<int, std::size_t>>>;
      std::vector<Sig> sig(n);
      while (true) {
        for (std::size_t v = 0; v < n; ++v) {
          sig[v].first = colour[v];
          sig[v].second.clear();
          for (auto w : g.neighbours(v).to_vector()) {
            sig[v].second.emplace_back(g.raw_label(v, w), colour[w]);
          }
          std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (std::size_t v = 0; v < n; ++v) {
          colour[v] = static_cast<std::size_t>(
              std::lower_bound(sorted.begin(), sorted.end(), sig[v])
              - sorted.begin());
        }
        if (sorted.size() == ncols) {
          return;
        }
        ncols = sorted.size();
      }
    }

    std::string encode(DefiningGraph const& g, Colouring const& position) {
      auto const               n = g.size();
      std::vector<std::size_t> at(n);
      for (std::size_t v = 0; v < n; ++v) {
        at[position[v]] = v;
      }
      std::string out;
      out.reserve(1 + 4 * n * n / 2);
      out.push_back(static_cast<char>(n));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          auto m = static_cast<std::uint32_t>(g.raw_label(at[i], at[j]));
          for (int k = 3; k >= 0; --k) {
            out.push_back(static_cast<char>((m >> (8 * k)) & 0xFF));
          }
        }
      }
      return out;
    }

    bool twins(DefiningGraph const& g, std::size_t u, std::size_t v) {
      for (std::size_t w = 0; w < g.size(); ++w) {
        if (w != u && w != v && g.raw_label(u, w) != g.raw_label(v, w)) {
          return false;
        }
      }
      return true;
    }

    struct Search {
      DefiningGraph const& g;
      std::string          best;
      Colouring            best_position;
      bool                 found = false;

      void run(Colouring colour) {
        refine(g, colour);
        auto const n     = g.size();
        auto const ncols = count_colours(colour);
        if (ncols == n) {
          auto cert = encode(g, colour);
          if (!found || cert < best) {
            best          = std::move(cert);
            best_position = colour;
            found         = true;
          }
          return;
        }
        // First non-singleton cell in colour order.
        std::vector<std::size_t> cell_size(ncols, 0);
        for (auto c : colour) {
          ++cell_size[c];
        }
        std::size_t target = 0;
        while (cell_size[target] == 1) {
          ++target;
        }
        std::vector<std::size_t> cell;
        for (std::size_t v = 0; v < n; ++v) {
          if (colour[v] == target) {
            cell.push_back(v);
          }
        }
        // Swapping two twins in the same cell is an automorphism fixing the
        // current partition, so one representative per twin class suffices.
        std::vector<std::size_t> reps;
        for (auto v : cell) {
          bool seen = std::any_of(reps.begin(), reps.end(), [&](std::size_t r) {
            return twins(g, r, v);
          });
          if (!seen) {
            reps.push_back(v);
          }
        }
        for (auto v : reps) {
          Colouring next = colour;
          for (std::size_t w = 0; w < n; ++w) {
            if (colour[w] > target || (colour[w] == target && w != v)) {
              ++next[w];
            }
          }
          run(std::move(next));
        }
      }
    };

  }  // namespace

  CanonicalForm canonical_form(DefiningGraph const&    g,
                               CanonicalOptions const& opts) {
    if (g.size() > opts.max_vertices) {
      throw Error("canonical_form: " + std::to_string(g.size())
                  + " vertices exceeds the cap of "
                  + std::to_string(opts.max_vertices));
    }
    if (g.size() == 0) {
      return {std::string(1, '\0'), {}};
    }
    Search s{g, {}, {}, false};
    s.run(Colouring(g.size(), 0));
    return {std::move(s.best), std::move(s.best_position)};
  }

  bool is_isomorphism(DefiningGraph const&             g1,
                      DefiningGraph const&             g2,
                      std::vector<std::size_t> const& f) {
    auto const n = g1.size();
    if (g2.size() != n || f.size() != n) {
      return false;
    }
    std::vector<bool> hit(n, false);
    for (auto x : f) {
      if (x >= n || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (g1.raw_label(u, v) != g2.raw_label(f[u], f[v])) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::vector<std::size_t>>
  is_isomorphic(DefiningGraph const& g1, DefiningGraph const& g2) {
    if (g1.size() != g2.size() || g1.label_multiset() != g2.label_multiset()) {
      return std::nullopt;
    }
    auto c1 = canonical_form(g1);
    auto c2 = canonical_form(g2);
    if (c1.certificate != c2.certificate) {
      return std::nullopt;
    }
    auto const               n = g1.size();
    std::vector<std::size_t> at2(n);
    for (std::size_t v = 0; v < n; ++v) {
      at2[c2.position[v]] = v;
    }
    std::vector<std::size_t> f(n);
    for (std::size_t v = 0; v < n; ++v) {
      f[v] = at2[c1.position[v]];
    }
    return f;
  }

}  // namespace artin
