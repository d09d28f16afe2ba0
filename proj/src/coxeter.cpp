#include "artin/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/canonical.hpp"

namespace artin {

  namespace {

    using boost::multiprecision::cpp_int;

    // Elements of Z[x]/(x^N + 1); x stands for exp(i pi / N).
    class CyclotomicRing {
     public:
      using Element = std::vector<cpp_int>;

      explicit CyclotomicRing(std::size_t n) : _n(n) {}

      [[nodiscard]] Element zero() const {
        return Element(_n, 0);
      }
      [[nodiscard]] Element constant(long c) const {
        auto e = zero();
        e[0]   = c;
        return e;
      }
      // Twice the Gram entry: 2 on the diagonal, -2cos(pi/m), or -2.
      [[nodiscard]] Element twice_gram(int label) const {
        if (label == 1) {
          return constant(2);
        }
        if (label == 0) {
          return constant(-2);
        }
        if (label == 2) {
          return zero();
        }
        // 2cos(pi/m) = x^k + x^{-k} = x^k - x^{N-k}, with k = N/m.
        auto       e = zero();
        auto const k = _n / static_cast<std::size_t>(label);
        e[k] -= 1;
        e[_n - k] += 1;
        return e;
      }

      [[nodiscard]] Element add(Element a, Element const& b) const {
        for (std::size_t i = 0; i < _n; ++i) {
          a[i] += b[i];
        }
        return a;
      }
      [[nodiscard]] Element neg(Element a) const {
        for (auto& c : a) {
          c = -c;
        }
        return a;
      }
      [[nodiscard]] Element mul(Element const& a, Element const& b) const {
        auto out = zero();
        for (std::size_t i = 0; i < _n; ++i) {
          if (a[i] == 0) {
            continue;
          }
          for (std::size_t j = 0; j < _n; ++j) {
            if (b[j] == 0) {
              continue;
            }
            auto k = i + j;
            if (k >= _n) {
              out[k - _n] -= a[i] * b[j];
            } else {
              out[k] += a[i] * b[j];
            }
          }
        }
        return out;
      }

      // True iff the element vanishes at the primitive 2N-th root of unity,
      // i.e. the 2N-th cyclotomic polynomial divides it.
      [[nodiscard]] bool vanishes(Element a) const {
        auto const phi = cyclotomic(2 * _n);
        auto const d   = phi.size() - 1;
        // Reduce a modulo the monic polynomial phi.
        for (std::size_t i = a.size(); i-- > d;) {
          if (a[i] == 0) {
            continue;
          }
          auto c = a[i];
          for (std::size_t j = 0; j <= d; ++j) {
            a[i - d + j] -= c * phi[j];
          }
        }
        for (std::size_t i = 0; i < std::min(d, a.size()); ++i) {
          if (a[i] != 0) {
            return false;
          }
        }
        return true;
      }

     private:
      using Poly = std::vector<cpp_int>;

      // Coefficients of x^n - 1 divided by every cyclotomic polynomial of a
      // proper divisor of n.
      static Poly cyclotomic(std::size_t n) {
        Poly p(n + 1, 0);
        p[0] = -1;
        p[n] = 1;
        for (std::size_t d = 1; d < n; ++d) {
          if (n % d == 0) {
            p = divide(p, cyclotomic(d));
          }
        }
        return p;
      }

      static Poly divide(Poly num, Poly const& den) {
        auto const dn = num.size() - 1;
        auto const dd = den.size() - 1;
        Poly       q(dn - dd + 1, 0);
        for (std::size_t i = dn + 1; i-- > dd;) {
          auto c       = num[i];  // den is monic
          q[i - dd]    = c;
          for (std::size_t j = 0; j <= dd; ++j) {
            num[i - dd + j] -= c * den[j];
          }
        }
        return q;
      }

      std::size_t _n;
    };

    // Division-free determinant (Samuelson-Berkowitz).
    CyclotomicRing::Element
    berkowitz_det(CyclotomicRing const&                               ring,
                  std::vector<std::vector<CyclotomicRing::Element>> const& a) {
      using Element      = CyclotomicRing::Element;
      auto const       n = a.size();
      std::vector<Element> vect{ring.constant(1), ring.neg(a[0][0])};
      for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: 1, -a_rr, -R C, -R A C, ...
        std::vector<Element> col;
        col.push_back(ring.constant(1));
        col.push_back(ring.neg(a[r][r]));
        std::vector<Element> v(r);
        for (std::size_t i = 0; i < r; ++i) {
          v[i] = a[i][r];
        }
        for (std::size_t k = 0; k < r; ++k) {
          auto dot = ring.zero();
          for (std::size_t i = 0; i < r; ++i) {
            dot = ring.add(dot, ring.mul(a[r][i], v[i]));
          }
          col.push_back(ring.neg(dot));
          std::vector<Element> next(r, ring.zero());
          for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) {
              next[i] = ring.add(next[i], ring.mul(a[i][j], v[j]));
            }
          }
          v = std::move(next);
        }
        std::vector<Element> out(r + 2, ring.zero());
        for (std::size_t i = 0; i < r + 2; ++i) {
          for (std::size_t j = 0; j <= std::min(i, r); ++j) {
            out[i] = ring.add(out[i], ring.mul(col[i - j], vect[j]));
          }
        }
        vect = std::move(out);
      }
      auto det = vect[n];
      return n % 2 == 0 ? det : ring.neg(det);
    }

    constexpr std::size_t max_ring_degree = 420;

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GramMatrix
  ////////////////////////////////////////////////////////////////////////

  GramMatrix::GramMatrix(DefiningGraph const& g, VertexSet subset)
      : _order(subset.to_vector()) {
    auto const n = _order.size();
    _labels.assign(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) {
          _labels[i * n + j] = g.raw_label(_order[i], _order[j]);
        }
      }
    }
  }

  double GramMatrix::at(std::size_t i, std::size_t j) const {
    auto m = label(i, j);
    if (m == 1) {
      return 1.0;
    }
    if (m == 0) {
      return -1.0;
    }
    if (m == 2) {
      return 0.0;
    }
    return -std::cos(std::numbers::pi / m);
  }

  double GramMatrix::leading_minor(std::size_t k) const {
    std::vector<double> a(k * k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        a[i * k + j] = at(i, j);
      }
    }
    double det = 1.0;
    for (std::size_t c = 0; c < k; ++c) {
      auto piv = c;
      for (std::size_t r = c + 1; r < k; ++r) {
        if (std::abs(a[r * k + c]) > std::abs(a[piv * k + c])) {
          piv = r;
        }
      }
      if (a[piv * k + c] == 0.0) {
        return 0.0;
      }
      if (piv != c) {
        for (std::size_t j = 0; j < k; ++j) {
          std::swap(a[c * k + j], a[piv * k + j]);
        }
        det = -det;
      }
      det *= a[c * k + c];
      for (std::size_t r = c + 1; r < k; ++r) {
        auto f = a[r * k + c] / a[c * k + c];
        for (std::size_t j = c; j < k; ++j) {
          a[r * k + j] -= f * a[c * k + j];
        }
      }
    }
    return det;
  }

  std::optional<bool> GramMatrix::leading_minor_is_zero(std::size_t k) const {
    if (k == 0) {
      return false;
    }
    std::size_t n = 1;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto m = label(i, j);
        if (m >= 3) {
          n = std::lcm(n, static_cast<std::size_t>(m));
          if (n > max_ring_degree) {
            return std::nullopt;
          }
        }
      }
    }
    CyclotomicRing ring(n);
    std::vector<std::vector<CyclotomicRing::Element>> a(
        k, std::vector<CyclotomicRing::Element>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        a[i][j] = ring.twice_gram(label(i, j));
      }
    }
    return ring.vanishes(berkowitz_det(ring, a));
  }

  bool is_spherical(DefiningGraph const& g, VertexSet subset) {
    GramMatrix gram(g, subset);
    for (std::size_t k = 1; k <= gram.size(); ++k) {
      auto d = gram.leading_minor(k);
      if (d > minor_tolerance) {
        continue;
      }
      if (d < -minor_tolerance) {
        return false;
      }
      // Near zero: affine and hyperbolic boundaries live here.
      auto zero = gram.leading_minor_is_zero(k);
      if (!zero.has_value() || *zero || d <= 0.0) {
        return false;
      }
    }
    return true;
  }

  std::vector<VertexSet> indecomposable_factors(DefiningGraph const& g,
                                                VertexSet            subset) {
    std::vector<VertexSet> out;
    auto                   left = subset;
    while (!left.empty()) {
      VertexSet comp     = VertexSet::singleton(left.front());
      VertexSet frontier = comp;
      while (!frontier.empty()) {
        VertexSet next;
        for (auto v : frontier.to_vector()) {
          for (auto w : (left - comp).to_vector()) {
            if (g.raw_label(v, w) != 2) {
              next.insert(w);
            }
          }
        }
        next -= comp;
        comp |= next;
        frontier = next;
      }
      out.push_back(comp);
      left -= comp;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification table
  ////////////////////////////////////////////////////////////////////////

  std::string FiniteType::to_string() const {
    switch (family) {
      case Family::A:
        return "A" + std::to_string(parameter);
      case Family::B:
        return "B" + std::to_string(parameter);
      case Family::D:
        return "D" + std::to_string(parameter);
      case Family::E6:
        return "E6";
      case Family::E7:
        return "E7";
      case Family::E8:
        return "E8";
      case Family::F4:
        return "F4";
      case Family::H3:
        return "H3";
      case Family::H4:
        return "H4";
      case Family::I2:
        return "I2(" + std::to_string(parameter) + ")";
    }
    return "?";
  }

  namespace {

    // Converts a Coxeter diagram (tree edges with labels >= 3) to a defining
    // graph: every pair not joined in the diagram commutes.
    DefiningGraph from_coxeter_diagram(std::size_t n,
                                       std::vector<Edge> const& diagram) {
      std::vector<int> lab(n * n, 2);
      for (auto const& e : diagram) {
        lab[e.u * n + e.v] = lab[e.v * n + e.u] = e.label;
      }
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.push_back("s" + std::to_string(i + 1));
      }
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          edges.push_back({i, j, lab[i * n + j]});
        }
      }
      return DefiningGraph(std::move(names), edges);
    }

    std::vector<Edge> path_diagram(std::size_t n) {
      std::vector<Edge> d;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        d.push_back({i, i + 1, 3});
      }
      return d;
    }

    std::vector<std::size_t> identity(std::size_t n) {
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), 0);
      return p;
    }

    std::vector<FiniteTypeEntry> build_table() {
      std::vector<FiniteTypeEntry> table;
      auto const                   max = finite_type_table_max_rank;
      for (std::size_t n = 3; n <= max; ++n) {
        std::vector<std::size_t> rev(n);
        for (std::size_t i = 0; i < n; ++i) {
          rev[i] = n - 1 - i;
        }
        table.push_back({{Family::A, n}, from_coxeter_diagram(n, path_diagram(n)), rev});
        auto b        = path_diagram(n);
        b.back().label = 4;
        table.push_back({{Family::B, n}, from_coxeter_diagram(n, b), identity(n)});
      }
      for (std::size_t n = 4; n <= max; ++n) {
        // Path s1..s_{n-1} with s_n forked off s_{n-2}.
        auto d = path_diagram(n - 1);
        d.push_back({n - 3, n - 1, 3});
        auto pi = identity(n);
        if (n % 2 == 1) {
          std::swap(pi[n - 2], pi[n - 1]);
        }
        table.push_back({{Family::D, n}, from_coxeter_diagram(n, d), pi});
      }
      for (std::size_t n : {6, 7, 8}) {
        // Path s1..s_{n-1} with s_n attached to s3.
        auto d = path_diagram(n - 1);
        d.push_back({2, n - 1, 3});
        auto pi = identity(n);
        if (n == 6) {
          pi = {4, 3, 2, 1, 0, 5};
        }
        auto fam = n == 6 ? Family::E6 : (n == 7 ? Family::E7 : Family::E8);
        table.push_back({{fam, n}, from_coxeter_diagram(n, d), pi});
      }
      table.push_back({{Family::F4, 4},
                       from_coxeter_diagram(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}}),
                       identity(4)});
      table.push_back({{Family::H3, 3},
                       from_coxeter_diagram(3, {{0, 1, 5}, {1, 2, 3}}),
                       identity(3)});
      table.push_back({{Family::H4, 4},
                       from_coxeter_diagram(4, {{0, 1, 5}, {1, 2, 3}, {2, 3, 3}}),
                       identity(4)});
      return table;
    }

    struct Lookup {
      std::map<std::string, std::size_t> by_certificate;
    };

    Lookup const& lookup() {
      static Lookup const l = [] {
        Lookup out;
        auto const& table = finite_type_table();
        for (std::size_t i = 0; i < table.size(); ++i) {
          out.by_certificate.emplace(certificate(table[i].graph), i);
        }
        return out;
      }();
      return l;
    }

    std::optional<std::size_t> table_index(DefiningGraph const& g, VertexSet j) {
      if (j.size() < 3 || j.size() > finite_type_table_max_rank) {
        return std::nullopt;
      }
      auto sub = g.induced(j);
      auto it  = lookup().by_certificate.find(certificate(sub));
      if (it == lookup().by_certificate.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    void require_spherical_indecomposable(DefiningGraph const& g,
                                          VertexSet            j,
                                          char const*          what) {
      if (!is_indecomposable(g, j) || !is_spherical(g, j)) {
        throw Error(std::string(what) + ": " + g.to_string(j)
                    + " is not spherical and indecomposable");
      }
    }

  }  // namespace

  std::vector<FiniteTypeEntry> const& finite_type_table() {
    static std::vector<FiniteTypeEntry> const table = build_table();
    return table;
  }

  std::optional<FiniteType> finite_type(DefiningGraph const& g, VertexSet subset) {
    if (!is_indecomposable(g, subset) || !is_spherical(g, subset)) {
      return std::nullopt;
    }
    if (subset.size() == 1) {
      return FiniteType{Family::A, 1};
    }
    if (subset.size() == 2) {
      auto v = subset.to_vector();
      return FiniteType{Family::I2,
                        static_cast<std::size_t>(g.raw_label(v[0], v[1]))};
    }
    if (auto i = table_index(g, subset)) {
      return finite_type_table()[*i].type;
    }
    return std::nullopt;
  }

  std::vector<std::size_t> longest_element_automorphism(DefiningGraph const& g,
                                                        VertexSet subset) {
    require_spherical_indecomposable(g, subset, "longest_element_automorphism");
    std::vector<std::size_t> pi(g.size());
    std::iota(pi.begin(), pi.end(), 0);
    auto const verts = subset.to_vector();
    if (verts.size() == 2) {
      if (g.raw_label(verts[0], verts[1]) % 2 == 1) {
        std::swap(pi[verts[0]], pi[verts[1]]);
      }
      return pi;
    }
    if (verts.size() == 1) {
      return pi;
    }
    auto idx = table_index(g, subset);
    if (!idx) {
      throw Error("longest_element_automorphism: " + g.to_string(subset)
                  + " is missing from the classification table");
    }
    auto const& entry = finite_type_table()[*idx];
    auto        sub   = g.induced(subset);
    auto        f     = is_isomorphic(sub, entry.graph);  // sub -> table
    std::vector<std::size_t> finv(verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      finv[(*f)[i]] = i;
    }
    for (std::size_t i = 0; i < verts.size(); ++i) {
      pi[verts[i]] = verts[finv[entry.w0_automorphism[(*f)[i]]]];
    }
    return pi;
  }

  FormalWord garside_word(DefiningGraph const& g, VertexSet subset) {
    require_spherical_indecomposable(g, subset, "garside_word");
    auto const verts = subset.to_vector();
    if (verts.size() == 1) {
      return FormalWord({Letter::generator(verts[0])});
    }
    if (verts.size() == 2) {
      std::vector<Letter> ls;
      auto const          m = g.raw_label(verts[0], verts[1]);
      for (int i = 0; i < m; ++i) {
        ls.push_back(Letter::generator(verts[i % 2]));
      }
      return FormalWord(ls);
    }
    return FormalWord({Letter::garside(subset)});
  }

  std::vector<std::size_t> longest_element_word(DefiningGraph const& g,
                                                VertexSet            subset) {
    require_spherical_indecomposable(g, subset, "longest_element_word");
    auto const        verts = subset.to_vector();
    auto const        n     = verts.size();
    GramMatrix const  gram(g, subset);
    // w acts on the root space; column i of w is w(alpha_i).  Multiplying
    // on the right by s_i lengthens w exactly when w(alpha_i) is positive.
    std::vector<double> w(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      w[i * n + i] = 1;
    }
    std::vector<std::size_t> word;
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t i = 0; i < n && !grew; ++i) {
        double sum = 0;
        for (std::size_t r = 0; r < n; ++r) {
          sum += w[r * n + i];
        }
        if (sum < 1e-6) {
          continue;
        }
        // w <- w s_i: column k becomes w(alpha_k) - 2 B(alpha_i, alpha_k) w(alpha_i).
        std::vector<double> wi(n);
        for (std::size_t r = 0; r < n; ++r) {
          wi[r] = w[r * n + i];
        }
        for (std::size_t k = 0; k < n; ++k) {
          auto const f = 2 * gram.at(i, k);
          for (std::size_t r = 0; r < n; ++r) {
            w[r * n + k] -= f * wi[r];
          }
        }
        word.push_back(verts[i]);
        grew = true;
      }
    }
    return word;
  }

  CoxeterClass classify(DefiningGraph const& g, VertexSet subset) {
    CoxeterClass c;
    auto const   v = subset.to_vector();
    c.right_angled = c.large_type = c.xxxl = c.triangle_free
        = c.free_of_infinity = true;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        auto m = g.raw_label(v[i], v[j]);
        if (m == 0) {
          c.free_of_infinity = false;
          continue;
        }
        if (m != 2) {
          c.right_angled = false;
        }
        if (m == 2) {
          c.large_type = false;
        }
        if (m < 6) {
          c.xxxl = false;
        }
        for (std::size_t k = j + 1; k < v.size(); ++k) {
          if (g.adjacent(v[i], v[k]) && g.adjacent(v[j], v[k])) {
            c.triangle_free = false;
          }
        }
      }
    }
    c.xxxl     = c.xxxl && c.large_type;
    c.dihedral = v.size() == 2 && g.raw_label(v[0], v[1]) >= 3;
    auto factors     = indecomposable_factors(g, subset);
    c.indecomposable = factors.size() == 1;
    c.spherical      = is_spherical(g, subset);
    for (auto f : factors) {
      if (auto t = finite_type(g, f)) {
        c.finite_components.push_back(*t);
      }
    }
    return c;
  }

}  // namespace artin
