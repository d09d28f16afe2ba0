#ifndef ARTIN_VERTEX_SET_HPP_
#define ARTIN_VERTEX_SET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace artin {

  // Maximum number of vertices a DefiningGraph may have.
  inline constexpr std::size_t max_vertices = 64;

  // A subset of the vertices of a DefiningGraph, stored as a bitmask over
  // vertex indices.
  class VertexSet {
   public:
    constexpr VertexSet() noexcept = default;
    constexpr explicit VertexSet(std::uint64_t bits) noexcept : _bits(bits) {}

    static constexpr VertexSet singleton(std::size_t v) noexcept {
      return VertexSet(std::uint64_t(1) << v);
    }
    static constexpr VertexSet range(std::size_t n) noexcept {
      return VertexSet(n >= 64 ? ~std::uint64_t(0)
                               : (std::uint64_t(1) << n) - 1);
    }
    static VertexSet of(std::vector<std::size_t> const& vs) noexcept {
      VertexSet s;
      for (auto v : vs) {
        s.insert(v);
      }
      return s;
    }

    [[nodiscard]] constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }
    [[nodiscard]] constexpr bool contains(std::size_t v) const noexcept {
      return (_bits >> v) & 1U;
    }
    [[nodiscard]] constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    [[nodiscard]] constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    // Index of the smallest member; undefined on the empty set.
    [[nodiscard]] constexpr std::size_t front() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(_bits));
    }

    constexpr void insert(std::size_t v) noexcept {
      _bits |= std::uint64_t(1) << v;
    }
    constexpr void erase(std::size_t v) noexcept {
      _bits &= ~(std::uint64_t(1) << v);
    }

    [[nodiscard]] constexpr bool is_subset_of(VertexSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    [[nodiscard]] constexpr bool intersects(VertexSet other) const noexcept {
      return (_bits & other._bits) != 0;
    }

    [[nodiscard]] std::vector<std::size_t> to_vector() const {
      std::vector<std::size_t> out;
      out.reserve(size());
      for (auto b = _bits; b != 0; b &= b - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
      }
      return out;
    }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept {
      return VertexSet(a._bits | b._bits);
    }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept {
      return VertexSet(a._bits & b._bits);
    }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept {
      return VertexSet(a._bits & ~b._bits);
    }
    constexpr VertexSet& operator|=(VertexSet b) noexcept {
      _bits |= b._bits;
      return *this;
    }
    constexpr VertexSet& operator&=(VertexSet b) noexcept {
      _bits &= b._bits;
      return *this;
    }
    constexpr VertexSet& operator-=(VertexSet b) noexcept {
      _bits &= ~b._bits;
      return *this;
    }
    friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
    // Orders by bit pattern read from the lowest index upward, so that
    // sets containing smaller vertices sort first.
    friend constexpr bool operator<(VertexSet a, VertexSet b) noexcept {
      if (a._bits == b._bits) {
        return false;
      }
      auto diff = a._bits ^ b._bits;
      auto low  = diff & (~diff + 1);
      return (a._bits & low) != 0;
    }

   private:
    std::uint64_t _bits = 0;
  };

}  // namespace artin

#endif  // ARTIN_VERTEX_SET_HPP_
