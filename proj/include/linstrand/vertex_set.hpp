#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "linstrand/error.hpp"

namespace linstrand {

using VertexId = std::uint32_t;

// Hard ceiling imposed by the 64-bit representation.
inline constexpr std::size_t kMaxVertices = 64;

// Default ceiling for anything that walks all 2^n subsets.
inline constexpr std::size_t kEnumerationGuard = 24;

inline void require_enumerable(std::size_t n, const char* what,
                               std::size_t limit = kEnumerationGuard) {
  if (n > limit) {
    throw GuardError(std::string(what) + ": " + std::to_string(n) +
                     " vertices exceeds the enumeration limit of " +
                     std::to_string(limit));
  }
}

// A subset of vertex ids 0..63, stored as a bitmask. Bit i is vertex i, and
// vertex ids follow the total order of the owning VertexTable.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using pointer = const VertexId*;
    using reference = VertexId;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr VertexId operator*() const {
      return static_cast<VertexId>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<VertexId> ids) {
    VertexSet s;
    for (VertexId v : ids) s = s.with(v);
    return s;
  }

  // {0, ..., n-1}
  static constexpr VertexSet first_n(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1U; }
  constexpr VertexSet with(VertexId v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(VertexId v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr bool subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  // Number of elements strictly smaller than v.
  constexpr std::size_t position(VertexId v) const {
    return static_cast<std::size_t>(
        std::popcount(bits_ & ((std::uint64_t{1} << v) - 1)));
  }

  constexpr VertexId min() const {
    return static_cast<VertexId>(std::countr_zero(bits_));
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<VertexId> ids() const { return {begin(), end()}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  // Container ordering only (by bit pattern); use lex_less for the ≺-order.
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Lexicographic comparison of the ascending id sequences of a and b.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  if (a.bits() & low) {
    // a has the smaller element unless b already ended (b is a prefix of a).
    return (b.bits() & ~(low | (low - 1))) != 0;
  }
  return (a.bits() & ~(low | (low - 1))) == 0;
}

// Packs the bits of s that lie in mask into the low positions, preserving
// order. Inverse of expand() on subsets of mask.
constexpr VertexSet compress(VertexSet s, VertexSet mask) {
  std::uint64_t out = 0;
  std::size_t k = 0;
  for (VertexId v : mask) {
    if (s.contains(v)) out |= std::uint64_t{1} << k;
    ++k;
  }
  return VertexSet(out);
}

constexpr VertexSet expand(VertexSet packed, VertexSet mask) {
  std::uint64_t out = 0;
  std::size_t k = 0;
  for (VertexId v : mask) {
    if (packed.contains(static_cast<VertexId>(k))) out |= std::uint64_t{1} << v;
    ++k;
  }
  return VertexSet(out);
}

}  // namespace linstrand
