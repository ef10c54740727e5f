#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace dissoc {

using Vertex = int;

inline constexpr int kMaxOrder = 64;

/// Subset of {0, ..., 63} packed into one machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}

    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
  /// {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  /// Lowest member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  /// One past the highest member, 0 for the empty set.
  constexpr int span() const { return 64 - std::countl_zero(bits_); }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet with(Vertex v) const { return VertexSet{bits_ | (std::uint64_t{1} << v)}; }
  constexpr VertexSet without(Vertex v) const { return VertexSet{bits_ & ~(std::uint64_t{1} << v)}; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  iterator begin() const { return iterator{bits_}; }
  iterator end() const { return iterator{}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }
  /// "{0,2,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace dissoc
