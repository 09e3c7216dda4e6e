#ifndef CT_VERTEX_SET_HPP
#define CT_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ct {

constexpr int kMaxVertices = 64;

// Bit-indexed subset of vertices 0..n-1. The universal currency for
// neighborhoods, blue sets and components.
struct VertexSet {
  std::uint64_t bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t b) : bits(b) {}

  static constexpr VertexSet empty() { return VertexSet{}; }
  static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  static constexpr VertexSet all(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  constexpr bool contains(int v) const { return (bits >> v) & 1; }
  constexpr void add(int v) { bits |= std::uint64_t{1} << v; }
  constexpr void remove(int v) { bits &= ~(std::uint64_t{1} << v); }
  constexpr int count() const { return std::popcount(bits); }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr int lowest() const { return std::countr_zero(bits); }  // undefined on empty

  constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits | b.bits}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits & b.bits}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits & ~b.bits}; }
  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits != b.bits; }

  VertexSet& operator|=(VertexSet o) { bits |= o.bits; return *this; }
  VertexSet& operator&=(VertexSet o) { bits &= o.bits; return *this; }

  constexpr VertexSet complement_in(int n) const { return all(n) - *this; }

  struct iterator {
    std::uint64_t rest;
    int operator*() const { return std::countr_zero(rest); }
    iterator& operator++() { rest &= rest - 1; return *this; }
    bool operator!=(const iterator& o) const { return rest != o.rest; }
  };
  iterator begin() const { return {bits}; }
  iterator end() const { return {0}; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v : *this) out.push_back(v);
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int v : *this) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }
};

}  // namespace ct

#endif
