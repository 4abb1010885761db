#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace dimred {

/// Maximum ground-set size representable by GroundSubset.
inline constexpr int kMaxGroundSet = 64;

/// Subset of a matroid ground set {0, ..., |E|-1}, stored as a bitmask.
struct GroundSubset {
  std::uint64_t bits = 0;

  constexpr GroundSubset() = default;
  constexpr explicit GroundSubset(std::uint64_t b) : bits(b) {}

  static constexpr GroundSubset full(int size) {
    return GroundSubset(size >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size) - 1);
  }
  static GroundSubset of(const std::vector<int>& elements) {
    GroundSubset s;
    for (int e : elements) s = s.with(e);
    return s;
  }

  constexpr bool contains(int e) const { return (bits >> e) & 1u; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool empty() const { return bits == 0; }
  constexpr GroundSubset with(int e) const { return GroundSubset(bits | (std::uint64_t{1} << e)); }
  constexpr GroundSubset without(int e) const { return GroundSubset(bits & ~(std::uint64_t{1} << e)); }
  constexpr bool is_subset_of(GroundSubset other) const { return (bits & ~other.bits) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr GroundSubset operator|(GroundSubset a, GroundSubset b) { return GroundSubset(a.bits | b.bits); }
  friend constexpr GroundSubset operator&(GroundSubset a, GroundSubset b) { return GroundSubset(a.bits & b.bits); }
  friend constexpr GroundSubset operator-(GroundSubset a, GroundSubset b) { return GroundSubset(a.bits & ~b.bits); }
  friend constexpr auto operator<=>(GroundSubset, GroundSubset) = default;
};

}  // namespace dimred
