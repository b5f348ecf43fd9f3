#pragma once

#include <bit>
#include <cstdint>

namespace etheta {

// Carriers are capped so a subset always fits a single machine word.
inline constexpr int kMaxPoints = 16;

using Mask = std::uint32_t;

// A subset of a ground set of up to kMaxPoints points, one bit per point.
// Bits at or above the carrier width must stay zero; operations that need
// the width (complement, full) take it explicitly.
struct PointSet {
  Mask bits = 0;

  constexpr PointSet() = default;
  constexpr explicit PointSet(Mask m) : bits(m) {}

  static constexpr PointSet empty() { return PointSet(0); }
  static constexpr PointSet full(int n) {
    return PointSet(n == 0 ? 0u : (Mask(~Mask(0)) >> (32 - n)));
  }
  static constexpr PointSet single(int i) { return PointSet(Mask(1) << i); }

  constexpr bool has(int i) const { return (bits >> i) & 1u; }
  constexpr bool is_empty() const { return bits == 0; }
  constexpr int count() const { return std::popcount(bits); }

  constexpr PointSet with(int i) const { return PointSet(bits | (Mask(1) << i)); }
  constexpr PointSet without(int i) const { return PointSet(bits & ~(Mask(1) << i)); }
  constexpr PointSet complement(int n) const { return PointSet(~bits & full(n).bits); }

  constexpr bool subset_of(PointSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(PointSet o) const { return (bits & o.bits) != 0; }

  friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits | b.bits); }
  friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits & b.bits); }
  // set difference
  friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits & ~b.bits); }
  friend constexpr bool operator==(PointSet a, PointSet b) { return a.bits == b.bits; }
  friend constexpr bool operator!=(PointSet a, PointSet b) { return a.bits != b.bits; }
};

// Canonical order on subsets: ascending cardinality, ties broken by the
// numeric value of the bit vector. Serialization and witness selection
// both rely on this being a total order.
constexpr bool canonical_less(PointSet a, PointSet b) {
  const int ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.bits < b.bits;
}

}  // namespace etheta
