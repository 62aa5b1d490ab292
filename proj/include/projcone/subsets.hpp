#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace projcone {

inline constexpr int kMaxDimension = 16;

// Subset of axes {1..n} as a bitmask; bit (i-1) set means axis i is present.
class AxisSet {
 public:
  constexpr AxisSet() : bits_(0) {}
  constexpr explicit AxisSet(std::uint32_t bits) : bits_(bits) {}

  static AxisSet full(int n) { return AxisSet((1u << n) - 1u); }
  static AxisSet single(int axis) { return AxisSet(1u << (axis - 1)); }

  constexpr std::uint32_t bits() const { return bits_; }
  bool empty() const { return bits_ == 0; }
  int cardinality() const { return __builtin_popcount(bits_); }
  bool contains(int axis) const { return (bits_ >> (axis - 1)) & 1u; }
  bool subset_of(AxisSet other) const { return (bits_ & ~other.bits_) == 0; }

  AxisSet with(int axis) const { return AxisSet(bits_ | (1u << (axis - 1))); }
  AxisSet without(int axis) const { return AxisSet(bits_ & ~(1u << (axis - 1))); }
  AxisSet intersect(AxisSet other) const { return AxisSet(bits_ & other.bits_); }
  AxisSet unite(AxisSet other) const { return AxisSet(bits_ | other.bits_); }

  // Ascending axis numbers.
  std::vector<int> axes() const;

  // "1,2,4"; empty set renders as "".
  std::string str() const;

  bool operator==(const AxisSet&) const = default;

 private:
  std::uint32_t bits_;
};

// Canonical order: cardinality first, then lexicographic on the ascending
// element lists. Note this differs from numeric bitmask order.
bool canonical_less(AxisSet a, AxisSet b);

// All nonempty subsets of {1..n} in canonical order. Cached per n.
const std::vector<AxisSet>& enumerate_subsets(int n);

// Index of `set` within enumerate_subsets(n).
int subset_position(AxisSet set, int n);

// Parses "1,2,4" (strictly ascending axes within 1..n). Throws SchemaError.
AxisSet parse_axis_set(const std::string& text, int n);

struct AxisSetHash {
  std::size_t operator()(const AxisSet& s) const { return s.bits(); }
};

}  // namespace projcone
