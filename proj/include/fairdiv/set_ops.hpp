#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace fairdiv {

// Goods are 0-indexed integers < m. A GoodSet is a bitmask over [m]; the
// whole library is desk-scale, m <= 63.
using GoodSet = std::uint64_t;
using Good = int;

constexpr GoodSet kEmptySet = 0;

constexpr GoodSet bit(Good g) { return GoodSet{1} << g; }
constexpr bool contains(GoodSet s, Good g) { return (s >> g) & 1; }
constexpr GoodSet with(GoodSet s, Good g) { return s | bit(g); }
constexpr GoodSet without(GoodSet s, Good g) { return s & ~bit(g); }
constexpr int set_size(GoodSet s) { return std::popcount(s); }
constexpr GoodSet full_set(int m) { return m == 0 ? 0 : (~GoodSet{0} >> (64 - m)); }

inline Good lowest_good(GoodSet s) { return std::countr_zero(s); }

// Ascending-id iteration; the deterministic scan order used everywhere.
template <typename Fn>
void for_each_good(GoodSet s, Fn&& fn) {
  while (s) {
    Good g = std::countr_zero(s);
    fn(g);
    s &= s - 1;
  }
}

inline std::vector<Good> to_vector(GoodSet s) {
  std::vector<Good> out;
  out.reserve(set_size(s));
  for_each_good(s, [&](Good g) { out.push_back(g); });
  return out;
}

inline GoodSet from_vector(const std::vector<Good>& goods) {
  GoodSet s = 0;
  for (Good g : goods) s |= bit(g);
  return s;
}

}  // namespace fairdiv
