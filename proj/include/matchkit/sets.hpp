#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace mk {

// Partner sets are bitmasks over 0-based agent indices. Instances are capped
// at 64 agents per side; parse_instance enforces this.
using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask(1) << i; }
inline constexpr bool has(Mask m, int i) { return (m >> i) & 1; }
inline int set_size(Mask m) { return std::popcount(m); }

inline std::vector<int> elements(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

// A set of firm-worker pairs stored firm-major: element f holds the workers
// paired with firm f. Matchings and rotation sides share this shape.
using PairVec = std::vector<Mask>;

inline PairVec pair_union(const PairVec& a, const PairVec& b) {
  PairVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] | b[i];
  return out;
}

inline PairVec pair_minus(const PairVec& a, const PairVec& b) {
  PairVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & ~b[i];
  return out;
}

inline PairVec pair_sym_diff(const PairVec& a, const PairVec& b) {
  PairVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

inline bool pair_subset(const PairVec& a, const PairVec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline bool pair_empty(const PairVec& a) {
  for (Mask m : a)
    if (m) return false;
  return true;
}

inline int pair_count(const PairVec& a) {
  int n = 0;
  for (Mask m : a) n += set_size(m);
  return n;
}

}  // namespace mk
