#pragma once

#include <string>
#include <utility>

#include "matchkit/pipeline.hpp"

namespace mk {

// subset/upper arguments are 0-based rotation indices.
bool is_upper_set(const RotationPoset& poset, const std::vector<int>& subset);

// Matching encoded by an upper set: top matching plus every gained pair,
// minus every lost pair, over the chosen rotations. Throws when the input is
// not an upper set.
Matching realize(const RotationPoset& poset, const std::vector<int>& upper);

// All stable matchings, one per upper set, sorted so that dominating
// matchings come first (gained-pair count, then pair-list order). Throws when
// the number of upper sets exceeds the limit.
std::vector<Matching> enumerate_stable(const RotationPoset& poset,
                                       long long limit = 1'000'000);

struct AffineMap {
  std::vector<std::pair<int, int>> pairs;  // row order: acceptable (f,w)
  std::vector<std::vector<int>> a;         // entries in {-1,0,1}
  std::vector<int> x0;                     // characteristic vector of the top
};

// Column r is the gained-minus-lost indicator of rotation r. Always has full
// column rank; a deficiency signals an upstream bug and throws.
AffineMap affine_map(const RotationPoset& poset);

// Pairs occurring in some stable matching: the top matching plus every
// rotation's gained pairs.
PairVec stable_pairs(const RotationPoset& poset);

// Strict covering pairs (i, j): rotation i immediately precedes rotation j.
std::vector<std::pair<int, int>> covering_relation(const RotationPoset& poset);

// ROTATION lines (1-based, chain order) then ORDER lines for the covering
// relation; pairs are rendered as <firm>,<worker> using instance names.
std::string format_poset(const Instance& inst, const RotationPoset& poset);

}  // namespace mk
