#pragma once

#include <string>
#include <vector>

#include "matchkit/represent.hpp"

namespace mk {

// One facet row of the order polytope over rotation variables y:
//   NonNeg      y_i >= 0        (i is minimal: above nothing)
//   Upper       y_i <= 1        (i is maximal: below nothing)
//   Precedence  y_i - y_j >= 0  (i immediately precedes j)
struct LinearInequality {
  enum class Kind { NonNeg, Upper, Precedence };
  Kind kind;
  int i;
  int j = -1;  // Precedence only
};

// Exactly the facets, in row order NonNeg, Upper, Precedence, each block
// sorted by index.
std::vector<LinearInequality> order_polytope_facets(
    const std::vector<std::vector<bool>>& geq);

// Stable matching polytope as the affine image of an order polytope:
// x = x0 + A y over the facet rows.
struct ExtendedFormulation {
  AffineMap map;
  std::vector<LinearInequality> facets;
  int rotations = 0;
};

ExtendedFormulation extended_formulation(const Instance& inst);

// Deterministic LP text: objective, the defining equations, the facet rows,
// free bounds, end marker.
std::string format_lp(const Instance& inst, const ExtendedFormulation& ef);

}  // namespace mk
