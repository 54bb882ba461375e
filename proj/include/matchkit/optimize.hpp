#pragma once

#include <string>
#include <vector>

#include "matchkit/pipeline.hpp"

namespace mk {

// Pair weights, firm-major; pairs not mentioned in the weights file stay 0.
using WeightVector = std::vector<std::vector<long long>>;

// One "<firm> <worker> <integer>" triple per line, '#' comments allowed.
// Unknown names, unacceptable pairs, duplicate pairs and non-integer weights
// are ParseErrors.
WeightVector parse_weights(const Instance& inst, const std::string& text);

struct ClosureResult {
  std::vector<int> upper;  // ascending 0-based indices
  long long value = 0;     // sum of c over upper
  long long flow = 0;      // max flow of the selection network
};

// Maximum-total-weight upper set of the order given by geq, via a min cut in
// the selection network. Among optimal upper sets, returns the
// inclusion-minimal one (the source side of the canonical minimum cut).
ClosureResult max_weight_closure(const std::vector<long long>& c,
                                 const std::vector<std::vector<bool>>& geq);

struct WeightedMatching {
  Matching matching;
  long long value = 0;
};

// Maximum-weight stable matching: fold pair weights onto rotations, pick the
// best upper set, realize it.
WeightedMatching max_weight_stable_matching(const Instance& inst,
                                            const WeightVector& weights);

long long matching_weight(const Matching& mu, const WeightVector& weights);

}  // namespace mk
