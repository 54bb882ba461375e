#pragma once

#include <string>
#include <vector>

#include "matchkit/optimize.hpp"

namespace mk {

// Every stable matching by exhaustive search over per-firm self-chosen
// assignment rows, sorted by pair list. Independent of the rotation
// machinery; exists to cross-check it. Throws when the search tree exceeds
// the node limit.
std::vector<Matching> enumerate_stable_bruteforce(const Instance& inst,
                                                  long long limit =
                                                      10'000'000);

struct LatticeReport {
  bool join_closed = true;
  bool meet_closed = true;
  bool distributive = true;   // a v (b ^ c) == (a v b) ^ (a v c)
  bool polarity = true;       // firm-side dominance == reversed worker-side
  bool concordance = true;    // common pairs survive the join, both sides
  bool equal_quota = true;    // per-agent assignment sizes are constant
  bool full_quota = true;     // under-quota workers keep identical partners
  std::vector<int> firm_qbar, worker_qbar;  // the constant sizes
  std::string witness;        // first violation, empty when all pass
  bool all_pass() const {
    return join_closed && meet_closed && distributive && polarity &&
           concordance && equal_quota && full_quota;
  }
};

// Checks the structural laws of the stable set by brute force.
LatticeReport verify_lattice(const Instance& inst,
                             long long limit = 10'000'000);

// Exhaustive optimum; ties broken toward the smallest pair list.
WeightedMatching max_weight_bruteforce(const Instance& inst,
                                       const WeightVector& weights,
                                       long long limit = 10'000'000);

}  // namespace mk
