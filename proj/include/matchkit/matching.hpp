#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matchkit/instance.hpp"

namespace mk {

// A matching, firm-major: element f is the worker set assigned to firm f.
using Matching = PairVec;

// Worker w's side of the assignment, derived from the firm-major rows.
Mask worker_view(const Matching& mu, int firms, int w);

bool is_individually_rational(const Instance& inst, const Matching& mu,
                              EvalCounter* evals = nullptr);

// Individually rational and no acceptable pair blocks. Pair sets that are not
// well-formed matchings (unacceptable pairs) are simply not stable.
bool is_stable(const Instance& inst, const Matching& mu,
               EvalCounter* evals = nullptr);

// Firm-side dominance: every firm keeps its own assignment when offered both.
bool dominates(const Instance& inst, const Matching& mu1, const Matching& mu2,
               EvalCounter* evals = nullptr);

Matching join(const Instance& inst, const Matching& mu1, const Matching& mu2,
              EvalCounter* evals = nullptr);
Matching meet(const Instance& inst, const Matching& mu1, const Matching& mu2,
              EvalCounter* evals = nullptr);

// Per firm, the workers whose addition leaves the firm's choice unchanged.
// Contains mu(f) whenever mu is individually rational.
std::vector<Mask> closure(const Instance& inst, const Matching& mu,
                          EvalCounter* evals = nullptr);

using PSet = PairVec;

// P-set of a stable matching: the stable pairs (f,w) with w chosen from
// mu(f)+w. stable_pairs must cover only acceptable pairs.
PSet p_set(const Instance& inst, const Matching& mu,
           const PairVec& stable_pairs, EvalCounter* evals = nullptr);

// Pairs (f,w) in ascending (firm, worker) index order.
std::vector<std::pair<int, int>> pair_list(const PairVec& pv);

// Lexicographic order on the pair lists; the canonical tie-break everywhere.
bool matching_less(const Matching& a, const Matching& b);

// One "<firm> <worker>" line per pair, sorted by firm then worker index.
std::string format_matching(const Instance& inst, const Matching& mu);

}  // namespace mk
