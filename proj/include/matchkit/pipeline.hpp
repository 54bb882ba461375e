#pragma once

#include <set>

#include "matchkit/matching.hpp"
#include "matchkit/ring_of_sets.hpp"

namespace mk {

// One synchronized proposal round: live sets per proposer, received and held
// sets per acceptor (the opposite side).
struct ProposalRound {
  std::vector<Mask> x_live;      // per proposer: partners not yet rejected
  std::vector<Mask> x_received;  // per acceptor: offers on the table
  std::vector<Mask> y_held;      // per acceptor: held subset
};

using Trace = std::vector<ProposalRound>;

// Proposal/rejection fixpoint with incremental bookkeeping: an agent's choice
// is re-evaluated only when its input set changed. Firm-proposing returns the
// firm-optimal stable matching, worker-proposing the worker-optimal one.
Matching deferred_acceptance(const Instance& inst, Side proposing,
                             EvalCounter* evals = nullptr,
                             Trace* trace = nullptr);

struct BreakMarriageResult {
  Matching matching;
  bool successful = false;
  int steps = 0;
};

// Severs (f_prime, w_prime) from the stable matching mu_prime and replays
// synchronized proposal rounds from its closure; w_prime tentatively keeps
// f_prime in its comparison set but can never hold it. The pair must lie in
// mu_prime but not in the worker-optimal matching (verified internally).
BreakMarriageResult break_marriage(const Instance& inst,
                                   const Matching& mu_prime, int f_prime,
                                   int w_prime, EvalCounter* evals = nullptr,
                                   Trace* trace = nullptr);

// The lattice element directly below mu_prime: break every pair of
// mu_prime \ mu_w (firm-then-worker order, reversed when asked), collect the
// successful outputs, and keep the last one that dominates the running pick.
Matching immediate_descendant(const Instance& inst, const Matching& mu_prime,
                              const Matching& mu_w,
                              EvalCounter* evals = nullptr,
                              bool reversed_pair_order = false);

struct Rotation {
  PairVec plus, minus;  // pairs gained / lost stepping down the chain
};

struct MaximalChain {
  std::vector<Matching> chain;  // chain[0] firm-optimal, back() worker-optimal
  std::vector<Rotation> rotations;
};

MaximalChain maximal_chain(const Instance& inst, EvalCounter* evals = nullptr,
                           bool reversed_pair_order = false);

// Λ(ρ_i) for each chain rotation (1-based indices, i ∈ Λ(ρ_i)): delegates to
// the ring-of-sets walk with membership = stability of the pair set obtained
// by undoing rotations of the current candidate.
std::vector<std::set<int>> rotation_lambdas(const Instance& inst,
                                            const MaximalChain& mc,
                                            EvalCounter* evals = nullptr);

struct RotationPoset {
  std::vector<Rotation> rotations;      // chain order
  std::vector<std::set<int>> lambdas;   // 1-based
  // geq[i][j]: rotation i precedes-or-equals rotation j (Λ_i ⊆ Λ_j)
  std::vector<std::vector<bool>> geq;
  Matching mu_f, mu_w;
  int firms = 0, workers = 0;
  std::vector<Mask> firm_acc;           // acceptable pairs, firm-major
  long long eval_count = 0;             // total choice evaluations
};

RotationPoset rotation_poset(const Instance& inst,
                             bool reversed_pair_order = false);

}  // namespace mk
