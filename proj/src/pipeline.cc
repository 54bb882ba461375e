#include "matchkit/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

namespace mk {

namespace {

// Orientation-independent view: proposers vs acceptors by instance side.
struct SideView {
  const Instance& inst;
  Side proposing;
  int proposers() const {
    return proposing == Side::Firm ? inst.firms() : inst.workers();
  }
  int acceptors() const {
    return proposing == Side::Firm ? inst.workers() : inst.firms();
  }
  Mask acceptable(int p) const {
    return proposing == Side::Firm ? inst.firm_acc[p] : inst.worker_acc[p];
  }
  Mask choose_p(int p, Mask s, EvalCounter* evals) const {
    return choose(inst, {proposing, p}, s, evals);
  }
  Mask choose_a(int a, Mask s, EvalCounter* evals) const {
    Side other = proposing == Side::Firm ? Side::Worker : Side::Firm;
    return choose(inst, {other, a}, s, evals);
  }
};

}  // namespace

Matching deferred_acceptance(const Instance& inst, Side proposing,
                             EvalCounter* evals, Trace* trace) {
  SideView v{inst, proposing};
  int np = v.proposers(), na = v.acceptors();
  std::vector<Mask> xp(np), yp_out(np, 0);  // live sets, outstanding offers
  std::vector<Mask> xa(na, 0), ya(na, 0);   // on-the-table, held
  for (int p = 0; p < np; ++p) xp[p] = v.acceptable(p);
  Mask frontier_p = 0, frontier_a = 0;  // agents whose input changed
  for (int p = 0; p < np; ++p)
    if (xp[p]) frontier_p |= bit(p);
  while (frontier_p) {
    frontier_a = 0;
    for (int p : elements(frontier_p)) {
      Mask y = v.choose_p(p, xp[p], evals);
      Mask fresh = y & ~yp_out[p];
      yp_out[p] = y;
      for (int a : elements(fresh)) {
        xa[a] |= bit(p);
        frontier_a |= bit(a);
      }
    }
    frontier_p = 0;
    for (int a : elements(frontier_a)) {
      Mask y = v.choose_a(a, xa[a], evals);
      Mask rejected = xa[a] & ~y;
      xa[a] = y;
      ya[a] = y;
      for (int p : elements(rejected)) {
        xp[p] &= ~bit(a);
        yp_out[p] &= ~bit(a);
        frontier_p |= bit(p);
      }
    }
    if (trace) trace->push_back({xp, xa, ya});
  }
  Matching mu(inst.firms(), 0);
  if (proposing == Side::Firm) {
    for (int a = 0; a < na; ++a)
      for (int p : elements(ya[a])) mu[p] |= bit(a);
  } else {
    for (int a = 0; a < na; ++a) mu[a] = ya[a];
  }
  return mu;
}

namespace {

// Synchronized rounds from the closure of mu_prime with (f_prime, w_prime)
// severed. Choice values are cached per agent and recomputed only when the
// input set changes, so the round-table semantics stay intact while the
// evaluation count stays near-linear in the pair count.
BreakMarriageResult break_marriage_core(const Instance& inst,
                                        const Matching& mu_prime, int f_prime,
                                        int w_prime, EvalCounter* evals,
                                        Trace* trace) {
  int nf = inst.firms(), nw = inst.workers();
  std::vector<Mask> xf = closure(inst, mu_prime, evals);
  xf[f_prime] &= ~bit(w_prime);

  // per-firm cache of C_f over the current live set
  std::vector<Mask> yf(nf), yf_input(nf);
  for (int f = 0; f < nf; ++f) {
    yf_input[f] = xf[f];
    yf[f] = choose(inst, {Side::Firm, f}, xf[f], evals);
  }
  // per-worker cache; for w_prime the cached value is C(x | f_prime)
  std::vector<Mask> yw_full(nw, 0), yw_input(nw, 0);
  std::vector<bool> yw_cached(nw, false);

  BreakMarriageResult res;
  while (true) {
    for (int f = 0; f < nf; ++f)
      if (xf[f] != yf_input[f]) {
        yf_input[f] = xf[f];
        yf[f] = choose(inst, {Side::Firm, f}, xf[f], evals);
      }
    std::vector<Mask> xw(nw, 0), yw(nw, 0);
    for (int f = 0; f < nf; ++f)
      for (int w : elements(yf[f])) xw[w] |= bit(f);
    for (int w = 0; w < nw; ++w) {
      if (!yw_cached[w] || xw[w] != yw_input[w]) {
        yw_cached[w] = true;
        yw_input[w] = xw[w];
        Mask arg = w == w_prime ? (xw[w] | bit(f_prime)) : xw[w];
        yw_full[w] = choose(inst, {Side::Worker, w}, arg, evals);
      }
      yw[w] = yw_full[w] & (w == w_prime ? ~bit(f_prime) : Mask(-1));
    }
    if (trace) trace->push_back({xf, xw, yw});
    ++res.steps;
    std::vector<Mask> nxf = xf;
    for (int f = 0; f < nf; ++f) {
      Mask rm = 0;
      for (int w : elements(xf[f]))
        if (has(xw[w], f) && !has(yw[w], f)) rm |= bit(w);
      nxf[f] &= ~rm;
    }
    if (nxf == xf) {
      Matching mu(nf, 0);
      for (int w = 0; w < nw; ++w)
        for (int f : elements(yw[w])) mu[f] |= bit(w);
      res.matching = mu;
      res.successful = !has(yw_full[w_prime], f_prime);
      return res;
    }
    xf = std::move(nxf);
  }
}

}  // namespace

BreakMarriageResult break_marriage(const Instance& inst,
                                   const Matching& mu_prime, int f_prime,
                                   int w_prime, EvalCounter* evals,
                                   Trace* trace) {
  if (!has(mu_prime[f_prime], w_prime))
    throw std::invalid_argument("break_marriage: pair not in the matching");
  Matching mu_w = deferred_acceptance(inst, Side::Worker, evals);
  if (has(mu_w[f_prime], w_prime))
    throw std::invalid_argument(
        "break_marriage: pair lies in the worker-optimal matching");
  return break_marriage_core(inst, mu_prime, f_prime, w_prime, evals, trace);
}

Matching immediate_descendant(const Instance& inst, const Matching& mu_prime,
                              const Matching& mu_w, EvalCounter* evals,
                              bool reversed_pair_order) {
  if (mu_prime == mu_w)
    throw std::invalid_argument(
        "immediate_descendant: already at the bottom of the lattice");
  std::vector<std::pair<int, int>> pairs;
  for (int f = 0; f < inst.firms(); ++f)
    for (int w : elements(mu_prime[f] & ~mu_w[f])) pairs.push_back({f, w});
  if (reversed_pair_order) std::reverse(pairs.begin(), pairs.end());
  bool have = false;
  Matching best;
  for (auto [f, w] : pairs) {
    BreakMarriageResult r =
        break_marriage_core(inst, mu_prime, f, w, evals, nullptr);
    if (!r.successful) continue;
    if (!have) {
      best = r.matching;
      have = true;
    } else if (dominates(inst, r.matching, best, evals)) {
      best = r.matching;
    }
  }
  if (!have)
    throw std::logic_error(
        "immediate_descendant: no severed pair produced a stable matching");
  return best;
}

MaximalChain maximal_chain(const Instance& inst, EvalCounter* evals,
                           bool reversed_pair_order) {
  MaximalChain mc;
  Matching mu_f = deferred_acceptance(inst, Side::Firm, evals);
  Matching mu_w = deferred_acceptance(inst, Side::Worker, evals);
  mc.chain.push_back(mu_f);
  while (mc.chain.back() != mu_w) {
    Matching next = immediate_descendant(inst, mc.chain.back(), mu_w, evals,
                                         reversed_pair_order);
    const Matching& prev = mc.chain.back();
    mc.rotations.push_back(
        {pair_minus(next, prev), pair_minus(prev, next)});
    mc.chain.push_back(next);
  }
  return mc;
}

std::vector<std::set<int>> rotation_lambdas(const Instance& inst,
                                            const MaximalChain& mc,
                                            EvalCounter* evals) {
  int k = int(mc.rotations.size());
  // Present the chain over rotation indices; realizing an index set applies
  // those rotations to the top matching. Unstable pair sets are non-members.
  ChainPresentation cp;
  for (int i = 0; i <= k; ++i) {
    ElemSet c(i);
    for (int j = 0; j < i; ++j) c[j] = j;
    cp.chain.push_back(std::move(c));
  }
  const Matching& top = mc.chain.front();
  cp.member = [&inst, &mc, &top, evals](const ElemSet& h) {
    PairVec pairs = top;
    for (int j : h) {
      pairs = pair_sym_diff(pairs, mc.rotations[j].plus);
      pairs = pair_sym_diff(pairs, mc.rotations[j].minus);
    }
    return is_stable(inst, pairs, evals);
  };
  return irreducibles_via_chain(cp).lambdas;
}

RotationPoset rotation_poset(const Instance& inst, bool reversed_pair_order) {
  EvalCounter evals;
  RotationPoset poset;
  MaximalChain mc = maximal_chain(inst, &evals, reversed_pair_order);
  poset.mu_f = mc.chain.front();
  poset.mu_w = mc.chain.back();
  poset.lambdas = rotation_lambdas(inst, mc, &evals);
  poset.geq = order_from_lambdas(poset.lambdas);
  poset.rotations = std::move(mc.rotations);
  poset.firms = inst.firms();
  poset.workers = inst.workers();
  poset.firm_acc = inst.firm_acc;
  poset.eval_count = evals.count;
  return poset;
}

}  // namespace mk
