#include "matchkit/matching.hpp"

namespace mk {

Mask worker_view(const Matching& mu, int firms, int w) {
  Mask m = 0;
  for (int f = 0; f < firms; ++f)
    if (has(mu[f], w)) m |= bit(f);
  return m;
}

bool is_individually_rational(const Instance& inst, const Matching& mu,
                              EvalCounter* evals) {
  for (int f = 0; f < inst.firms(); ++f)
    if (choose(inst, {Side::Firm, f}, mu[f], evals) != mu[f]) return false;
  for (int w = 0; w < inst.workers(); ++w) {
    Mask m = worker_view(mu, inst.firms(), w);
    if (choose(inst, {Side::Worker, w}, m, evals) != m) return false;
  }
  return true;
}

bool is_stable(const Instance& inst, const Matching& mu, EvalCounter* evals) {
  for (int f = 0; f < inst.firms(); ++f)
    if (mu[f] & ~inst.firm_acc[f]) return false;
  if (!is_individually_rational(inst, mu, evals)) return false;
  for (int f = 0; f < inst.firms(); ++f)
    for (int w : elements(inst.firm_acc[f] & ~mu[f])) {
      if (!has(choose(inst, {Side::Firm, f}, mu[f] | bit(w), evals), w))
        continue;
      Mask wm = worker_view(mu, inst.firms(), w);
      if (has(choose(inst, {Side::Worker, w}, wm | bit(f), evals), f))
        return false;
    }
  return true;
}

bool dominates(const Instance& inst, const Matching& mu1, const Matching& mu2,
               EvalCounter* evals) {
  for (int f = 0; f < inst.firms(); ++f)
    if (choose(inst, {Side::Firm, f}, mu1[f] | mu2[f], evals) != mu1[f])
      return false;
  return true;
}

Matching join(const Instance& inst, const Matching& mu1, const Matching& mu2,
              EvalCounter* evals) {
  Matching out(inst.firms());
  for (int f = 0; f < inst.firms(); ++f)
    out[f] = choose(inst, {Side::Firm, f}, mu1[f] | mu2[f], evals);
  return out;
}

Matching meet(const Instance& inst, const Matching& mu1, const Matching& mu2,
              EvalCounter* evals) {
  Matching j = join(inst, mu1, mu2, evals);
  Matching out(inst.firms());
  for (int f = 0; f < inst.firms(); ++f)
    out[f] = ((mu1[f] | mu2[f]) & ~j[f]) | (mu1[f] & mu2[f]);
  return out;
}

std::vector<Mask> closure(const Instance& inst, const Matching& mu,
                          EvalCounter* evals) {
  std::vector<Mask> out(inst.firms(), 0);
  for (int f = 0; f < inst.firms(); ++f)
    for (int w : elements(inst.firm_acc[f]))
      if (choose(inst, {Side::Firm, f}, mu[f] | bit(w), evals) == mu[f])
        out[f] |= bit(w);
  return out;
}

PSet p_set(const Instance& inst, const Matching& mu,
           const PairVec& stable_pairs, EvalCounter* evals) {
  PSet out(inst.firms(), 0);
  for (int f = 0; f < inst.firms(); ++f) {
    if (stable_pairs[f] & ~inst.firm_acc[f])
      throw std::invalid_argument("p_set: stable pair outside acceptability");
    for (int w : elements(stable_pairs[f]))
      if (has(choose(inst, {Side::Firm, f}, mu[f] | bit(w), evals), w))
        out[f] |= bit(w);
  }
  return out;
}

std::vector<std::pair<int, int>> pair_list(const PairVec& pv) {
  std::vector<std::pair<int, int>> out;
  for (int f = 0; f < int(pv.size()); ++f)
    for (int w : elements(pv[f])) out.emplace_back(f, w);
  return out;
}

bool matching_less(const Matching& a, const Matching& b) {
  return pair_list(a) < pair_list(b);
}

std::string format_matching(const Instance& inst, const Matching& mu) {
  std::string out;
  for (int f = 0; f < inst.firms(); ++f)
    for (int w : elements(mu[f])) {
      out += inst.firm_names[f];
      out += ' ';
      out += inst.worker_names[w];
      out += '\n';
    }
  return out;
}

}  // namespace mk
