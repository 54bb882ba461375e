#include "matchkit/brute_force.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "matchkit/matching.hpp"

namespace mk {

namespace {

std::string pairs_text(const Instance& inst, const Matching& mu) {
  std::string s = "{";
  for (auto [f, w] : pair_list(mu)) {
    if (s.size() > 1) s += ' ';
    s += inst.firm_names[f] + "," + inst.worker_names[w];
  }
  return s + "}";
}

}  // namespace

std::vector<Matching> enumerate_stable_bruteforce(const Instance& inst,
                                                  long long limit) {
  long long nodes = 0;
  auto tick = [&] {
    if (++nodes > limit)
      throw std::runtime_error("brute force: node limit exceeded");
  };

  // Candidate rows per firm: self-chosen subsets of the acceptable set no
  // larger than the declared quota (or the whole set when none is declared).
  std::vector<std::vector<Mask>> rows(inst.firms());
  for (int f = 0; f < inst.firms(); ++f) {
    Mask acc = inst.firm_acc[f];
    int cap = inst.firm_quota[f] ? *inst.firm_quota[f] : set_size(acc);
    Mask s = 0;
    do {
      tick();
      if (set_size(s) <= cap && choose(inst, {Side::Firm, f}, s) == s)
        rows[f].push_back(s);
      s = (s - acc) & acc;
    } while (s != 0);
  }

  std::vector<Matching> out;
  Matching cur(inst.firms(), 0);
  auto dfs = [&](auto&& self, int f) -> void {
    tick();
    if (f == inst.firms()) {
      if (is_stable(inst, cur)) out.push_back(cur);
      return;
    }
    for (Mask s : rows[f]) {
      cur[f] = s;
      self(self, f + 1);
    }
    cur[f] = 0;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), matching_less);
  return out;
}

LatticeReport verify_lattice(const Instance& inst, long long limit) {
  std::vector<Matching> s = enumerate_stable_bruteforce(inst, limit);
  LatticeReport rep;
  std::set<Matching> member(s.begin(), s.end());
  auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.witness.empty()) rep.witness = what;
  };

  for (const Matching& a : s)
    for (const Matching& b : s) {
      Matching j = join(inst, a, b);
      if (rep.join_closed && !member.count(j))
        note(rep.join_closed, "join of " + pairs_text(inst, a) + " and " +
                                  pairs_text(inst, b) + " is not stable");
      if (rep.meet_closed && !member.count(meet(inst, a, b)))
        note(rep.meet_closed, "meet of " + pairs_text(inst, a) + " and " +
                                  pairs_text(inst, b) + " is not stable");
      if (rep.polarity) {
        bool dom_f = dominates(inst, a, b);
        bool dom_w = true;
        for (int w = 0; w < inst.workers() && dom_w; ++w) {
          Mask aw = worker_view(a, inst.firms(), w);
          Mask bw = worker_view(b, inst.firms(), w);
          if (choose(inst, {Side::Worker, w}, aw | bw) != bw) dom_w = false;
        }
        if (dom_f != dom_w)
          note(rep.polarity, "sides disagree on " + pairs_text(inst, a) +
                                 " vs " + pairs_text(inst, b));
      }
      if (rep.concordance) {
        bool ok = true;
        for (int f = 0; f < inst.firms(); ++f)
          if ((a[f] & b[f]) & ~j[f]) ok = false;
        for (int w = 0; w < inst.workers() && ok; ++w) {
          Mask aw = worker_view(a, inst.firms(), w);
          Mask bw = worker_view(b, inst.firms(), w);
          if ((aw & bw) & ~worker_view(j, inst.firms(), w)) ok = false;
        }
        if (!ok)
          note(rep.concordance, "join of " + pairs_text(inst, a) + " and " +
                                    pairs_text(inst, b) +
                                    " drops a common pair");
      }
    }

  for (const Matching& a : s)
    for (const Matching& b : s)
      for (const Matching& c : s) {
        if (!rep.distributive) break;
        Matching l = join(inst, a, meet(inst, b, c));
        Matching r = meet(inst, join(inst, a, b), join(inst, a, c));
        if (l != r)
          note(rep.distributive,
               "distributivity fails on " + pairs_text(inst, a) + ", " +
                   pairs_text(inst, b) + ", " + pairs_text(inst, c));
      }

  if (!s.empty()) {
    rep.firm_qbar.resize(inst.firms());
    rep.worker_qbar.resize(inst.workers());
    for (int f = 0; f < inst.firms(); ++f) {
      rep.firm_qbar[f] = set_size(s[0][f]);
      for (const Matching& a : s)
        if (set_size(a[f]) != rep.firm_qbar[f])
          note(rep.equal_quota,
               "firm " + inst.firm_names[f] + " size varies");
    }
    for (int w = 0; w < inst.workers(); ++w) {
      Mask first = worker_view(s[0], inst.firms(), w);
      rep.worker_qbar[w] = set_size(first);
      for (const Matching& a : s)
        if (set_size(worker_view(a, inst.firms(), w)) != rep.worker_qbar[w])
          note(rep.equal_quota,
               "worker " + inst.worker_names[w] + " size varies");
      if (inst.worker_quota[w] && rep.worker_qbar[w] < *inst.worker_quota[w])
        for (const Matching& a : s)
          if (worker_view(a, inst.firms(), w) != first)
            note(rep.full_quota, "under-quota worker " +
                                     inst.worker_names[w] +
                                     " changes partners");
    }
  }
  return rep;
}

WeightedMatching max_weight_bruteforce(const Instance& inst,
                                       const WeightVector& weights,
                                       long long limit) {
  std::vector<Matching> s = enumerate_stable_bruteforce(inst, limit);
  if (s.empty()) throw std::runtime_error("no stable matching found");
  WeightedMatching best{s[0], matching_weight(s[0], weights)};
  for (const Matching& m : s) {
    long long v = matching_weight(m, weights);
    if (v > best.value) best = {m, v};
  }
  return best;
}

}  // namespace mk
