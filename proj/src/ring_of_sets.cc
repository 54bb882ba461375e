#include "matchkit/ring_of_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace mk {

ElemSet elem_minus(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

ElemSet elem_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

static bool elem_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<ElemSet> minimal_differences(const std::vector<ElemSet>& chain) {
  std::vector<ElemSet> out;
  for (size_t i = 1; i < chain.size(); ++i) {
    if (!elem_subset(chain[i - 1], chain[i]) ||
        chain[i - 1].size() >= chain[i].size())
      throw std::invalid_argument(
          "minimal_differences: chain not strictly increasing");
    out.push_back(elem_minus(chain[i], chain[i - 1]));
  }
  return out;
}

IrreducibleResult irreducibles_via_chain(const ChainPresentation& chain) {
  std::vector<ElemSet> k = minimal_differences(chain.chain);
  IrreducibleResult res;
  res.lambdas.resize(k.size());
  for (size_t i = 0; i < k.size(); ++i) {
    ElemSet h = chain.chain[i + 1];
    std::set<int>& lam = res.lambdas[i];
    for (size_t j = 1; j <= i + 1; ++j) lam.insert(int(j));
    for (int j = int(i) - 1; j >= 0; --j) {
      ElemSet cand = elem_minus(h, k[j]);
      ++res.membership_calls;
      if (chain.member(cand)) {
        h = std::move(cand);
        lam.erase(j + 1);
      }
    }
  }
  return res;
}

std::vector<std::vector<bool>> order_from_lambdas(
    const std::vector<std::set<int>>& lambdas) {
  size_t n = lambdas.size();
  std::vector<std::vector<bool>> geq(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      geq[i][j] = std::includes(lambdas[j].begin(), lambdas[j].end(),
                                lambdas[i].begin(), lambdas[i].end());
  return geq;
}

bool is_upper_indices(const std::vector<std::vector<bool>>& geq,
                      const std::vector<int>& upper) {
  std::vector<bool> in(geq.size(), false);
  for (int i : upper) in[i] = true;
  for (size_t j = 0; j < geq.size(); ++j) {
    if (!in[j]) continue;
    for (size_t i = 0; i < geq.size(); ++i)
      if (geq[i][j] && !in[i]) return false;
  }
  return true;
}

ElemSet reconstruct(const ElemSet& c0, const std::vector<ElemSet>& diffs,
                    const std::vector<std::vector<bool>>& geq,
                    const std::vector<int>& upper) {
  if (!is_upper_indices(geq, upper))
    throw std::invalid_argument("reconstruct: not an upper set");
  ElemSet out = c0;
  for (int i : upper) out = elem_union(out, diffs[i]);
  return out;
}

BirkhoffMatrix birkhoff_matrix(const std::vector<ElemSet>& diffs,
                               const ElemSet& c0, int base_size) {
  std::vector<bool> seen(base_size, false);
  for (const ElemSet& k : diffs)
    for (int e : k) {
      if (seen[e])
        throw std::invalid_argument("birkhoff_matrix: differences overlap");
      seen[e] = true;
    }
  BirkhoffMatrix m;
  m.a.assign(base_size, std::vector<int>(diffs.size(), 0));
  m.x0.assign(base_size, 0);
  for (size_t j = 0; j < diffs.size(); ++j)
    for (int e : diffs[j]) m.a[e][j] = 1;
  for (int e : c0) m.x0[e] = 1;
  return m;
}

}  // namespace mk
