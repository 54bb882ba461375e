#include "matchkit/represent.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchkit/linalg.hpp"
#include "matchkit/matching.hpp"
#include "matchkit/ring_of_sets.hpp"

namespace mk {

bool is_upper_set(const RotationPoset& poset, const std::vector<int>& subset) {
  return is_upper_indices(poset.geq, subset);
}

Matching realize(const RotationPoset& poset, const std::vector<int>& upper) {
  if (!is_upper_set(poset, upper))
    throw std::invalid_argument("realize: not an upper set");
  Matching mu = poset.mu_f;
  for (int r : upper) mu = pair_union(mu, poset.rotations[r].plus);
  for (int r : upper) mu = pair_minus(mu, poset.rotations[r].minus);
  return mu;
}

std::vector<Matching> enumerate_stable(const RotationPoset& poset,
                                       long long limit) {
  int k = int(poset.rotations.size());
  std::vector<std::vector<int>> uppers;
  long long count = 0;
  std::vector<int> cur;
  // Rotations are visited in chain order, so every strict predecessor of r
  // has a smaller index; including r is legal iff all of them are in.
  auto dfs = [&](auto&& self, int r) -> void {
    if (r == k) {
      if (++count > limit)
        throw std::runtime_error("enumerate_stable: upper set limit exceeded");
      uppers.push_back(cur);
      return;
    }
    self(self, r + 1);
    for (int j = 0; j < r; ++j)
      if (poset.geq[j][r] &&
          !std::binary_search(cur.begin(), cur.end(), j))
        return;
    cur.push_back(r);
    self(self, r + 1);
    cur.pop_back();
  };
  dfs(dfs, 0);

  struct Entry {
    long long gained;
    Matching mu;
  };
  std::vector<Entry> entries;
  entries.reserve(uppers.size());
  for (const auto& u : uppers) {
    long long gained = 0;
    for (int r : u) gained += pair_count(poset.rotations[r].plus);
    entries.push_back({gained, realize(poset, u)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.gained != b.gained) return a.gained < b.gained;
    return matching_less(a.mu, b.mu);
  });
  std::vector<Matching> out;
  out.reserve(entries.size());
  for (auto& e : entries) out.push_back(std::move(e.mu));
  return out;
}

AffineMap affine_map(const RotationPoset& poset) {
  AffineMap m;
  m.pairs = pair_list(poset.firm_acc);
  int rows = int(m.pairs.size()), k = int(poset.rotations.size());
  m.a.assign(rows, std::vector<int>(k, 0));
  m.x0.assign(rows, 0);
  for (int e = 0; e < rows; ++e) {
    auto [f, w] = m.pairs[e];
    m.x0[e] = has(poset.mu_f[f], w) ? 1 : 0;
    for (int r = 0; r < k; ++r) {
      if (has(poset.rotations[r].plus[f], w))
        m.a[e][r] = 1;
      else if (has(poset.rotations[r].minus[f], w))
        m.a[e][r] = -1;
    }
  }
  std::vector<std::vector<long long>> ll(rows, std::vector<long long>(k));
  for (int e = 0; e < rows; ++e)
    for (int r = 0; r < k; ++r) ll[e][r] = m.a[e][r];
  if (rank_bareiss(ll) != k)
    throw std::logic_error("affine_map: rotation columns are rank deficient");
  return m;
}

PairVec stable_pairs(const RotationPoset& poset) {
  PairVec out = poset.mu_f;
  for (const auto& rot : poset.rotations) out = pair_union(out, rot.plus);
  return out;
}

std::vector<std::pair<int, int>> covering_relation(const RotationPoset& poset) {
  int k = int(poset.rotations.size());
  auto strict = [&](int i, int j) { return i != j && poset.geq[i][j]; };
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (!strict(i, j)) continue;
      bool covered = true;
      for (int l = 0; l < k && covered; ++l)
        if (strict(i, l) && strict(l, j)) covered = false;
      if (covered) out.emplace_back(i, j);
    }
  return out;
}

std::string format_poset(const Instance& inst, const RotationPoset& poset) {
  std::string out;
  for (int r = 0; r < int(poset.rotations.size()); ++r) {
    out += "ROTATION " + std::to_string(r + 1) + " PLUS";
    for (auto [f, w] : pair_list(poset.rotations[r].plus))
      out += ' ' + inst.firm_names[f] + ',' + inst.worker_names[w];
    out += " MINUS";
    for (auto [f, w] : pair_list(poset.rotations[r].minus))
      out += ' ' + inst.firm_names[f] + ',' + inst.worker_names[w];
    out += '\n';
  }
  for (auto [i, j] : covering_relation(poset))
    out += "ORDER " + std::to_string(i + 1) + ' ' + std::to_string(j + 1) +
           '\n';
  return out;
}

}  // namespace mk
