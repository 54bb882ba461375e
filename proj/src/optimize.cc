#include "matchkit/optimize.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

#include "matchkit/matching.hpp"
#include "matchkit/represent.hpp"

namespace mk {

WeightVector parse_weights(const Instance& inst, const std::string& text) {
  WeightVector w(inst.firms(),
                 std::vector<long long>(inst.workers(), 0));
  std::vector<std::vector<bool>> seen(inst.firms(),
                                      std::vector<bool>(inst.workers()));
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto pos = line.find('#'); pos != std::string::npos)
      line.erase(pos);
    std::istringstream ls(line);
    std::string fname, wname, val;
    if (!(ls >> fname)) continue;  // blank
    if (!(ls >> wname >> val))
      throw ParseError(line_no, "expected <firm> <worker> <weight>");
    std::string extra;
    if (ls >> extra) throw ParseError(line_no, "trailing tokens");
    auto fit = std::find(inst.firm_names.begin(), inst.firm_names.end(), fname);
    if (fit == inst.firm_names.end())
      throw ParseError(line_no, "unknown firm '" + fname + "'");
    auto wit =
        std::find(inst.worker_names.begin(), inst.worker_names.end(), wname);
    if (wit == inst.worker_names.end())
      throw ParseError(line_no, "unknown worker '" + wname + "'");
    int f = int(fit - inst.firm_names.begin());
    int ww = int(wit - inst.worker_names.begin());
    if (!has(inst.firm_acc[f], ww))
      throw ParseError(line_no, "pair " + fname + "," + wname +
                                    " is not mutually acceptable");
    if (seen[f][ww])
      throw ParseError(line_no, "duplicate weight for " + fname + "," + wname);
    seen[f][ww] = true;
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(val, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "weight '" + val + "' is not an integer");
    }
    if (used != val.size())
      throw ParseError(line_no, "weight '" + val + "' is not an integer");
    w[f][ww] = v;
  }
  return w;
}

ClosureResult max_weight_closure(const std::vector<long long>& c,
                                 const std::vector<std::vector<bool>>& geq) {
  int k = int(c.size());
  int src = k, snk = k + 1, n = k + 2;
  long long pos = 0;
  for (long long v : c)
    if (v > 0) pos += v;
  long long inf = pos + 1;
  std::vector<std::vector<long long>> cap(n, std::vector<long long>(n, 0));
  for (int i = 0; i < k; ++i) {
    if (c[i] > 0) cap[src][i] = c[i];
    if (c[i] < 0) cap[i][snk] = -c[i];
    // Membership of i forces membership of everything above it.
    for (int j = 0; j < k; ++j)
      if (j != i && geq[j][i]) cap[i][j] = inf;
  }
  long long flow = 0;
  for (;;) {  // Edmonds-Karp: shortest augmenting paths on the residual
    std::vector<int> prev(n, -1);
    prev[src] = src;
    std::deque<int> q{src};
    while (!q.empty() && prev[snk] < 0) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < n; ++v)
        if (prev[v] < 0 && cap[u][v] > 0) {
          prev[v] = u;
          q.push_back(v);
        }
    }
    if (prev[snk] < 0) break;
    long long aug = inf;
    for (int v = snk; v != src; v = prev[v])
      aug = std::min(aug, cap[prev[v]][v]);
    for (int v = snk; v != src; v = prev[v]) {
      cap[prev[v]][v] -= aug;
      cap[v][prev[v]] += aug;
    }
    flow += aug;
  }
  // Source side of the canonical minimum cut: inclusion-minimal optimum.
  std::vector<bool> reach(n, false);
  reach[src] = true;
  std::deque<int> q{src};
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v = 0; v < n; ++v)
      if (!reach[v] && cap[u][v] > 0) {
        reach[v] = true;
        q.push_back(v);
      }
  }
  ClosureResult res;
  res.flow = flow;
  for (int i = 0; i < k; ++i)
    if (reach[i]) {
      res.upper.push_back(i);
      res.value += c[i];
    }
  return res;
}

long long matching_weight(const Matching& mu, const WeightVector& weights) {
  long long v = 0;
  for (auto [f, w] : pair_list(mu)) v += weights[f][w];
  return v;
}

WeightedMatching max_weight_stable_matching(const Instance& inst,
                                            const WeightVector& weights) {
  RotationPoset poset = rotation_poset(inst);
  int k = int(poset.rotations.size());
  std::vector<long long> c(k, 0);
  for (int r = 0; r < k; ++r) {
    for (auto [f, w] : pair_list(poset.rotations[r].plus))
      c[r] += weights[f][w];
    for (auto [f, w] : pair_list(poset.rotations[r].minus))
      c[r] -= weights[f][w];
  }
  ClosureResult cl = max_weight_closure(c, poset.geq);
  WeightedMatching out;
  out.matching = realize(poset, cl.upper);
  out.value = matching_weight(out.matching, weights);
  return out;
}

}  // namespace mk
