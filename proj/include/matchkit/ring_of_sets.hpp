#pragma once

#include <functional>
#include <set>
#include <vector>

namespace mk {

// A set family closed under union and intersection, presented intensionally:
// a strictly increasing chain C_0 ⊊ ... ⊊ C_k of members plus a membership
// test. Elements are small non-negative integers; sets are sorted vectors.
using ElemSet = std::vector<int>;

struct ChainPresentation {
  std::vector<ElemSet> chain;
  std::function<bool(const ElemSet&)> member;
};

ElemSet elem_minus(const ElemSet& a, const ElemSet& b);
ElemSet elem_union(const ElemSet& a, const ElemSet& b);

// K_i = C_i \ C_{i-1} for each chain step, in chain order.
// Throws if the chain is not strictly increasing under inclusion.
std::vector<ElemSet> minimal_differences(const std::vector<ElemSet>& chain);

struct IrreducibleResult {
  // lambdas[i] ⊆ {1..i+1} with i+1 ∈ lambdas[i] (indices are 1-based).
  std::vector<std::set<int>> lambdas;
  long long membership_calls = 0;
};

// For each minimal difference K_i, the index set Λ(K_i) of the smallest ring
// member containing K_i: walk j = i-1 down to 1 and drop K_j whenever the
// family still contains the shrunken set. Requires the chain to be maximal
// in its ring of sets; O(k^2) membership calls.
IrreducibleResult irreducibles_via_chain(const ChainPresentation& chain);

// geq[i][j] == true iff K_{i+1} ⊒ K_{j+1}, i.e. Λ(K_{i+1}) ⊆ Λ(K_{j+1}).
std::vector<std::vector<bool>> order_from_lambdas(
    const std::vector<std::set<int>>& lambdas);

// True iff upper (0-based difference indices) is closed under moving up:
// j ∈ upper and geq[i][j] imply i ∈ upper.
bool is_upper_indices(const std::vector<std::vector<bool>>& geq,
                      const std::vector<int>& upper);

// Member of the ring encoded by an upper set: C_0 ∪ ⋃_{i ∈ upper} K_i.
// Throws if upper is not an upper set of the recovered order.
ElemSet reconstruct(const ElemSet& c0, const std::vector<ElemSet>& diffs,
                    const std::vector<std::vector<bool>>& geq,
                    const std::vector<int>& upper);

struct BirkhoffMatrix {
  // rows indexed by base element 0..base_size-1, columns by difference.
  std::vector<std::vector<int>> a;
  std::vector<int> x0;
};

// Column j is the characteristic vector of K_j; x0 encodes C_0. Differences
// must be pairwise disjoint, which also makes the columns independent.
BirkhoffMatrix birkhoff_matrix(const std::vector<ElemSet>& diffs,
                               const ElemSet& c0, int base_size);

}  // namespace mk
