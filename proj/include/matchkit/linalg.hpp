#pragma once

#include <utility>
#include <vector>

namespace mk {

// Exact integer matrix rank via fraction-free (Bareiss) elimination.
// Entries stay integral throughout; intermediates use 128-bit products.
inline int rank_bareiss(std::vector<std::vector<long long>> m) {
  if (m.empty() || m[0].empty()) return 0;
  int rows = int(m.size()), cols = int(m[0].size());
  int rank = 0;
  long long prev = 1;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c2 = c + 1; c2 < cols; ++c2) {
        __int128 v = (__int128)m[rank][c] * m[r][c2] -
                     (__int128)m[r][c] * m[rank][c2];
        m[r][c2] = (long long)(v / prev);
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace mk
