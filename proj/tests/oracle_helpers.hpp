// Test-side oracles, deliberately independent of the library's marking and
// kernelization code paths.
#pragma once

#include <algorithm>
#include <limits>
#include <vector>

#include "lossy/io.hpp"

namespace testsupport {

// For every label subset (bitmask over labels 0..q-1), decides whether an
// independent set of intervals realizes exactly that label set, via a
// chain DP: f[mask] = least possible max right endpoint. Realizable iff
// f[mask] is finite.
inline std::vector<long long> realizability_dp(const std::vector<lossy::labelled_interval>& iv,
                                               int q) {
  const long long inf = std::numeric_limits<long long>::max();
  std::vector<long long> f(size_t(1) << q, inf);
  f[0] = std::numeric_limits<long long>::min();
  for (int mask = 1; mask < (1 << q); ++mask) {
    for (int l = 0; l < q; ++l) {
      if (!(mask >> l & 1)) continue;
      long long prev = f[mask ^ (1 << l)];
      if (prev == inf) continue;
      for (const auto& i : iv)
        if (i.label == l && i.left > prev) f[mask] = std::min(f[mask], i.right);
    }
  }
  return f;
}

// Max size of a realizable subset of `target` (bitmask) in the collection.
inline int max_realizable_subset(const std::vector<lossy::labelled_interval>& iv, int q,
                                 int target) {
  auto f = realizability_dp(iv, q);
  const long long inf = std::numeric_limits<long long>::max();
  int best = 0;
  for (int mask = target;; mask = (mask - 1) & target) {
    if (f[mask] != inf) best = std::max(best, std::popcount(unsigned(mask)));
    if (mask == 0) break;
  }
  return best;
}

}  // namespace testsupport
