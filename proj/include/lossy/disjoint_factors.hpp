#pragma once

#include "lossy/feasibility.hpp"
#include "lossy/ulic.hpp"

namespace lossy {

// The factor interval graph of a string: one interval [i, j] (0-based
// positions) per consecutive pair of equal letters, labelled by the letter.
// Its max clique never exceeds 2|Sigma|.
struct factor_graph {
  std::vector<labelled_interval> intervals;
  std::vector<symbol> alphabet;  // sorted distinct symbols; labels index it
};
factor_graph build_factor_graph(const std::vector<symbol>& s);

struct df_kernel {
  std::vector<symbol> reduced;     // L' = L/S
  std::vector<int> position_map;   // reduced position -> original position
  rational eps;
  long long size_bound = 0;  // declared bound on |L'| (twice the ULIC bound)
  int ulic_depth = 0;
};

// Deletes every position that is not an endpoint of a ULIC-marked factor
// interval. OPT(L') >= (1-eps) OPT(L).
df_kernel df_kernelize(const std::vector<symbol>& s, const rational& eps,
                       int depth_override = 0);

// Maps factors of the reduced string back through the position map; the
// map is strictly increasing, so disjointness, letters and lengths carry
// over and |F| = |F'|. Throws if the input factors are not a valid disjoint
// factor set of the reduced string.
std::vector<factor> lift_factors(const df_kernel& k, const std::vector<factor>& reduced);

// Total lifter: infeasible reduced solutions fall back to the empty set.
std::vector<factor> lift_factors_total(const df_kernel& k, const std::vector<factor>& reduced);

}  // namespace lossy
