#pragma once

#include <set>
#include <vector>

#include "lossy/io.hpp"
#include "lossy/rational.hpp"

namespace lossy {

// Universal independent-set covering for labelled interval collections:
// build_ulic returns a subset X of the intervals such that every
// independent set S has an independent S' inside X with label set contained
// in Gamma(S) and |Gamma(S')| >= (1-eps)|Gamma(S)|.

bool intervals_overlap(const labelled_interval& a, const labelled_interval& b);
bool independent_intervals(const std::vector<labelled_interval>& iv,
                           const std::vector<int>& chosen);

// Maximum number of intervals sharing a point; equals the chromatic number
// of the interval graph.
int max_clique(const std::vector<labelled_interval>& iv);

// Proper coloring by left-endpoint sweep, reusing freed colors; uses
// exactly max_clique colors.
std::vector<int> interval_min_coloring(const std::vector<labelled_interval>& iv);

// An instance whose labelling is already a proper coloring: every label
// class is an independent set, labels range over [0, label_count) and
// label_count doubles as the rich/poor threshold.
struct refined_instance {
  std::vector<labelled_interval> intervals;
  int label_count = 0;
};

// Greedy realization of a set of rich labels: repeatedly takes the
// minimum-right-endpoint interval carrying a wanted label and removes its
// closed neighbourhood. `present` are indices into inst.intervals; every
// label in `wanted` must occur on at least |wanted| of them.
std::vector<int> greedy_rich_realization(const refined_instance& inst,
                                         const std::vector<int>& present,
                                         const std::set<int>& wanted);

// Bounded-depth marking recursion over endpoint gaps. depth >= 1; depth 1
// marks nothing. Returns indices into inst.intervals.
std::set<int> mark_intervals(const refined_instance& inst, int depth);

struct ulic_result {
  std::set<int> marked;        // indices into the input interval list
  int refined_label_count = 0;  // k = q * chi
  int chromatic_number = 0;
  int depth = 0;
  long long size_bound = 0;  // closed form of T(depth), saturated
};

// Full pipeline: refine labels with a proper coloring, set eps' = eps/2,
// pick depth ceil((1/eps')*log2(1/eps')) (bumped until
// (1-eps')^depth <= eps'), and mark. depth_override > 0 skips the formula.
ulic_result build_ulic(const std::vector<labelled_interval>& iv, int label_count,
                       const rational& eps, int depth_override = 0);

long long ulic_size_bound(int label_count, int depth);

}  // namespace lossy
