#include "lossy/disjoint_factors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace lossy {

factor_graph build_factor_graph(const std::vector<symbol>& s) {
  factor_graph fg;
  fg.alphabet.assign(s.begin(), s.end());
  std::sort(fg.alphabet.begin(), fg.alphabet.end());
  fg.alphabet.erase(std::unique(fg.alphabet.begin(), fg.alphabet.end()), fg.alphabet.end());
  std::map<symbol, int> last;  // most recent position of each letter
  for (int j = 0; j < static_cast<int>(s.size()); ++j) {
    auto it = last.find(s[j]);
    if (it != last.end()) {
      int label = static_cast<int>(std::lower_bound(fg.alphabet.begin(), fg.alphabet.end(),
                                                    s[j]) - fg.alphabet.begin());
      fg.intervals.push_back({it->second, j, label});
    }
    last[s[j]] = j;
  }
  return fg;
}

df_kernel df_kernelize(const std::vector<symbol>& s, const rational& eps,
                       int depth_override) {
  if (!(rational(0) < eps && eps < rational(1)))
    throw std::invalid_argument("df_kernelize: epsilon must be in (0,1)");
  df_kernel out;
  out.eps = eps;
  factor_graph fg = build_factor_graph(s);
  std::set<int> kept_positions;
  if (!fg.intervals.empty()) {
    ulic_result u = build_ulic(fg.intervals, static_cast<int>(fg.alphabet.size()), eps,
                               depth_override);
    out.ulic_depth = u.depth;
    const long long cap = std::numeric_limits<long long>::max();
    out.size_bound = u.size_bound > cap / 2 ? cap : 2 * u.size_bound;
    for (int idx : u.marked) {
      kept_positions.insert(static_cast<int>(fg.intervals[idx].left));
      kept_positions.insert(static_cast<int>(fg.intervals[idx].right));
    }
  }
  for (int p : kept_positions) {
    out.position_map.push_back(p);
    out.reduced.push_back(s[p]);
  }
  return out;
}

std::vector<factor> lift_factors(const df_kernel& k, const std::vector<factor>& reduced) {
  if (!is_disjoint_factor_set(k.reduced, reduced))
    throw std::invalid_argument("lift_factors: input is not a disjoint factor set");
  std::vector<factor> out;
  for (const auto& f : reduced)
    out.push_back({k.position_map[f.begin], k.position_map[f.end]});
  return out;
}

std::vector<factor> lift_factors_total(const df_kernel& k, const std::vector<factor>& reduced) {
  if (!is_disjoint_factor_set(k.reduced, reduced)) return {};
  return lift_factors(k, reduced);
}

}  // namespace lossy
