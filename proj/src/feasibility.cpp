#include "lossy/feasibility.hpp"

#include <algorithm>

namespace lossy {

bool is_vertex_cover(const multigraph& g, const std::set<vertex_id>& s) {
  for (auto& [e, m] : g.edges())
    if (!s.count(e.lo) && !s.count(e.hi)) return false;
  return true;
}

bool induces_connected(const multigraph& g, const std::set<vertex_id>& s) {
  if (s.empty()) return true;
  for (vertex_id v : s)
    if (!g.has_vertex(v)) return false;
  std::set<vertex_id> seen;
  std::vector<vertex_id> stack{*s.begin()};
  seen.insert(*s.begin());
  while (!stack.empty()) {
    vertex_id v = stack.back();
    stack.pop_back();
    for (auto& [u, m] : g.neighbors(v))
      if (s.count(u) && seen.insert(u).second) stack.push_back(u);
  }
  return seen.size() == s.size();
}

bool is_connected_vertex_cover(const multigraph& g, const std::set<vertex_id>& s) {
  return is_vertex_cover(g, s) && induces_connected(g, s);
}

ext_value cvc_value(const multigraph& g, long long k, const std::set<vertex_id>& s) {
  if (!is_connected_vertex_cover(g, s)) return ext_value::pos_inf();
  return ext_value::finite(capped(static_cast<long long>(s.size()), k));
}

bool is_cycle(const multigraph& g, const std::vector<vertex_id>& c) {
  if (c.size() < 2) return false;
  std::set<vertex_id> seen(c.begin(), c.end());
  if (seen.size() != c.size()) return false;
  for (vertex_id v : c)
    if (!g.has_vertex(v)) return false;
  if (c.size() == 2) return g.multiplicity(c[0], c[1]) >= 2;
  for (size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

bool is_cycle_packing(const multigraph& g, const std::vector<std::vector<vertex_id>>& p) {
  std::set<vertex_id> used;
  for (const auto& c : p) {
    if (!is_cycle(g, c)) return false;
    for (vertex_id v : c)
      if (!used.insert(v).second) return false;
  }
  return true;
}

ext_value cp_value(const multigraph& g, long long k,
                   const std::vector<std::vector<vertex_id>>& p) {
  if (!is_cycle_packing(g, p)) return ext_value::neg_inf();
  return ext_value::finite(capped(static_cast<long long>(p.size()), k));
}

bool is_factor(const std::vector<symbol>& s, const factor& f) {
  int n = static_cast<int>(s.size());
  return f.begin >= 0 && f.end < n && f.end > f.begin && s[f.begin] == s[f.end];
}

bool is_disjoint_factor_set(const std::vector<symbol>& s, const std::vector<factor>& fs) {
  std::set<symbol> letters;
  std::vector<factor> sorted = fs;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (!is_factor(s, sorted[i])) return false;
    if (!letters.insert(s[sorted[i].begin]).second) return false;
    if (i > 0 && sorted[i].begin <= sorted[i - 1].end) return false;
  }
  return true;
}

ext_value df_value(const std::vector<symbol>& s, const std::vector<factor>& fs) {
  if (!is_disjoint_factor_set(s, fs)) return ext_value::neg_inf();
  return ext_value::finite(static_cast<long long>(fs.size()));
}

long long edges_covered(const multigraph& g, const std::set<vertex_id>& s) {
  long long covered = 0;
  for (auto& [e, m] : g.edges())
    if (s.count(e.lo) || s.count(e.hi)) covered += m;
  return covered;
}

ext_value pvc_value(const multigraph& g, long long k, const std::set<vertex_id>& s) {
  if (static_cast<long long>(s.size()) > k) return ext_value::neg_inf();
  for (vertex_id v : s)
    if (!g.has_vertex(v)) return ext_value::neg_inf();
  return ext_value::finite(edges_covered(g, s));
}

bool is_linear_layout(const multigraph& g, const std::map<vertex_id, int>& sigma) {
  if (sigma.size() != g.vertex_count()) return false;
  std::set<int> positions;
  for (auto& [v, pos] : sigma) {
    if (!g.has_vertex(v)) return false;
    if (pos < 1 || pos > static_cast<int>(g.vertex_count())) return false;
    if (!positions.insert(pos).second) return false;
  }
  return true;
}

long long ola_val(const multigraph& g, const std::map<vertex_id, int>& sigma) {
  long long total = 0;
  for (auto& [e, m] : g.edges()) {
    long long d = sigma.at(e.lo) - sigma.at(e.hi);
    total += static_cast<long long>(m) * (d < 0 ? -d : d);
  }
  return total;
}

ext_value ola_value(const multigraph& g, const std::set<vertex_id>& cover, long long k,
                    const std::map<vertex_id, int>& sigma) {
  if (static_cast<long long>(cover.size()) > k || !is_vertex_cover(g, cover))
    return ext_value::neg_inf();
  if (!is_linear_layout(g, sigma)) return ext_value::pos_inf();
  return ext_value::finite(ola_val(g, sigma));
}

bool is_steiner_tree(const multigraph& g, const std::set<vertex_id>& terminals,
                     const std::vector<edge_key>& tree) {
  std::set<vertex_id> verts;
  std::set<edge_key> distinct;
  for (const auto& e : tree) {
    if (!g.has_edge(e.lo, e.hi)) return false;
    if (!distinct.insert(e).second) return false;
    verts.insert(e.lo);
    verts.insert(e.hi);
  }
  if (terminals.empty()) return tree.empty();
  if (terminals.size() == 1 && tree.empty()) return g.has_vertex(*terminals.begin());
  for (vertex_id t : terminals)
    if (!verts.count(t)) return false;
  // A tree: connected and |E| = |V| - 1.
  if (tree.size() + 1 != verts.size()) return false;
  std::map<vertex_id, std::vector<vertex_id>> adj;
  for (const auto& e : tree) {
    adj[e.lo].push_back(e.hi);
    adj[e.hi].push_back(e.lo);
  }
  std::set<vertex_id> seen{*verts.begin()};
  std::vector<vertex_id> stack{*verts.begin()};
  while (!stack.empty()) {
    vertex_id v = stack.back();
    stack.pop_back();
    for (vertex_id u : adj[v])
      if (seen.insert(u).second) stack.push_back(u);
  }
  return seen.size() == verts.size();
}

long long tree_cost(const multigraph& g, const std::vector<edge_key>& tree) {
  long long total = 0;
  for (const auto& e : tree) {
    auto w = g.weight(e.lo, e.hi);
    total += w ? *w : 0;
  }
  return total;
}

ext_value steiner_value(const multigraph& g, const std::set<vertex_id>& terminals,
                        long long k, const std::vector<edge_key>& tree) {
  if (static_cast<long long>(terminals.size()) > k) return ext_value::neg_inf();
  if (!is_steiner_tree(g, terminals, tree)) return ext_value::pos_inf();
  return ext_value::finite(tree_cost(g, tree));
}

}  // namespace lossy
