#include "lossy/oracles.hpp"

#include <algorithm>
#include <unordered_map>

namespace lossy {

namespace {

// Enumerates size-r subsets of vs in lexicographic order.
bool next_combination(std::vector<int>& idx, int n) {
  int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

cvc_oracle_result exact_cvc(const multigraph& g, long long k, const oracle_budget& b) {
  long long n = static_cast<long long>(g.vertex_count());
  if (n > b.max_vertices) throw oracle_refusal("exact_cvc: instance over budget");
  std::vector<vertex_id> vs = g.vertices();
  if (g.edge_count() == 0) return {capped(0, k), std::set<vertex_id>{}};
  long long maxr = std::min(k, n);
  for (long long r = 1; r <= maxr; ++r) {
    std::vector<int> idx(r);
    for (long long i = 0; i < r; ++i) idx[i] = static_cast<int>(i);
    do {
      std::set<vertex_id> s;
      for (int i : idx) s.insert(vs[i]);
      if (is_connected_vertex_cover(g, s)) return {r, s};
    } while (next_combination(idx, static_cast<int>(n)));
  }
  std::set<vertex_id> all(vs.begin(), vs.end());
  if (is_connected_vertex_cover(g, all)) return {k + 1, all};
  return {k + 1, std::nullopt};  // no connected vertex cover exists at all
}

namespace {

struct cp_search {
  int n = 0;
  std::vector<vertex_id> verts;
  std::vector<std::vector<std::pair<int, int>>> adj;  // index -> (index, mult)
  std::unordered_map<uint32_t, int> memo;

  // All cycles through the lowest set vertex of mask, as index lists.
  void cycles_through(int v, uint32_t mask, std::vector<std::vector<int>>& out) const {
    for (auto& [u, m] : adj[v])
      if (u > v && m >= 2 && (mask >> u & 1)) out.push_back({v, u});
    std::vector<int> path{v};
    std::vector<bool> used(n, false);
    used[v] = true;
    dfs(v, v, mask, path, used, out);
  }

  void dfs(int start, int cur, uint32_t mask, std::vector<int>& path, std::vector<bool>& used,
           std::vector<std::vector<int>>& out) const {
    for (auto& [u, m] : adj[cur]) {
      if (!(mask >> u & 1) || u < start) continue;  // canonical: start is lowest
      if (u == start) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        continue;
      }
      if (used[u]) continue;
      used[u] = true;
      path.push_back(u);
      dfs(start, u, mask, path, used, out);
      path.pop_back();
      used[u] = false;
    }
  }

  int solve(uint32_t mask) {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int v = std::countr_zero(mask);
    int best = solve(mask & ~(uint32_t(1) << v));
    std::vector<std::vector<int>> cycles;
    cycles_through(v, mask, cycles);
    for (const auto& c : cycles) {
      uint32_t next = mask;
      for (int u : c) next &= ~(uint32_t(1) << u);
      best = std::max(best, 1 + solve(next));
    }
    memo[mask] = best;
    return best;
  }

  void reconstruct(uint32_t mask, std::vector<std::vector<int>>& packing) {
    while (mask != 0 && solve(mask) > 0) {
      int v = std::countr_zero(mask);
      if (solve(mask & ~(uint32_t(1) << v)) == solve(mask)) {
        mask &= ~(uint32_t(1) << v);
        continue;
      }
      std::vector<std::vector<int>> cycles;
      cycles_through(v, mask, cycles);
      bool advanced = false;
      for (const auto& c : cycles) {
        uint32_t next = mask;
        for (int u : c) next &= ~(uint32_t(1) << u);
        if (1 + solve(next) == solve(mask)) {
          packing.push_back(c);
          mask = next;
          advanced = true;
          break;
        }
      }
      if (!advanced) break;  // unreachable when memo is consistent
    }
  }
};

}  // namespace

cp_oracle_result exact_cp(const multigraph& g, long long k, const oracle_budget& b) {
  long long n = static_cast<long long>(g.vertex_count());
  if (n > b.max_cp_vertices) throw oracle_refusal("exact_cp: instance over budget");
  cp_search search;
  search.n = static_cast<int>(n);
  search.verts = g.vertices();
  std::map<vertex_id, int> index;
  for (int i = 0; i < search.n; ++i) index[search.verts[i]] = i;
  search.adj.resize(search.n);
  for (auto& [e, m] : g.edges()) {
    search.adj[index[e.lo]].push_back({index[e.hi], m});
    search.adj[index[e.hi]].push_back({index[e.lo], m});
  }
  uint32_t full = search.n == 32 ? ~uint32_t(0) : (uint32_t(1) << search.n) - 1;
  int best = search.solve(full);
  std::vector<std::vector<int>> packing;
  search.reconstruct(full, packing);
  long long value = capped(best, k);
  cp_oracle_result out;
  out.value = value;
  for (const auto& c : packing) {
    if (static_cast<long long>(out.witness.size()) >= value) break;
    std::vector<vertex_id> cyc;
    for (int i : c) cyc.push_back(search.verts[i]);
    out.witness.push_back(cyc);
  }
  return out;
}

df_oracle_result exact_df(const std::vector<symbol>& s, const oracle_budget& b) {
  int n = static_cast<int>(s.size());
  if (n > b.max_string_len) throw oracle_refusal("exact_df: string over budget");
  std::vector<symbol> alphabet(s.begin(), s.end());
  std::sort(alphabet.begin(), alphabet.end());
  alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
  int sigma = static_cast<int>(alphabet.size());
  if (sigma > b.max_alphabet) throw oracle_refusal("exact_df: alphabet over budget");
  std::vector<int> letter(n);
  for (int i = 0; i < n; ++i)
    letter[i] = static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), s[i]) -
                                 alphabet.begin());
  int masks = 1 << sigma;
  // dp[i][used]: best factor count achievable in s[i..] with `used` letters
  // already taken.
  std::vector<std::vector<int>> dp(n + 1, std::vector<int>(masks, 0));
  for (int i = n - 1; i >= 0; --i) {
    for (int used = 0; used < masks; ++used) {
      int best = dp[i + 1][used];
      if (!(used >> letter[i] & 1)) {
        for (int j = i + 1; j < n; ++j)
          if (letter[j] == letter[i])
            best = std::max(best, 1 + dp[j + 1][used | (1 << letter[i])]);
      }
      dp[i][used] = best;
    }
  }
  df_oracle_result out;
  out.value = dp[0][0];
  int i = 0, used = 0;
  while (i < n && dp[i][used] > 0) {
    if (dp[i][used] == dp[i + 1][used]) {
      ++i;
      continue;
    }
    bool found = false;
    for (int j = i + 1; j < n && !found; ++j) {
      if (letter[j] != letter[i] || (used >> letter[i] & 1)) continue;
      if (1 + dp[j + 1][used | (1 << letter[i])] == dp[i][used]) {
        out.witness.push_back({i, j});
        used |= 1 << letter[i];
        i = j + 1;
        found = true;
      }
    }
    if (!found) ++i;
  }
  return out;
}

pvc_oracle_result exact_pvc(const multigraph& g, long long k, const oracle_budget& b) {
  long long n = static_cast<long long>(g.vertex_count());
  if (n > b.max_vertices) throw oracle_refusal("exact_pvc: instance over budget");
  std::vector<vertex_id> vs = g.vertices();
  long long r = std::min(k, n);
  pvc_oracle_result out;
  if (r == 0) return out;
  std::vector<int> idx(r);
  for (long long i = 0; i < r; ++i) idx[i] = static_cast<int>(i);
  do {
    std::set<vertex_id> s;
    for (int i : idx) s.insert(vs[i]);
    long long covered = edges_covered(g, s);
    if (covered > out.value || out.witness.empty()) {
      out.value = covered;
      out.witness = s;
    }
  } while (next_combination(idx, static_cast<int>(n)));
  return out;
}

ola_oracle_result exact_ola(const multigraph& g, const oracle_budget& b) {
  long long n = static_cast<long long>(g.vertex_count());
  if (n > b.max_ola_vertices) throw oracle_refusal("exact_ola: instance over budget");
  std::vector<vertex_id> vs = g.vertices();
  ola_oracle_result out;
  if (n == 0) return out;
  std::vector<edge_key> edge_list;
  std::vector<int> mult;
  for (auto& [e, m] : g.edges()) {
    edge_list.push_back(e);
    mult.push_back(m);
  }
  std::map<vertex_id, int> pos_of;
  std::vector<vertex_id> perm = vs;
  long long best = -1;
  do {
    if (n > 1 && perm.front() > perm.back()) continue;  // layouts and their reversals tie
    std::map<vertex_id, int> sigma;
    for (long long i = 0; i < n; ++i) sigma[perm[i]] = static_cast<int>(i + 1);
    long long total = 0;
    for (size_t i = 0; i < edge_list.size(); ++i) {
      long long d = sigma[edge_list[i].lo] - sigma[edge_list[i].hi];
      total += mult[i] * (d < 0 ? -d : d);
      if (best >= 0 && total > best) break;
    }
    if (best < 0 || total < best) {
      best = total;
      out.witness = sigma;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.value = best;
  return out;
}

std::set<vertex_id> exact_min_vertex_cover(const multigraph& g, const oracle_budget& b) {
  long long n = static_cast<long long>(g.vertex_count());
  if (n > b.max_vertices) throw oracle_refusal("exact_min_vertex_cover: over budget");
  std::vector<vertex_id> vs = g.vertices();
  for (long long r = 0; r <= n; ++r) {
    std::vector<int> idx(r);
    for (long long i = 0; i < r; ++i) idx[i] = static_cast<int>(i);
    do {
      std::set<vertex_id> s;
      for (int i : idx) s.insert(vs[i]);
      if (is_vertex_cover(g, s)) return s;
    } while (r > 0 && next_combination(idx, static_cast<int>(n)));
  }
  return std::set<vertex_id>(vs.begin(), vs.end());
}

}  // namespace lossy
