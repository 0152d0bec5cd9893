#pragma once

#include <map>
#include <set>
#include <vector>

#include "lossy/framework.hpp"
#include "lossy/io.hpp"
#include "lossy/multigraph.hpp"

namespace lossy {

// Value functions for the six problems, exactly as the framework defines
// them: infeasible candidates are +inf for minimization and -inf for
// maximization; CVC and CP cap feasible values at k+1.

bool is_vertex_cover(const multigraph& g, const std::set<vertex_id>& s);
// The empty set induces a (vacuously) connected subgraph.
bool induces_connected(const multigraph& g, const std::set<vertex_id>& s);
bool is_connected_vertex_cover(const multigraph& g, const std::set<vertex_id>& s);
ext_value cvc_value(const multigraph& g, long long k, const std::set<vertex_id>& s);

// A cycle is listed in cyclic vertex order; two vertices joined by a
// parallel pair form a valid cycle (digon), loops do not exist.
bool is_cycle(const multigraph& g, const std::vector<vertex_id>& c);
bool is_cycle_packing(const multigraph& g, const std::vector<std::vector<vertex_id>>& p);
ext_value cp_value(const multigraph& g, long long k,
                   const std::vector<std::vector<vertex_id>>& p);

// Position substring [begin, end] (0-based, inclusive) of length >= 2 that
// starts and ends with the same symbol.
struct factor {
  int begin = 0;
  int end = 0;
  auto operator<=>(const factor&) const = default;
};
bool is_factor(const std::vector<symbol>& s, const factor& f);
// Pairwise disjoint (not even sharing endpoints) with distinct start letters.
bool is_disjoint_factor_set(const std::vector<symbol>& s, const std::vector<factor>& fs);
ext_value df_value(const std::vector<symbol>& s, const std::vector<factor>& fs);

long long edges_covered(const multigraph& g, const std::set<vertex_id>& s);
ext_value pvc_value(const multigraph& g, long long k, const std::set<vertex_id>& s);

// Linear layouts are bijections onto 1..n.
bool is_linear_layout(const multigraph& g, const std::map<vertex_id, int>& sigma);
long long ola_val(const multigraph& g, const std::map<vertex_id, int>& sigma);
ext_value ola_value(const multigraph& g, const std::set<vertex_id>& cover, long long k,
                    const std::map<vertex_id, int>& sigma);

// Steiner trees are edge sets of g spanning all terminals in one tree.
bool is_steiner_tree(const multigraph& g, const std::set<vertex_id>& terminals,
                     const std::vector<edge_key>& tree);
long long tree_cost(const multigraph& g, const std::vector<edge_key>& tree);
ext_value steiner_value(const multigraph& g, const std::set<vertex_id>& terminals,
                        long long k, const std::vector<edge_key>& tree);

}  // namespace lossy
