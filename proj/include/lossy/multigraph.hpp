#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace lossy {

using vertex_id = int;

// Unordered vertex pair, stored with lo <= hi.
struct edge_key {
  vertex_id lo = 0;
  vertex_id hi = 0;
  edge_key() = default;
  edge_key(vertex_id u, vertex_id v) : lo(u < v ? u : v), hi(u < v ? v : u) {}
  auto operator<=>(const edge_key&) const = default;
};

// Undirected multigraph with stable integer vertex ids, parallel-edge
// multiplicities and optional nonnegative integer edge weights. Self-loops
// are rejected; contraction discards any loop it would create.
class multigraph {
 public:
  multigraph() = default;

  vertex_id add_vertex();          // allocates the next unused id
  void add_vertex(vertex_id v);    // adds an explicit id (must be fresh)
  void add_edge(vertex_id u, vertex_id v, int mult = 1);
  void set_multiplicity(vertex_id u, vertex_id v, int mult);
  void remove_edge(vertex_id u, vertex_id v, int count);
  void remove_vertex(vertex_id v);
  // Contracts edge uv into a fresh vertex and returns its id. Parallel
  // edges toward common neighbours are merged into multiplicities; loops
  // are discarded. Weighted graphs are never contracted by the kernels in
  // scope, so contraction drops edge weights.
  vertex_id contract(vertex_id u, vertex_id v);

  void set_weight(vertex_id u, vertex_id v, long long w);
  std::optional<long long> weight(vertex_id u, vertex_id v) const;
  bool weighted() const { return !weight_.empty(); }

  bool has_vertex(vertex_id v) const { return adj_.count(v) > 0; }
  bool has_edge(vertex_id u, vertex_id v) const { return multiplicity(u, v) > 0; }
  int multiplicity(vertex_id u, vertex_id v) const;
  // Degree counts multiplicities.
  int degree(vertex_id v) const;
  const std::map<vertex_id, int>& neighbors(vertex_id v) const;

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const;        // total multiplicity
  std::size_t distinct_edge_count() const;
  std::vector<vertex_id> vertices() const;
  std::map<edge_key, int> edges() const;  // multiplicities, each pair once

  vertex_id next_id() const { return next_id_; }
  void reserve_id(vertex_id v);  // bumps the fresh-id counter past v

  std::vector<std::vector<vertex_id>> components() const;
  bool connected() const;
  multigraph induced(const std::set<vertex_id>& keep) const;
  bool is_forest() const;

  bool operator==(const multigraph& o) const {
    return adj_ == o.adj_ && weight_ == o.weight_;
  }

 private:
  std::map<vertex_id, std::map<vertex_id, int>> adj_;
  std::map<edge_key, long long> weight_;
  vertex_id next_id_ = 0;
};

// One replayable edit. delete_vertex / delete_edge / contract_edge are the
// minor operations; add_vertex / add_edge cover kernels whose reduced
// instance is not a pure minor (degree rule gadgets, constant instances).
struct edit_op {
  enum class kind { delete_vertex, delete_edge, contract_edge, add_vertex, add_edge };
  kind op = kind::delete_vertex;
  vertex_id u = -1;
  vertex_id v = -1;
  int count = 0;        // delete_edge / add_edge multiplicity
  vertex_id result = -1;  // contract_edge: merged id; add_vertex: new id

  static edit_op del_vertex(vertex_id v);
  static edit_op del_edge(vertex_id u, vertex_id v, int count);
  static edit_op contract(vertex_id u, vertex_id v, vertex_id result);
  static edit_op new_vertex(vertex_id v);
  static edit_op new_edge(vertex_id u, vertex_id v, int count);

  std::string to_json() const;
  static edit_op from_json(const std::string& line);
  bool operator==(const edit_op&) const = default;
};

// Ordered edit log plus ancestry bookkeeping: every vertex of the reduced
// graph that descends from original vertices maps to its set of origins.
// Replaying the ops against the original graph reproduces the reduced graph
// exactly, which is what makes solution lifting trustworthy.
class transcript {
 public:
  transcript() = default;
  explicit transcript(const multigraph& original);

  const std::vector<edit_op>& ops() const { return ops_; }
  const std::set<vertex_id>& original_vertices() const { return original_; }
  const std::set<vertex_id>& deleted_originals() const { return deleted_; }

  // Ancestry of a reduced-graph vertex: the original ids merged into it.
  // Vertices introduced by add_vertex have empty ancestry. Throws on ids
  // the transcript has never seen.
  const std::set<vertex_id>& ancestry(vertex_id reduced) const;
  bool known(vertex_id reduced) const { return ancestry_.count(reduced) > 0; }

  // Recorded mutations; g must be the graph the transcript currently
  // describes and is edited in place.
  void delete_vertex(multigraph& g, vertex_id v);
  void delete_edge(multigraph& g, vertex_id u, vertex_id v, int count);
  vertex_id contract_edge(multigraph& g, vertex_id u, vertex_id v);
  vertex_id add_vertex(multigraph& g);
  void add_edge(multigraph& g, vertex_id u, vertex_id v, int count = 1);

  // Maps a set of reduced-graph vertices back to original vertices by
  // expanding ancestries (identity on an empty transcript).
  std::set<vertex_id> lift_vertices(const std::set<vertex_id>& reduced) const;

  // Checks the ancestry partition: ancestries are pairwise disjoint and,
  // together with the deleted originals, cover V(original) exactly.
  bool ancestry_partition_ok() const;

  std::string to_json_lines() const;

 private:
  std::vector<edit_op> ops_;
  std::set<vertex_id> original_;
  std::set<vertex_id> deleted_;
  std::map<vertex_id, std::set<vertex_id>> ancestry_;
};

// Applies recorded ops to a copy of `original`; the result must equal the
// reduced graph the transcript was built against.
multigraph replay(const multigraph& original, const std::vector<edit_op>& ops);

}  // namespace lossy
