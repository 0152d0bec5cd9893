#include "lossy/multigraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lossy {

vertex_id multigraph::add_vertex() {
  vertex_id v = next_id_;
  add_vertex(v);
  return v;
}

void multigraph::add_vertex(vertex_id v) {
  if (v < 0) throw std::invalid_argument("add_vertex: negative id");
  if (adj_.count(v)) throw std::invalid_argument("add_vertex: id already live");
  adj_[v];
  if (v >= next_id_) next_id_ = v + 1;
}

void multigraph::add_edge(vertex_id u, vertex_id v, int mult) {
  if (u == v) throw std::invalid_argument("add_edge: self-loop");
  if (mult < 1) throw std::invalid_argument("add_edge: multiplicity < 1");
  if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("add_edge: unknown endpoint");
  adj_[u][v] += mult;
  adj_[v][u] += mult;
}

void multigraph::set_multiplicity(vertex_id u, vertex_id v, int mult) {
  if (u == v) throw std::invalid_argument("set_multiplicity: self-loop");
  if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("set_multiplicity: unknown endpoint");
  if (mult == 0) {
    adj_[u].erase(v);
    adj_[v].erase(u);
    weight_.erase(edge_key(u, v));
  } else if (mult > 0) {
    adj_[u][v] = mult;
    adj_[v][u] = mult;
  } else {
    throw std::invalid_argument("set_multiplicity: negative");
  }
}

void multigraph::remove_edge(vertex_id u, vertex_id v, int count) {
  int m = multiplicity(u, v);
  if (count < 1 || count > m) throw std::invalid_argument("remove_edge: bad count");
  set_multiplicity(u, v, m - count);
}

void multigraph::remove_vertex(vertex_id v) {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("remove_vertex: unknown vertex");
  for (auto& [u, m] : it->second) {
    adj_[u].erase(v);
    weight_.erase(edge_key(u, v));
  }
  adj_.erase(it);
}

vertex_id multigraph::contract(vertex_id u, vertex_id v) {
  if (!has_edge(u, v)) throw std::invalid_argument("contract: non-edge");
  if (weighted()) throw std::logic_error("contract: weighted graphs are not contracted");
  vertex_id w = next_id_;
  add_vertex(w);
  for (vertex_id old : {u, v}) {
    for (auto& [x, m] : adj_.at(old)) {
      if (x == u || x == v || x == w) continue;  // the uv edge becomes a loop: drop
      adj_[w][x] += m;
      adj_[x][w] += m;
    }
  }
  remove_vertex(u);
  remove_vertex(v);
  return w;
}

void multigraph::set_weight(vertex_id u, vertex_id v, long long w) {
  if (!has_edge(u, v)) throw std::invalid_argument("set_weight: non-edge");
  if (w < 0) throw std::invalid_argument("set_weight: negative weight");
  weight_[edge_key(u, v)] = w;
}

std::optional<long long> multigraph::weight(vertex_id u, vertex_id v) const {
  auto it = weight_.find(edge_key(u, v));
  if (it == weight_.end()) return std::nullopt;
  return it->second;
}

int multigraph::multiplicity(vertex_id u, vertex_id v) const {
  auto it = adj_.find(u);
  if (it == adj_.end()) return 0;
  auto jt = it->second.find(v);
  return jt == it->second.end() ? 0 : jt->second;
}

int multigraph::degree(vertex_id v) const {
  int d = 0;
  for (auto& [u, m] : neighbors(v)) d += m;
  return d;
}

const std::map<vertex_id, int>& multigraph::neighbors(vertex_id v) const {
  auto it = adj_.find(v);
  if (it == adj_.end()) throw std::invalid_argument("neighbors: unknown vertex");
  return it->second;
}

std::size_t multigraph::edge_count() const {
  std::size_t total = 0;
  for (auto& [v, nbrs] : adj_)
    for (auto& [u, m] : nbrs) total += m;
  return total / 2;
}

std::size_t multigraph::distinct_edge_count() const {
  std::size_t total = 0;
  for (auto& [v, nbrs] : adj_) total += nbrs.size();
  return total / 2;
}

std::vector<vertex_id> multigraph::vertices() const {
  std::vector<vertex_id> out;
  out.reserve(adj_.size());
  for (auto& [v, _] : adj_) out.push_back(v);
  return out;
}

std::map<edge_key, int> multigraph::edges() const {
  std::map<edge_key, int> out;
  for (auto& [v, nbrs] : adj_)
    for (auto& [u, m] : nbrs)
      if (v < u) out[edge_key(v, u)] = m;
  return out;
}

void multigraph::reserve_id(vertex_id v) {
  if (v >= next_id_) next_id_ = v + 1;
}

std::vector<std::vector<vertex_id>> multigraph::components() const {
  std::vector<std::vector<vertex_id>> comps;
  std::set<vertex_id> seen;
  for (auto& [start, _] : adj_) {
    if (seen.count(start)) continue;
    std::vector<vertex_id> comp, stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      vertex_id v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (auto& [u, m] : adj_.at(v))
        if (seen.insert(u).second) stack.push_back(u);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool multigraph::connected() const {
  return adj_.empty() || components().size() == 1;
}

multigraph multigraph::induced(const std::set<vertex_id>& keep) const {
  multigraph h;
  for (vertex_id v : keep) {
    if (!has_vertex(v)) throw std::invalid_argument("induced: unknown vertex");
    h.add_vertex(v);
  }
  for (vertex_id v : keep)
    for (auto& [u, m] : adj_.at(v))
      if (v < u && keep.count(u)) {
        h.add_edge(v, u, m);
        if (auto w = weight(v, u)) h.set_weight(v, u, *w);
      }
  h.next_id_ = next_id_;
  return h;
}

bool multigraph::is_forest() const {
  // Any parallel edge is already a cycle.
  for (auto& [v, nbrs] : adj_)
    for (auto& [u, m] : nbrs)
      if (m > 1) return false;
  std::size_t n = vertex_count(), m = edge_count();
  return m + components().size() == n;
}

edit_op edit_op::del_vertex(vertex_id v) { return {kind::delete_vertex, v, -1, 0, -1}; }
edit_op edit_op::del_edge(vertex_id u, vertex_id v, int count) { return {kind::delete_edge, u, v, count, -1}; }
edit_op edit_op::contract(vertex_id u, vertex_id v, vertex_id result) { return {kind::contract_edge, u, v, 0, result}; }
edit_op edit_op::new_vertex(vertex_id v) { return {kind::add_vertex, -1, -1, 0, v}; }
edit_op edit_op::new_edge(vertex_id u, vertex_id v, int count) { return {kind::add_edge, u, v, count, -1}; }

namespace {
const char* kind_name(edit_op::kind k) {
  switch (k) {
    case edit_op::kind::delete_vertex: return "delete_vertex";
    case edit_op::kind::delete_edge: return "delete_edge";
    case edit_op::kind::contract_edge: return "contract_edge";
    case edit_op::kind::add_vertex: return "add_vertex";
    case edit_op::kind::add_edge: return "add_edge";
  }
  return "?";
}

edit_op::kind kind_from_name(const std::string& s) {
  if (s == "delete_vertex") return edit_op::kind::delete_vertex;
  if (s == "delete_edge") return edit_op::kind::delete_edge;
  if (s == "contract_edge") return edit_op::kind::contract_edge;
  if (s == "add_vertex") return edit_op::kind::add_vertex;
  if (s == "add_edge") return edit_op::kind::add_edge;
  throw std::invalid_argument("edit_op: unknown kind '" + s + "'");
}
}  // namespace

std::string edit_op::to_json() const {
  nlohmann::json j;
  j["op"] = kind_name(op);
  switch (op) {
    case kind::delete_vertex: j["v"] = u; break;
    case kind::delete_edge: j["u"] = u; j["v"] = v; j["count"] = count; break;
    case kind::contract_edge: j["u"] = u; j["v"] = v; j["result"] = result; break;
    case kind::add_vertex: j["v"] = result; break;
    case kind::add_edge: j["u"] = u; j["v"] = v; j["count"] = count; break;
  }
  return j.dump();
}

edit_op edit_op::from_json(const std::string& line) {
  auto j = nlohmann::json::parse(line);
  edit_op e;
  e.op = kind_from_name(j.at("op").get<std::string>());
  switch (e.op) {
    case kind::delete_vertex: e.u = j.at("v").get<int>(); break;
    case kind::delete_edge:
      e.u = j.at("u").get<int>(); e.v = j.at("v").get<int>(); e.count = j.at("count").get<int>();
      break;
    case kind::contract_edge:
      e.u = j.at("u").get<int>(); e.v = j.at("v").get<int>(); e.result = j.at("result").get<int>();
      break;
    case kind::add_vertex: e.result = j.at("v").get<int>(); break;
    case kind::add_edge:
      e.u = j.at("u").get<int>(); e.v = j.at("v").get<int>(); e.count = j.at("count").get<int>();
      break;
  }
  return e;
}

transcript::transcript(const multigraph& original) {
  for (vertex_id v : original.vertices()) {
    original_.insert(v);
    ancestry_[v] = {v};
  }
}

const std::set<vertex_id>& transcript::ancestry(vertex_id reduced) const {
  auto it = ancestry_.find(reduced);
  if (it == ancestry_.end()) throw std::invalid_argument("ancestry: id not in transcript");
  return it->second;
}

void transcript::delete_vertex(multigraph& g, vertex_id v) {
  auto it = ancestry_.find(v);
  if (it == ancestry_.end()) throw std::invalid_argument("transcript: unknown vertex");
  g.remove_vertex(v);
  deleted_.insert(it->second.begin(), it->second.end());
  ancestry_.erase(it);
  ops_.push_back(edit_op::del_vertex(v));
}

void transcript::delete_edge(multigraph& g, vertex_id u, vertex_id v, int count) {
  g.remove_edge(u, v, count);
  ops_.push_back(edit_op::del_edge(u, v, count));
}

vertex_id transcript::contract_edge(multigraph& g, vertex_id u, vertex_id v) {
  std::set<vertex_id> merged = ancestry(u);
  const auto& av = ancestry(v);
  merged.insert(av.begin(), av.end());
  vertex_id w = g.contract(u, v);
  ancestry_.erase(u);
  ancestry_.erase(v);
  ancestry_[w] = std::move(merged);
  ops_.push_back(edit_op::contract(u, v, w));
  return w;
}

vertex_id transcript::add_vertex(multigraph& g) {
  vertex_id w = g.add_vertex();
  ancestry_[w] = {};
  ops_.push_back(edit_op::new_vertex(w));
  return w;
}

void transcript::add_edge(multigraph& g, vertex_id u, vertex_id v, int count) {
  g.add_edge(u, v, count);
  ops_.push_back(edit_op::new_edge(u, v, count));
}

std::set<vertex_id> transcript::lift_vertices(const std::set<vertex_id>& reduced) const {
  std::set<vertex_id> out;
  for (vertex_id v : reduced) {
    const auto& anc = ancestry(v);
    out.insert(anc.begin(), anc.end());
  }
  return out;
}

bool transcript::ancestry_partition_ok() const {
  std::set<vertex_id> seen = deleted_;
  std::size_t total = deleted_.size();
  for (auto& [v, anc] : ancestry_) {
    total += anc.size();
    seen.insert(anc.begin(), anc.end());
  }
  // Disjointness: the sizes add up only when nothing repeats. Coverage:
  // together they must be exactly the original vertex set.
  return total == seen.size() && seen == original_;
}

std::string transcript::to_json_lines() const {
  std::ostringstream out;
  for (const auto& op : ops_) out << op.to_json() << "\n";
  return out.str();
}

multigraph replay(const multigraph& original, const std::vector<edit_op>& ops) {
  multigraph g = original;
  for (const auto& e : ops) {
    switch (e.op) {
      case edit_op::kind::delete_vertex:
        g.remove_vertex(e.u);
        break;
      case edit_op::kind::delete_edge:
        g.remove_edge(e.u, e.v, e.count);
        break;
      case edit_op::kind::contract_edge: {
        vertex_id w = g.contract(e.u, e.v);
        if (w != e.result) throw std::logic_error("replay: contraction id mismatch");
        break;
      }
      case edit_op::kind::add_vertex: {
        g.add_vertex(e.result);
        break;
      }
      case edit_op::kind::add_edge:
        g.add_edge(e.u, e.v, e.count);
        break;
    }
  }
  return g;
}

}  // namespace lossy
