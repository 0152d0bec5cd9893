#include <random>
#include <sstream>

#include "doctest.h"
#include "lossy/io.hpp"
#include "lossy/multigraph.hpp"

using namespace lossy;

namespace {

multigraph path(int n) {
  multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

multigraph complete(int n) {
  multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("delete_vertex removes the vertex and incident edges") {
  multigraph tri = complete(3);
  transcript t(tri);
  t.delete_vertex(tri, 2);
  CHECK(tri.vertex_count() == 2);
  CHECK(tri.edge_count() == 1);
  CHECK(tri.has_edge(0, 1));

  multigraph single;
  single.add_vertex();
  transcript t2(single);
  t2.delete_vertex(single, 0);
  CHECK(single.vertex_count() == 0);

  multigraph k4 = complete(4);
  transcript t3(k4);
  t3.delete_vertex(k4, 1);
  CHECK(k4.vertex_count() == 3);
  CHECK(k4.edge_count() == 3);  // K4 minus any vertex is K3
}

TEST_CASE("contract_edge rehomes edges, keeps digons, drops loops") {
  multigraph p = path(3);
  transcript t(p);
  vertex_id w = t.contract_edge(p, 0, 1);
  CHECK(p.vertex_count() == 2);
  CHECK(p.multiplicity(w, 2) == 1);

  multigraph tri = complete(3);
  transcript t2(tri);
  vertex_id w2 = t2.contract_edge(tri, 0, 1);
  CHECK(tri.vertex_count() == 2);
  CHECK(tri.multiplicity(w2, 2) == 2);  // triangle contracts to a digon

  multigraph digon;
  digon.add_vertex();
  digon.add_vertex();
  digon.add_edge(0, 1, 2);
  transcript t3(digon);
  vertex_id w3 = t3.contract_edge(digon, 0, 1);
  CHECK(digon.vertex_count() == 1);
  CHECK(digon.degree(w3) == 0);  // the loop is discarded

  CHECK_THROWS(path(3).contract(0, 2));  // non-edge
}

TEST_CASE("contraction reduces edge count by one plus discarded loops") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) g.add_edge(i, j, 1 + static_cast<int>(rng() % 2));
    auto edges = g.edges();
    if (edges.empty()) continue;
    auto it = edges.begin();
    std::advance(it, static_cast<long>(rng() % edges.size()));
    vertex_id u = it->first.lo, v = it->first.hi;
    long long loops = g.multiplicity(u, v);
    long long before = static_cast<long long>(g.edge_count());
    g.contract(u, v);
    CHECK(static_cast<long long>(g.edge_count()) == before - loops);
  }
}

TEST_CASE("replay soundness on random op sequences") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2 == 0) g.add_edge(i, j, 1 + static_cast<int>(rng() % 3));
    multigraph original = g;
    transcript t(g);
    for (int step = 0; step < 6 && g.vertex_count() > 1; ++step) {
      auto vs = g.vertices();
      switch (rng() % 3) {
        case 0: {
          t.delete_vertex(g, vs[rng() % vs.size()]);
          break;
        }
        case 1: {
          auto edges = g.edges();
          if (edges.empty()) break;
          auto it = edges.begin();
          std::advance(it, static_cast<long>(rng() % edges.size()));
          t.delete_edge(g, it->first.lo, it->first.hi, 1 + static_cast<int>(rng() % it->second));
          break;
        }
        default: {
          auto edges = g.edges();
          if (edges.empty()) break;
          auto it = edges.begin();
          std::advance(it, static_cast<long>(rng() % edges.size()));
          t.contract_edge(g, it->first.lo, it->first.hi);
          break;
        }
      }
    }
    CHECK(replay(original, t.ops()) == g);
    CHECK(t.ancestry_partition_ok());
  }
}

TEST_CASE("replay_inverse maps reduced ids through ancestry") {
  multigraph p = path(4);
  transcript t(p);
  CHECK(t.lift_vertices({2}) == std::set<vertex_id>{2});  // empty transcript: identity

  vertex_id w = t.contract_edge(p, 1, 2);
  CHECK(t.lift_vertices({w}) == std::set<vertex_id>{1, 2});

  // Chain of three contractions on a path collapses all four originals.
  vertex_id w2 = t.contract_edge(p, 0, w);
  vertex_id w3 = t.contract_edge(p, w2, 3);
  CHECK(t.lift_vertices({w3}) == std::set<vertex_id>{0, 1, 2, 3});
  CHECK_THROWS(t.lift_vertices({0}));  // 0 no longer names a reduced vertex
}

TEST_CASE("edit ops round-trip through json lines") {
  multigraph g = complete(3);
  transcript t(g);
  t.delete_edge(g, 0, 1, 1);
  vertex_id w = t.contract_edge(g, 1, 2);
  vertex_id x = t.add_vertex(g);
  t.add_edge(g, w, x, 2);
  std::istringstream lines(t.to_json_lines());
  std::string line;
  std::vector<edit_op> parsed;
  while (std::getline(lines, line)) parsed.push_back(edit_op::from_json(line));
  CHECK(parsed == t.ops());
}

TEST_CASE("dimacs round trip preserves multiplicities and weights") {
  multigraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex();
  g.add_edge(0, 1, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  std::ostringstream out;
  write_graph(out, g, {"test graph"});
  std::istringstream in(out.str());
  multigraph h = read_graph(in);
  CHECK(h.vertex_count() == 4);
  CHECK(h.multiplicity(0, 1) == 2);
  CHECK(h.edge_count() == 4);

  multigraph wg;
  wg.add_vertex();
  wg.add_vertex();
  wg.add_edge(0, 1);
  wg.set_weight(0, 1, 7);
  std::ostringstream wout;
  write_graph(wout, wg);
  std::istringstream win(wout.str());
  multigraph wh = read_graph(win);
  CHECK(wh.weight(0, 1) == 7);
}
