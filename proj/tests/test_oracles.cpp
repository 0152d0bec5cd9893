#include <random>

#include "doctest.h"
#include "lossy/oracles.hpp"

using namespace lossy;

namespace {

multigraph cycle_graph(int n) {
  multigraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

multigraph relabel(const multigraph& g, std::mt19937_64& rng) {
  auto vs = g.vertices();
  std::vector<vertex_id> perm = vs;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<vertex_id, vertex_id> m;
  for (size_t i = 0; i < vs.size(); ++i) m[vs[i]] = perm[i];
  multigraph h;
  for (auto& [from, to] : m) h.add_vertex(to);
  (void)0;
  for (auto& [e, mult] : g.edges()) h.add_edge(m[e.lo], m[e.hi], mult);
  return h;
}

}  // namespace

TEST_CASE("exact_cvc basics") {
  multigraph c4 = cycle_graph(4);
  auto r = exact_cvc(c4, 2);
  CHECK(r.value == 3);  // minimum CVC of C4 has 3 vertices, capped at k+1

  multigraph k2 = cycle_graph(2);  // digon; still covered by one endpoint
  k2.remove_edge(0, 1, 1);
  auto r2 = exact_cvc(k2, 1);
  CHECK(r2.value == 1);

  multigraph edgeless;
  edgeless.add_vertex();
  auto r3 = exact_cvc(edgeless, 0);
  CHECK(r3.value == 0);
  CHECK(r3.witness == std::set<vertex_id>{});

  multigraph big = cycle_graph(21);
  CHECK_THROWS_AS(exact_cvc(big, 3), oracle_refusal);
}

TEST_CASE("exact_cp basics") {
  multigraph forest;
  for (int i = 0; i < 5; ++i) forest.add_vertex();
  forest.add_edge(0, 1);
  forest.add_edge(1, 2);
  CHECK(exact_cp(forest, 3).value == 0);

  multigraph two_tri;
  for (int i = 0; i < 6; ++i) two_tri.add_vertex();
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i) two_tri.add_edge(base + i, base + (i + 1) % 3);
  auto r = exact_cp(two_tri, 2);
  CHECK(r.value == 2);
  CHECK(is_cycle_packing(two_tri, r.witness));
  CHECK(r.witness.size() == 2);

  multigraph digon;
  digon.add_vertex();
  digon.add_vertex();
  digon.add_edge(0, 1, 2);
  auto rd = exact_cp(digon, 2);
  CHECK(rd.value == 1);
  CHECK(is_cycle_packing(digon, rd.witness));

  // Capping: a C9 plus three digons has four cycles but k=2 caps at 3.
  multigraph many = cycle_graph(9);
  for (int i = 0; i < 3; ++i) {
    vertex_id a = many.add_vertex(), b = many.add_vertex();
    many.add_edge(a, b, 2);
  }
  CHECK(exact_cp(many, 2).value == 3);
}

TEST_CASE("exact_df matches hand-counted strings") {
  auto val = [](const std::string& s) {
    std::vector<symbol> v(s.begin(), s.end());
    return exact_df(v).value;
  };
  CHECK(val("aabb") == 2);
  CHECK(val("abc") == 0);
  CHECK(val("abab") == 1);
  CHECK(val("") == 0);
  auto r = exact_df({'a', 'a', 'b', 'b'});
  CHECK(is_disjoint_factor_set({'a', 'a', 'b', 'b'}, r.witness));
  CHECK(static_cast<long long>(r.witness.size()) == r.value);
}

TEST_CASE("exact_pvc basics") {
  multigraph star;
  for (int i = 0; i < 6; ++i) star.add_vertex();
  for (int i = 1; i < 6; ++i) star.add_edge(0, i);
  auto r = exact_pvc(star, 1);
  CHECK(r.value == 5);
  CHECK(r.witness == std::set<vertex_id>{0});

  multigraph edgeless;
  edgeless.add_vertex();
  edgeless.add_vertex();
  CHECK(exact_pvc(edgeless, 1).value == 0);

  multigraph tri = cycle_graph(3);
  CHECK(exact_pvc(tri, 1).value == 2);
}

TEST_CASE("exact_ola basics") {
  multigraph p3 = cycle_graph(3);
  p3.remove_edge(0, 2, 1);  // path 0-1-2
  auto r = exact_ola(p3);
  CHECK(r.value == 2);
  CHECK(is_linear_layout(p3, r.witness));
  CHECK(ola_val(p3, r.witness) == 2);

  CHECK(exact_ola(cycle_graph(3)).value == 4);

  multigraph edgeless;
  for (int i = 0; i < 4; ++i) edgeless.add_vertex();
  CHECK(exact_ola(edgeless).value == 0);
}

TEST_CASE("oracle values are invariant under vertex relabelling") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + static_cast<int>(rng() % 5);
    multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) g.add_edge(i, j, 1 + static_cast<int>(rng() % 2));
    multigraph h = relabel(g, rng);
    CHECK(exact_cvc(g, 3).value == exact_cvc(h, 3).value);
    CHECK(exact_cp(g, 3).value == exact_cp(h, 3).value);
    CHECK(exact_pvc(g, 2).value == exact_pvc(h, 2).value);
    if (n <= 8) CHECK(exact_ola(g).value == exact_ola(h).value);
  }
}

TEST_CASE("witnesses always satisfy the value-function feasibility checks") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 6);
    multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) g.add_edge(i, j);
    auto cvc = exact_cvc(g, 3);
    if (cvc.witness) CHECK(is_connected_vertex_cover(g, *cvc.witness));
    auto cp = exact_cp(g, 3);
    CHECK(is_cycle_packing(g, cp.witness));
    CHECK(static_cast<long long>(cp.witness.size()) == cp.value);
    auto pvc = exact_pvc(g, 2);
    CHECK(edges_covered(g, pvc.witness) == pvc.value);
  }
}
