#include "doctest.h"
#include "lossy/feasibility.hpp"
#include "lossy/framework.hpp"
#include "lossy/rational.hpp"

using namespace lossy;

TEST_CASE("rational parsing and ceiling") {
  CHECK(rational::parse("2") == rational(2));
  CHECK(rational::parse("1.5") == rational(3, 2));
  CHECK(rational::parse("0.34") == rational(17, 50));
  CHECK_THROWS(rational::parse("1.2.3"));

  // d = ceil(alpha/(alpha-1)) must not suffer float boundary errors.
  auto d_of = [](const rational& alpha) {
    return (alpha / (alpha - rational(1))).ceil();
  };
  CHECK(d_of(rational::parse("2")) == 2);
  CHECK(d_of(rational::parse("1.5")) == 3);
  CHECK(d_of(rational::parse("3")) == 2);
}

TEST_CASE("capping clamps feasible values at k+1") {
  CHECK(capped(2, 4) == 2);
  CHECK(capped(5, 4) == 5);
  CHECK(capped(6, 4) == 5);
  CHECK(capped(40, 4) == 5);
}

TEST_CASE("strictness inequality, both orientations") {
  rational alpha(2);
  // Identity kernel: ratios equal, always strict.
  CHECK(strictness_holds(orientation::minimize, ext_value::finite(3), ext_value::finite(2),
                         ext_value::finite(3), ext_value::finite(2), rational(1)));
  CHECK(strictness_holds(orientation::maximize, ext_value::finite(2), ext_value::finite(3),
                         ext_value::finite(2), ext_value::finite(3), rational(1)));
  // Lifted ratio 3 vs reduced ratio 1 under alpha=2: violated.
  CHECK_FALSE(strictness_holds(orientation::minimize, ext_value::finite(3), ext_value::finite(1),
                               ext_value::finite(1), ext_value::finite(1), alpha));
  // Lifted ratio 2 under alpha=2: allowed even when the reduced one is 1.
  CHECK(strictness_holds(orientation::minimize, ext_value::finite(2), ext_value::finite(1),
                         ext_value::finite(1), ext_value::finite(1), alpha));
  // Maximization: lifted value 1 vs opt 3 is ratio 1/3 < 1/2, and the
  // reduced solution was optimal, so strictness fails.
  CHECK_FALSE(strictness_holds(orientation::maximize, ext_value::finite(1), ext_value::finite(3),
                               ext_value::finite(2), ext_value::finite(2), alpha));
  // Infeasible reduced solution makes the right side infinite.
  CHECK(strictness_holds(orientation::minimize, ext_value::finite(9), ext_value::finite(1),
                         ext_value::pos_inf(), ext_value::finite(1), alpha));
}

TEST_CASE("ratio orientation for maximization uses the reciprocal form") {
  // val/opt * alpha >= val'/opt', exactly at the boundary.
  CHECK(preprocessing_ineq_holds(orientation::maximize, ext_value::finite(1),
                                 ext_value::finite(2), ext_value::finite(1),
                                 ext_value::finite(1), rational(2)));
  CHECK_FALSE(preprocessing_ineq_holds(orientation::maximize, ext_value::finite(1),
                                       ext_value::finite(3), ext_value::finite(1),
                                       ext_value::finite(1), rational(2)));
  auto r = achieved_ratio(orientation::maximize, ext_value::finite(1), ext_value::finite(2),
                          ext_value::finite(1), ext_value::finite(1));
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(0.5));
  auto rm = achieved_ratio(orientation::minimize, ext_value::finite(3), ext_value::finite(2),
                           ext_value::finite(1), ext_value::finite(1));
  REQUIRE(rm.has_value());
  CHECK(*rm == doctest::Approx(1.5));
}

TEST_CASE("epsilon to alpha conversions") {
  CHECK(alpha_from_eps_min(rational::parse("0.5")) == rational(3, 2));
  CHECK(alpha_from_eps_max(rational::parse("0.5")) == rational(2));
  CHECK(alpha_from_eps_max(rational::parse("0.25")) == rational(4, 3));
  CHECK_THROWS(alpha_from_eps_max(rational(1)));
}

TEST_CASE("ratio report serializes in the fixed column order") {
  CHECK(ratio_report::csv_header() ==
        "instance,problem,accuracy,n,k,n_reduced,k_reduced,opt,opt_reduced,"
        "val_kernel_sol,val_lifted,ratio,strict_ok");
  ratio_report r;
  r.instance = "g1";
  r.problem = "cvc";
  r.accuracy = "2";
  r.n = 10;
  r.k = 3;
  r.n_reduced = 5;
  r.k_reduced = 2;
  r.opt = 3;
  r.opt_reduced = 2;
  r.val_kernel_sol = 2;
  r.val_lifted = 3;
  r.ratio = 1.0;
  r.strict_ok = "1";
  CHECK(r.csv_row() == "g1,cvc,2,10,3,5,2,3,2,2,3,1,1");
}

TEST_CASE("value functions: cvc") {
  multigraph c4;
  for (int i = 0; i < 4; ++i) c4.add_vertex();
  for (int i = 0; i < 4; ++i) c4.add_edge(i, (i + 1) % 4);
  CHECK(cvc_value(c4, 2, {0, 1, 2}) == ext_value::finite(3));
  CHECK(cvc_value(c4, 2, {0, 2}) == ext_value::pos_inf());     // not connected
  CHECK(cvc_value(c4, 2, {0, 1}) == ext_value::pos_inf());     // not a cover
  CHECK(cvc_value(c4, 1, {0, 1, 2}) == ext_value::finite(2));  // capped at k+1
}

TEST_CASE("value functions: cp, df, pvc, ola") {
  multigraph two_tri;
  for (int i = 0; i < 6; ++i) two_tri.add_vertex();
  for (int base : {0, 3})
    for (int i = 0; i < 3; ++i)
      two_tri.add_edge(base + i, base + (i + 1) % 3);
  CHECK(cp_value(two_tri, 2, {{0, 1, 2}, {3, 4, 5}}) == ext_value::finite(2));
  CHECK(cp_value(two_tri, 2, {{0, 1, 2}, {2, 3, 4}}) == ext_value::neg_inf());

  std::vector<symbol> aabb = {'a', 'a', 'b', 'b'};
  CHECK(df_value(aabb, {{0, 1}, {2, 3}}) == ext_value::finite(2));
  CHECK(df_value(aabb, {{0, 1}, {1, 2}}) == ext_value::neg_inf());  // overlap
  std::vector<symbol> abab = {'a', 'b', 'a', 'b'};
  CHECK(df_value(abab, {{0, 2}, {1, 3}}) == ext_value::neg_inf());

  multigraph star;
  for (int i = 0; i < 6; ++i) star.add_vertex();
  for (int i = 1; i < 6; ++i) star.add_edge(0, i);
  CHECK(pvc_value(star, 1, {0}) == ext_value::finite(5));
  CHECK(pvc_value(star, 1, {0, 1}) == ext_value::neg_inf());

  multigraph p3;
  for (int i = 0; i < 3; ++i) p3.add_vertex();
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  std::map<vertex_id, int> identity{{0, 1}, {1, 2}, {2, 3}};
  CHECK(ola_val(p3, identity) == 2);
  CHECK(ola_value(p3, {1}, 1, identity) == ext_value::finite(2));
  CHECK(ola_value(p3, {0}, 1, identity) == ext_value::neg_inf());  // not a cover
}
