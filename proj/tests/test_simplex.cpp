#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polymat/reduce.hpp"
#include "polymat/simplex.hpp"
#include "support/gen.hpp"

using namespace polymat;

namespace {

LpRow row(std::initializer_list<long> coeffs, Sense s, long rhs_num,
          long rhs_den = 1) {
  LpRow r;
  r.coeffs = QVec(static_cast<Eigen::Index>(coeffs.size()));
  Eigen::Index i = 0;
  for (long c : coeffs) r.coeffs[i++] = c;
  r.sense = s;
  r.rhs = rat(rhs_num, rhs_den);
  return r;
}

}  // namespace

TEST_CASE("one-variable box: max t with 0 <= t <= 1") {
  LpInstance lp;
  lp.nvars = 1;
  lp.objective = QVec::Constant(1, Rat(1));
  lp.rows.push_back(row({1}, Sense::Le, 1));
  const LpResult res = exact_lp_max(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimum == 1);
  CHECK(res.x[0] == 1);
}

TEST_CASE("unbounded and infeasible detection") {
  LpInstance lp;
  lp.nvars = 2;
  lp.objective = QVec::Constant(2, Rat(1));
  lp.rows.push_back(row({1, -1}, Sense::Le, 3));
  CHECK(exact_lp_max(lp).status == LpStatus::Unbounded);

  lp.rows.push_back(row({1, 0}, Sense::Ge, 5));
  lp.rows.push_back(row({1, 0}, Sense::Le, 2));
  CHECK(exact_lp_max(lp).status == LpStatus::Infeasible);
}

TEST_CASE("equalities route through phase 1") {
  // max x + y  s.t.  x + y = 2, x - y = 0  ->  x = y = 1
  LpInstance lp;
  lp.nvars = 2;
  lp.objective = QVec::Constant(2, Rat(1));
  lp.rows.push_back(row({1, 1}, Sense::Eq, 2));
  lp.rows.push_back(row({1, -1}, Sense::Eq, 0));
  const LpResult res = exact_lp_max(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimum == 2);
  CHECK(res.x[0] == 1);
  CHECK(res.x[1] == 1);
}

TEST_CASE("redundant equalities leave phase 1 cleanly") {
  LpInstance lp;
  lp.nvars = 2;
  lp.objective = QVec::Zero(2);
  lp.objective[0] = 1;
  lp.rows.push_back(row({1, 1}, Sense::Eq, 2));
  lp.rows.push_back(row({2, 2}, Sense::Eq, 4));  // same hyperplane
  lp.rows.push_back(row({1, 0}, Sense::Le, 1));
  const LpResult res = exact_lp_max(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimum == 1);
}

TEST_CASE("exact rational data stays exact") {
  // max x  s.t.  (2/3) x <= 5/7  ->  x = 15/14
  LpInstance lp;
  lp.nvars = 1;
  lp.objective = QVec::Constant(1, Rat(1));
  lp.rows.push_back(row({1}, Sense::Le, 0));
  lp.rows[0].coeffs[0] = rat(2, 3);
  lp.rows[0].rhs = rat(5, 7);
  const LpResult res = exact_lp_max(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimum == rat(15, 14));
}

TEST_CASE("degenerate ties terminate under Bland's rule") {
  // Klee-Minty-ish degeneracy: several identical binding rows.
  LpInstance lp;
  lp.nvars = 3;
  lp.objective = QVec::Constant(3, Rat(1));
  lp.rows.push_back(row({1, 1, 1}, Sense::Le, 0));
  lp.rows.push_back(row({1, 1, 0}, Sense::Le, 0));
  lp.rows.push_back(row({1, 0, 0}, Sense::Le, 0));
  lp.rows.push_back(row({0, 1, 1}, Sense::Le, 0));
  const LpResult res = exact_lp_max(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimum == 0);
}

TEST_CASE("negative rhs rows are normalized") {
  // max x s.t. -x <= -2 (i.e. x >= 2), x <= 3
  LpInstance lp;
  lp.nvars = 1;
  lp.objective = QVec::Constant(1, Rat(1));
  lp.rows.push_back(row({-1}, Sense::Le, -2));
  lp.rows.push_back(row({1}, Sense::Le, 3));
  const LpResult res = exact_lp_max(lp);
  REQUIRE(res.status == LpStatus::Optimal);
  CHECK(res.optimum == 3);

  lp.objective[0] = -1;  // now minimize x
  const LpResult res2 = exact_lp_max(lp);
  REQUIRE(res2.status == LpStatus::Optimal);
  CHECK(res2.optimum == -2);
}

TEST_CASE("reduce LP instances solve to the hand-checked optima") {
  GroundSet g(2);
  // modular(1,1): one variable h(b) with optimum 1
  const LpResult m = exact_lp_max(
      build_reduce_lp(modular(g, {rat(1), rat(1)}), 0));
  REQUIRE(m.status == LpStatus::Optimal);
  CHECK(m.optimum == 1);

  // the uniform matroid min(|A|,1) is extremal, hence 0
  const LpResult u =
      exact_lp_max(build_reduce_lp(testgen::uniform_matroid(g, 1), 0));
  REQUIRE(u.status == LpStatus::Optimal);
  CHECK(u.optimum == 0);
}
