#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellarr/linalg.hpp"

using namespace ellarr;

TEST_CASE("rational string round trip") {
  CHECK(rat_to_string(Rat(1, 3)) == "1/3");
  CHECK(rat_to_string(Rat(4, 2)) == "2");
  CHECK(rat_from_string("-7/5") == Rat(-7, 5));
  CHECK(rat_from_string("0") == Rat(0));
  CHECK(rat_from_string(rat_to_string(Rat(-22, 8))) == Rat(-11, 4));
}

TEST_CASE("rank, solve, nullspace") {
  QMat a = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(mat_rank(a) == 2);

  QMat sq = {{2, 1}, {1, 1}};
  auto x = solve_square(sq, {Rat(3), Rat(2)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK(!solve_square({{1, 2}, {2, 4}}, {Rat(1), Rat(1)}).has_value());

  auto ns = nullspace({{1, 1, 1}}, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + v[1] + v[2] == 0);
}

TEST_CASE("affine dimension") {
  CHECK(affine_dim({}) == -1);
  CHECK(affine_dim({{Rat(5), Rat(7)}}) == 0);
  CHECK(affine_dim({{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}) == 1);
  CHECK(affine_dim({{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == 2);
}

TEST_CASE("feasibility") {
  // x >= 1, -x >= -2 : feasible
  CHECK(feasible({{{Rat(1)}, Rat(1), false}, {{Rat(-1)}, Rat(-2), false}}, 1));
  // x >= 2, -x >= -1 : infeasible
  CHECK(!feasible({{{Rat(1)}, Rat(2), false}, {{Rat(-1)}, Rat(-1), false}}, 1));
  // x + y = 1, x >= 1, y >= 1 : infeasible
  CHECK(!feasible({{{Rat(1), Rat(1)}, Rat(1), true},
                   {{Rat(1), Rat(0)}, Rat(1), false},
                   {{Rat(0), Rat(1)}, Rat(1), false}},
                  2));
  // x + y = 2, x - y = 0, x >= 1 : feasible (x=y=1)
  CHECK(feasible({{{Rat(1), Rat(1)}, Rat(2), true},
                  {{Rat(1), Rat(-1)}, Rat(0), true},
                  {{Rat(1), Rat(0)}, Rat(1), false}},
                 2));
  // contradictory equalities
  CHECK(!feasible({{{Rat(1), Rat(1)}, Rat(0), true}, {{Rat(1), Rat(1)}, Rat(1), true}}, 2));
  // empty system
  CHECK(feasible({}, 3));
  // open cone: x > 0, y > 0, x + y < 1 encoded after clearing denominators is
  // still checkable as a plain system: x >= 1, y >= 1, -x - y >= -3
  CHECK(feasible({{{Rat(1), Rat(0)}, Rat(1), false},
                  {{Rat(0), Rat(1)}, Rat(1), false},
                  {{Rat(-1), Rat(-1)}, Rat(-3), false}},
                 2));
}
