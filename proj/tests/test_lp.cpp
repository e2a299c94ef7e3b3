#include <doctest.h>

#include <random>

#include "rsyt/lp.hpp"

using namespace rsyt;
using namespace rsyt::lp;

namespace {

void check_result(const StrictSystem& sys, const StrictResult& r) {
  if (r.feasible) {
    REQUIRE(r.point.size() == sys.num_vars);
    CHECK(r.margin > 0);
    for (const auto& row : sys.strict) CHECK(dot(row, r.point) >= r.margin);
    for (const auto& row : sys.equalities) CHECK(dot(row, r.point) == 0);
  } else {
    CHECK(is_infeasibility_certificate(sys, r.strict_multipliers, r.equality_multipliers));
  }
}

}  // namespace

TEST_CASE("single strict inequality is feasible") {
  StrictSystem s{2, {{1, -1}}, {}};
  const auto r = solve_strict(s);
  CHECK(r.feasible);
  check_result(s, r);
}

TEST_CASE("opposite inequalities give a two-row certificate") {
  StrictSystem s{2, {{1, -1}, {-1, 1}}, {}};
  const auto r = solve_strict(s);
  REQUIRE_FALSE(r.feasible);
  CHECK(r.strict_multipliers[0] == r.strict_multipliers[1]);
  check_result(s, r);
}

TEST_CASE("equalities restrict the feasible set") {
  StrictSystem ok{3, {{1, 0, 0}}, {{1, -1, 0}}};
  check_result(ok, solve_strict(ok));
  CHECK(solve_strict(ok).feasible);
  StrictSystem bad{2, {{1, 0}}, {{1, 0}}};
  const auto r = solve_strict(bad);
  CHECK_FALSE(r.feasible);
  check_result(bad, r);
}

TEST_CASE("cyclic chain is infeasible") {
  StrictSystem s{3, {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}, {}};
  const auto r = solve_strict(s);
  CHECK_FALSE(r.feasible);
  check_result(s, r);
}

TEST_CASE("certificate checker rejects bad multipliers") {
  StrictSystem s{2, {{1, -1}, {-1, 1}}, {}};
  CHECK_FALSE(is_infeasibility_certificate(s, {Rational(0), Rational(0)}, {}));
  CHECK_FALSE(is_infeasibility_certificate(s, {Rational(1), Rational(2)}, {}));
  CHECK_FALSE(is_infeasibility_certificate(s, {Rational(-1), Rational(-1)}, {}));
  CHECK(is_infeasibility_certificate(s, {Rational(3), Rational(3)}, {}));
}

TEST_CASE("random small systems always return a verified answer") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> coef(-2, 2), rows(1, 6), vars(1, 4);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    StrictSystem s;
    s.num_vars = vars(rng);
    const int r = rows(rng);
    for (int i = 0; i < r; ++i) {
      Row row(s.num_vars);
      for (auto& c : row) c = coef(rng);
      s.strict.push_back(row);
    }
    if (trial % 3 == 0) {
      Row eq(s.num_vars);
      for (auto& c : eq) c = coef(rng);
      s.equalities.push_back(eq);
    }
    const auto res = solve_strict(s);
    check_result(s, res);
    (res.feasible ? feasible : infeasible)++;
  }
  CHECK(feasible > 0);
  CHECK(infeasible > 0);
}
