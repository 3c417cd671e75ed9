#include <alc/linprog.hpp>

#include <doctest.h>

#include <random>

namespace {

using namespace alc;

LpProblem make(int m, int n, std::initializer_list<int> a, std::initializer_list<int> b) {
  LpProblem p;
  p.constraint_matrix = RMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  auto it = a.begin();
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) p.constraint_matrix.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = *it++;
  p.rhs = RVector(static_cast<std::size_t>(m));
  auto jt = b.begin();
  for (int r = 0; r < m; ++r) p.rhs[static_cast<std::size_t>(r)] = *jt++;
  return p;
}

TEST_CASE("feasible system yields a verified witness") {
  // x0 + x1 = 2, x0 - x1 = 0 -> x = (1, 1).
  const LpProblem p = make(2, 2, {1, 1, 1, -1}, {2, 0});
  const LpOutcome out = solve_feasibility(p);
  REQUIRE(out.status == LpStatus::feasible);
  REQUIRE(out.witness.has_value());
  CHECK(check_witness(p, *out.witness));
  CHECK((*out.witness)[0] == 1);
  CHECK((*out.witness)[1] == 1);
}

TEST_CASE("infeasible system yields a verified Farkas vector") {
  // x0 + x1 = -1 has no nonnegative solution.
  const LpProblem p = make(1, 2, {1, 1}, {-1});
  const LpOutcome out = solve_feasibility(p);
  REQUIRE(out.status == LpStatus::infeasible);
  REQUIRE(out.certificate.has_value());
  CHECK(check_farkas(p, *out.certificate));
  CHECK_FALSE(feasible_by_vertex_enumeration(p));
}

TEST_CASE("maximization returns the exact optimum with a verified dual") {
  // max x0 + 2 x1 subject to x0 + x1 = 3: optimum 6 at (0, 3).
  LpProblem p = make(1, 2, {1, 1}, {3});
  p.objective = RVector{Rational(1), Rational(2)};
  const LpOutcome out = solve_lp_max(p);
  REQUIRE(out.status == LpStatus::feasible);
  REQUIRE(out.value.has_value());
  CHECK(*out.value == 6);
  REQUIRE(out.witness.has_value());
  CHECK(p.objective->dot(*out.witness) == 6);
  REQUIRE(out.certificate.has_value());
  CHECK(check_optimal_dual(p, *out.certificate, *out.value));
}

TEST_CASE("unbounded maximization yields a verified improving ray") {
  // max x1 subject to x0 - x1 = 0: (t, t) grows forever.
  LpProblem p = make(1, 2, {1, -1}, {0});
  p.objective = RVector{Rational(0), Rational(1)};
  const LpOutcome out = solve_lp_max(p);
  REQUIRE(out.status == LpStatus::unbounded);
  REQUIRE(out.witness.has_value());
  REQUIRE(out.certificate.has_value());
  CHECK(check_witness(p, *out.witness));
  CHECK(check_unbounded_ray(p, *out.certificate));
}

TEST_CASE("fractional coefficients stay exact") {
  // (1/3) x0 = 1/7 -> x0 = 3/7.
  LpProblem p;
  p.constraint_matrix = RMatrix(1, 1);
  p.constraint_matrix.at(0, 0) = rat(1, 3);
  p.rhs = RVector{rat(1, 7)};
  const LpOutcome out = solve_feasibility(p);
  REQUIRE(out.status == LpStatus::feasible);
  CHECK((*out.witness)[0] == rat(3, 7));
}

TEST_CASE("solver agrees with the vertex-enumeration oracle on random instances") {
  std::mt19937_64 rng(20240815);
  std::uniform_int_distribution<int> rows(1, 3), cols(2, 5), entry(-3, 3), denom(1, 2);
  for (int t = 0; t < 120; ++t) {
    LpProblem p;
    const int m = rows(rng), n = cols(rng);
    p.constraint_matrix = RMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    p.rhs = RVector(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c)
        p.constraint_matrix.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
            rat(entry(rng), denom(rng));
      p.rhs[static_cast<std::size_t>(r)] = rat(entry(rng), denom(rng));
    }
    const LpOutcome out = solve_feasibility(p);
    REQUIRE((out.status == LpStatus::feasible) == feasible_by_vertex_enumeration(p));
    if (out.status == LpStatus::feasible)
      REQUIRE(check_witness(p, *out.witness));
    else
      REQUIRE(check_farkas(p, *out.certificate));
  }
}

}  // namespace
