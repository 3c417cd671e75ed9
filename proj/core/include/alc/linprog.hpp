// Exact linear programming over rationals: feasibility and maximization of
//   { x >= 0 : A x = b }
// by two-phase primal simplex with Bland's rule. Every verdict carries an
// exactly checkable artifact: a primal witness, a Farkas vector, an optimal
// dual, or an improving ray. The check_* helpers re-verify those artifacts
// from scratch and are used both internally and by audit tooling.
#pragma once

#include <alc/matrix.hpp>

#include <optional>

namespace alc {

enum class LpStatus { feasible, infeasible, unbounded };

struct LpProblem {
  RMatrix constraint_matrix;        // m x n
  RVector rhs;                      // m
  std::optional<RVector> objective; // n, maximized when present
};

struct LpOutcome {
  LpStatus status = LpStatus::infeasible;
  // feasible: exact nonnegative solution of A x = b.
  // unbounded: a feasible point from which the ray improves forever.
  std::optional<RVector> witness;
  // infeasible: Farkas vector y with yᵀA <= 0 and yᵀb > 0.
  // feasible with objective: optimal dual y with Aᵀy >= c and yᵀb = value.
  // unbounded: ray d >= 0 with A d = 0 and cᵀd > 0.
  std::optional<RVector> certificate;
  std::optional<Rational> value;    // cᵀ·witness at the optimum
};

// Phase-1 only; the problem's objective must be absent.
LpOutcome solve_feasibility(const LpProblem& problem);

// Two-phase; the problem's objective must be present.
LpOutcome solve_lp_max(const LpProblem& problem);

// Exact re-verification of outcome artifacts (independent of the solver path).
bool check_witness(const LpProblem& problem, const RVector& x);
bool check_farkas(const LpProblem& problem, const RVector& y);
bool check_optimal_dual(const LpProblem& problem, const RVector& y, const Rational& value);
bool check_unbounded_ray(const LpProblem& problem, const RVector& ray);

// Brute-force feasibility oracle: enumerates basic solutions over column
// subsets with independent columns. Exponential; for property tests only.
bool feasible_by_vertex_enumeration(const LpProblem& problem);

}  // namespace alc
