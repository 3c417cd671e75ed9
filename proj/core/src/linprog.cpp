#include <alc/linprog.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace alc {
namespace {

// Dense simplex tableau over columns [structural 0..n-1 | artificial n..n+m-1 | rhs].
// Row signs are flipped up front so rhs >= 0; `sign` remembers the flips so
// dual vectors can be mapped back to the caller's row order.
struct Tableau {
  std::size_t m, n;
  std::vector<std::vector<Rational>> row;  // m rows, n+m+1 entries each
  std::vector<Rational> zc;                // reduced costs z_j - c_j, plus objective value
  std::vector<std::size_t> basis;          // basis[i] = column basic in row i
  std::vector<int> sign;                   // +1/-1 per original row

  explicit Tableau(const RMatrix& a, const RVector& b)
      : m(a.rows()), n(a.cols()), row(m), zc(n + m + 1, Rational(0)), basis(m), sign(m, 1) {
    for (std::size_t i = 0; i < m; ++i) {
      row[i].assign(n + m + 1, Rational(0));
      const bool flip = b[i] < 0;
      sign[i] = flip ? -1 : 1;
      for (std::size_t j = 0; j < n; ++j) row[i][j] = flip ? -a.at(i, j) : a.at(i, j);
      row[i][n + i] = 1;
      row[i][n + m] = flip ? -b[i] : b[i];
      basis[i] = n + i;
    }
  }

  const Rational& rhs(std::size_t i) const { return row[i][n + m]; }

  void pivot(std::size_t pr, std::size_t pc) {
    const Rational inv = Rational(1) / row[pr][pc];
    for (auto& v : row[pr]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == pr || row[i][pc] == 0) continue;
      const Rational f = row[i][pc];
      for (std::size_t j = 0; j <= n + m; ++j) row[i][j] -= f * row[pr][j];
    }
    if (zc[pc] != 0) {
      const Rational f = zc[pc];
      for (std::size_t j = 0; j <= n + m; ++j) zc[j] -= f * row[pr][j];
    }
    basis[pr] = pc;
  }

  // Rebuild the reduced-cost row for cost vector c (length n+m): zc_j = c_B B^{-1} A_j - c_j.
  void set_costs(const std::vector<Rational>& c) {
    for (std::size_t j = 0; j <= n + m; ++j) {
      Rational z(0);
      for (std::size_t i = 0; i < m; ++i) {
        const Rational& cb = c[basis[i]];
        if (cb != 0) z += cb * row[i][j];
      }
      zc[j] = j < n + m ? z - c[j] : z;
    }
  }

  // Bland: entering = smallest eligible column with zc > 0; leaving = min
  // ratio, ties by smallest basic column. Returns false at optimality; throws
  // the entering column index via `unbounded_col` when no ratio row exists.
  bool pivot_step(std::size_t max_col, std::optional<std::size_t>* unbounded_col) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < max_col; ++j) {
      if (zc[j] > 0) { enter = j; break; }
    }
    if (enter == n + m) return false;
    std::size_t leave = m;
    for (std::size_t i = 0; i < m; ++i) {
      if (row[i][enter] <= 0) continue;
      if (leave == m) { leave = i; continue; }
      const Rational cur = rhs(i) * row[leave][enter];
      const Rational best = rhs(leave) * row[i][enter];
      if (cur < best || (cur == best && basis[i] < basis[leave])) leave = i;
    }
    if (leave == m) {
      if (unbounded_col) *unbounded_col = enter;
      return false;
    }
    pivot(leave, enter);
    return true;
  }
};

RVector extract_witness(const Tableau& t) {
  RVector x(t.n);
  for (std::size_t i = 0; i < t.m; ++i)
    if (t.basis[i] < t.n) x[t.basis[i]] = t.rhs(i);
  return x;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("lp internal check failed: ") + what);
}

}  // namespace

bool check_witness(const LpProblem& p, const RVector& x) {
  const auto& a = p.constraint_matrix;
  if (x.size() != a.cols()) return false;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] < 0) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * x[j];
    if (s != p.rhs[i]) return false;
  }
  return true;
}

bool check_farkas(const LpProblem& p, const RVector& y) {
  const auto& a = p.constraint_matrix;
  if (y.size() != a.rows()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) s += y[i] * a.at(i, j);
    if (s > 0) return false;
  }
  Rational yb(0);
  for (std::size_t i = 0; i < a.rows(); ++i) yb += y[i] * p.rhs[i];
  return yb > 0;
}

bool check_optimal_dual(const LpProblem& p, const RVector& y, const Rational& value) {
  const auto& a = p.constraint_matrix;
  if (!p.objective || y.size() != a.rows()) return false;
  const RVector& c = *p.objective;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < a.rows(); ++i) s += y[i] * a.at(i, j);
    if (s < c[j]) return false;  // dual feasibility A^T y >= c
  }
  Rational yb(0);
  for (std::size_t i = 0; i < a.rows(); ++i) yb += y[i] * p.rhs[i];
  return yb == value;  // strong duality
}

bool check_unbounded_ray(const LpProblem& p, const RVector& d) {
  const auto& a = p.constraint_matrix;
  if (!p.objective || d.size() != a.cols()) return false;
  for (std::size_t j = 0; j < d.size(); ++j)
    if (d[j] < 0) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * d[j];
    if (s != 0) return false;
  }
  return p.objective->dot(d) > 0;
}

namespace {

// Runs phase 1. Returns true when feasible (tableau left at a BFS with all
// artificials nonbasic or pinned in dead zero rows); fills `farkas` otherwise.
bool phase1(Tableau& t, RVector* farkas) {
  std::vector<Rational> c1(t.n + t.m, Rational(0));
  for (std::size_t j = t.n; j < t.n + t.m; ++j) c1[j] = 1;
  t.set_costs(c1);
  while (t.pivot_step(t.n + t.m, nullptr)) {
  }
  if (t.zc[t.n + t.m] > 0) {
    if (farkas) {
      RVector y(t.m);
      for (std::size_t i = 0; i < t.m; ++i) y[i] = Rational(t.sign[i]) * (t.zc[t.n + i] + 1);
      *farkas = y;
    }
    return false;
  }
  // Drive basic artificials out of zero rows; rows with no structural pivot
  // are redundant and stay inert (their structural entries are all zero).
  for (std::size_t i = 0; i < t.m; ++i) {
    if (t.basis[i] < t.n) continue;
    for (std::size_t j = 0; j < t.n; ++j) {
      if (t.row[i][j] != 0) {
        t.pivot(i, j);
        break;
      }
    }
  }
  return true;
}

}  // namespace

LpOutcome solve_feasibility(const LpProblem& problem) {
  if (problem.objective) throw std::invalid_argument("solve_feasibility: objective must be absent");
  if (problem.rhs.size() != problem.constraint_matrix.rows())
    throw std::invalid_argument("rhs length does not match constraint rows");
  Tableau t(problem.constraint_matrix, problem.rhs);
  LpOutcome out;
  RVector farkas;
  if (!phase1(t, &farkas)) {
    out.status = LpStatus::infeasible;
    out.certificate = farkas;
    require(check_farkas(problem, farkas), "farkas certificate");
    return out;
  }
  out.status = LpStatus::feasible;
  out.witness = extract_witness(t);
  require(check_witness(problem, *out.witness), "feasibility witness");
  return out;
}

LpOutcome solve_lp_max(const LpProblem& problem) {
  if (!problem.objective) throw std::invalid_argument("solve_lp_max: objective must be present");
  if (problem.objective->size() != problem.constraint_matrix.cols())
    throw std::invalid_argument("objective length does not match constraint columns");
  if (problem.rhs.size() != problem.constraint_matrix.rows())
    throw std::invalid_argument("rhs length does not match constraint rows");
  Tableau t(problem.constraint_matrix, problem.rhs);
  LpOutcome out;
  RVector farkas;
  if (!phase1(t, &farkas)) {
    out.status = LpStatus::infeasible;
    out.certificate = farkas;
    require(check_farkas(problem, farkas), "farkas certificate");
    return out;
  }
  // Phase 2: minimize -c over structural columns only.
  std::vector<Rational> c2(t.n + t.m, Rational(0));
  for (std::size_t j = 0; j < t.n; ++j) c2[j] = -(*problem.objective)[j];
  t.set_costs(c2);
  std::optional<std::size_t> unbounded_col;
  while (t.pivot_step(t.n, &unbounded_col)) {
  }
  if (unbounded_col) {
    out.status = LpStatus::unbounded;
    out.witness = extract_witness(t);
    RVector ray(t.n);
    ray[*unbounded_col] = 1;
    for (std::size_t i = 0; i < t.m; ++i)
      if (t.basis[i] < t.n) ray[t.basis[i]] = -t.row[i][*unbounded_col];
    out.certificate = ray;
    require(check_witness(problem, *out.witness), "unbounded witness");
    require(check_unbounded_ray(problem, ray), "unbounded ray");
    return out;
  }
  out.status = LpStatus::feasible;
  out.witness = extract_witness(t);
  out.value = -t.zc[t.n + t.m];
  RVector dual(t.m);
  for (std::size_t i = 0; i < t.m; ++i) dual[i] = Rational(t.sign[i]) * -t.zc[t.n + i];
  out.certificate = dual;
  require(check_witness(problem, *out.witness), "optimal witness");
  require(problem.objective->dot(*out.witness) == *out.value, "optimal value");
  require(check_optimal_dual(problem, dual, *out.value), "optimal dual");
  return out;
}

bool feasible_by_vertex_enumeration(const LpProblem& problem) {
  const auto& a = problem.constraint_matrix;
  const std::size_t m = a.rows(), n = a.cols();
  // Try every column subset of size <= m; a feasible standard-form system has
  // a basic feasible solution supported on independent columns.
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t{1} << j)) cols.push_back(j);
    if (cols.size() > m) continue;
    // Solve A_S x_S = b by Gaussian elimination; skip dependent subsets.
    const std::size_t k = cols.size();
    std::vector<std::vector<Rational>> g(m, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < k; ++j) g[i][j] = a.at(i, cols[j]);
      g[i][k] = problem.rhs[i];
    }
    std::size_t rank = 0;
    bool dependent = false;
    for (std::size_t j = 0; j < k && !dependent; ++j) {
      std::size_t p = rank;
      while (p < m && g[p][j] == 0) ++p;
      if (p == m) { dependent = true; break; }
      std::swap(g[p], g[rank]);
      const Rational inv = Rational(1) / g[rank][j];
      for (auto& v : g[rank]) v *= inv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == rank || g[i][j] == 0) continue;
        const Rational f = g[i][j];
        for (std::size_t q = 0; q <= k; ++q) g[i][q] -= f * g[rank][q];
      }
      ++rank;
    }
    if (dependent) continue;
    bool consistent = true;
    for (std::size_t i = rank; i < m; ++i)
      if (g[i][k] != 0) { consistent = false; break; }
    if (!consistent) continue;
    bool nonneg = true;
    for (std::size_t i = 0; i < rank; ++i)
      if (g[i][k] < 0) { nonneg = false; break; }
    if (nonneg) return true;
  }
  return false;
}

}  // namespace alc
