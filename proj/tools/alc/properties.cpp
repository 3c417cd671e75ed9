#include "properties.hpp"

#include <alc/classical.hpp>
#include <alc/engine.hpp>
#include <alc/linprog.hpp>
#include <alc/spekkens.hpp>
#include <alc/squarebit.hpp>

#include <algorithm>
#include <cstddef>
#include <random>
#include <sstream>
#include <variant>

namespace alc {
namespace {

Rational random_rational(std::mt19937_64& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> numerator(lo, hi);
  std::uniform_int_distribution<int> denominator(1, max_den);
  return rat(numerator(rng), denominator(rng));
}

// Random small feasibility instances solved twice: by the simplex solver and
// by vertex enumeration. Every verdict's artifact is re-verified, and the
// maximization path is exercised with a random objective on top.
void lp_oracle_suite(CheckList& checks, std::uint64_t seed, int trials) {
  std::mt19937_64 rng(seed ^ 0x5ca1ab1e5eedULL);
  int failures = 0, feasible = 0, infeasible = 0, unbounded = 0;
  for (int t = 0; t < trials; ++t) {
    std::uniform_int_distribution<int> rows_dist(1, 3), cols_dist(2, 6);
    const int m = rows_dist(rng), n = cols_dist(rng);
    LpProblem problem;
    problem.constraint_matrix = RMatrix(m, n);
    problem.rhs = RVector(m);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < n; ++c) problem.constraint_matrix.at(r, c) = random_rational(rng, -3, 3, 2);
      problem.rhs[r] = random_rational(rng, -3, 3, 2);
    }

    const LpOutcome decided = solve_feasibility(problem);
    bool ok = (decided.status == LpStatus::feasible) == feasible_by_vertex_enumeration(problem);
    if (decided.status == LpStatus::feasible) {
      ++feasible;
      ok = ok && decided.witness && check_witness(problem, *decided.witness);
    } else {
      ++infeasible;
      ok = ok && decided.certificate && check_farkas(problem, *decided.certificate);
    }

    LpProblem with_objective = problem;
    with_objective.objective = RVector(n);
    for (int c = 0; c < n; ++c) (*with_objective.objective)[c] = random_rational(rng, -2, 2, 1);
    const LpOutcome maximized = solve_lp_max(with_objective);
    if (decided.status == LpStatus::infeasible) {
      ok = ok && maximized.status == LpStatus::infeasible;
    } else if (maximized.status == LpStatus::feasible) {
      ok = ok && maximized.witness && maximized.certificate && maximized.value &&
           check_witness(with_objective, *maximized.witness) &&
           with_objective.objective->dot(*maximized.witness) == *maximized.value &&
           check_optimal_dual(with_objective, *maximized.certificate, *maximized.value);
    } else if (maximized.status == LpStatus::unbounded) {
      ++unbounded;
      ok = ok && maximized.witness && maximized.certificate &&
           check_witness(with_objective, *maximized.witness) &&
           check_unbounded_ray(with_objective, *maximized.certificate);
    } else {
      ok = false;
    }
    if (!ok) ++failures;
  }
  std::ostringstream detail;
  detail << "trials=" << trials << " failures=" << failures << " feasible=" << feasible
         << " infeasible=" << infeasible << " unbounded=" << unbounded;
  checks.add("lp_matches_vertex_oracle", failures == 0, detail.str());
}

void dihedral_closure(CheckList& checks) {
  const auto& c = catalog();
  bool closed = true, inverses = true;
  for (const auto& a : c.d8) {
    for (const auto& b : c.d8) {
      const RMatrix product = a * b;
      closed = closed && std::any_of(c.d8.begin(), c.d8.end(),
                                     [&](const RMatrix& g) { return g == product; });
    }
    inverses = inverses && std::any_of(c.d8.begin(), c.d8.end(),
                                       [&](const RMatrix& g) { return a * g == c.d8[0]; });
  }
  checks.add("d8_closed_with_inverses", closed && inverses);
}

void klein_closure(CheckList& checks) {
  const auto& group = klein_group();
  const auto& psi = correlated_states();
  bool xor_law = true, matchings = true;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) xor_law = xor_law && group[a].then(group[b]) == group[a ^ b];
    matchings = matchings && apply_alice(group[a], psi[0]) == psi[a];
  }
  checks.add("klein_closed_xor", xor_law);
  checks.add("klein_matchings_from_psi0", matchings);
}

void unit_decompositions(CheckList& checks) {
  const auto& c = catalog();
  checks.add("unit_equals_e0_plus_e2", c.u == c.e[0] + c.e[2]);
  checks.add("unit_equals_e1_plus_e3", c.u == c.e[1] + c.e[3]);
}

// Random correlated strategies on the full-group model, reduced so Alice's
// first operation is the identity by shifting the shared state. The encoded
// families must agree pair by pair.
void gauge_invariance_suite(CheckList& checks, std::uint64_t seed, int samples) {
  const GptModel model = build_model({ModelKind::PR, -1});
  const SearchSpace space = derive_search_space(model);
  const RMatrix& identity = space.alice_ops[space.identity_op];
  std::mt19937_64 rng(seed ^ 0x6a75e5ULL);
  std::uniform_int_distribution<int> shared_dist(0, static_cast<int>(space.shared_states.size()) - 1);
  std::uniform_int_distribution<int> alice_dist(0, static_cast<int>(space.alice_ops.size()) - 1);
  std::uniform_int_distribution<int> bob_dist(0, static_cast<int>(space.bob_ops.size()) - 1);

  const auto op_index = [&](const RMatrix& m) {
    for (std::size_t i = 0; i < space.alice_ops.size(); ++i)
      if (space.alice_ops[i] == m) return static_cast<int>(i);
    return -1;
  };

  int failures = 0;
  for (int t = 0; t < samples; ++t) {
    EncodingStrategy strategy;
    strategy.kind = FamilyKind::correlated;
    strategy.n_strings = 4;
    strategy.shared_state = space.shared_states[static_cast<std::size_t>(shared_dist(rng))];
    for (int i = 0; i < 4; ++i) {
      strategy.alice_assign[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(alice_dist(rng));
      strategy.bob_assign[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(bob_dist(rng));
    }

    const RMatrix& first = space.alice_ops[strategy.alice_assign[0]];
    int inverse = -1;
    for (std::size_t j = 0; j < space.alice_ops.size(); ++j)
      if (first * space.alice_ops[j] == identity) inverse = static_cast<int>(j);

    const RMatrix shifted =
        first * std::get<RMatrix>(model.states[static_cast<std::size_t>(*strategy.shared_state)].value);
    const auto shifted_pos = find_state_index(model.states, shifted);

    EncodingStrategy reduced = strategy;
    bool ok = inverse >= 0 && shifted_pos.has_value();
    if (ok) {
      reduced.shared_state = *shifted_pos;
      for (int x = 0; x < 4; ++x) {
        const int moved =
            op_index(space.alice_ops[strategy.alice_assign[static_cast<std::size_t>(x)]] *
                     space.alice_ops[static_cast<std::size_t>(inverse)]);
        ok = ok && moved >= 0;
        if (moved >= 0) reduced.alice_assign[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(moved);
      }
    }
    ok = ok && reduced.alice_assign[0] == static_cast<std::uint8_t>(space.identity_op) &&
         encode(model, strategy).pair_state == encode(model, reduced).pair_state;
    if (!ok) ++failures;
  }
  std::ostringstream detail;
  detail << "samples=" << samples << " failures=" << failures;
  checks.add("gauge_invariance_of_encoding", failures == 0, detail.str());
}

// Random convex mixtures of pure classical strategies never beat the pure
// optimum.
void convexity_suite(CheckList& checks, std::uint64_t seed, int samples) {
  std::mt19937_64 rng(seed ^ 0xc09e1ULL);
  std::uniform_int_distribution<int> count_dist(1, 5);
  std::uniform_int_distribution<unsigned> code_dist(0, 4095);
  std::uniform_int_distribution<int> weight_dist(1, 9);
  const Rational bound = rat(13, 16);
  int failures = 0;
  for (int t = 0; t < samples; ++t) {
    const int k = count_dist(rng);
    Rational weighted(0), total(0);
    for (int i = 0; i < k; ++i) {
      const Rational w = rat(weight_dist(rng));
      weighted += w * evaluate(PureClassicalStrategy::from_code(code_dist(rng)));
      total += w;
    }
    if (weighted / total > bound) ++failures;
  }
  std::ostringstream detail;
  detail << "samples=" << samples << " failures=" << failures;
  checks.add("classical_mixtures_at_most_13_16", failures == 0, detail.str());
}

// The diagonal product encoding maps string x to the x-th corner on both
// sides; its equal set is the four diagonal factorized states. No decoder in
// the factorized-plus-entangled effect cone is perfect on it, and its best
// value is the constant-decoder floor.
void diagonal_family_suite(CheckList& checks) {
  const GptModel hs = build_model({ModelKind::HS, -1});
  EncodingStrategy diagonal;
  diagonal.kind = FamilyKind::product;
  diagonal.n_strings = 4;
  diagonal.alice_assign = {0, 1, 2, 3};
  diagonal.bob_assign = {0, 1, 2, 3};
  const EncodedFamily family = encode(hs, diagonal);
  checks.add("diagonal_family_collision_free", !has_collision(family));
  checks.add("diagonal_family_no_perfect_decoder", !perfect_decoder_exists(hs, family).has_value());
  checks.add("diagonal_family_best_is_floor", best_decoder_value(hs, family) == rat(3, 4));
}

// A perfect witness found in the restricted-transformation model uses only
// effects that the full-effect model also carries, so it must satisfy the
// same decoder conditions verbatim there. Cross-checks the two searches'
// shared effect arithmetic on the two-string protocol, where a witness exists.
void hybrid_embedding_suite(CheckList& checks) {
  const GptModel hybrid = build_model({ModelKind::HybridA, -1});
  SearchOptions options;
  options.jobs = 1;
  const SearchReport report = search_perfect(hybrid, 2, FamilySelection::product, options);
  if (!report.perfect) {
    checks.add("hybrid_witness_valid_verbatim_in_hs", false, "no two-string witness found");
    return;
  }
  const PerfectRecord& record = *report.perfect;
  const EncodedFamily family = encode(hybrid, record.strategy);

  const GptModel hs = build_model({ModelKind::HS, -1});
  bool ok = true;
  // Weights transported by catalog index; the first sixteen states coincide.
  RVector p(hs.effects.size()), q(hs.effects.size());
  for (std::size_t i = 0; i < hybrid.effects.size(); ++i) {
    const int cat = *hybrid.effects[i].catalog_index;
    ok = ok && cat >= 0 && cat < static_cast<int>(hs.effects.size());
    p[static_cast<std::size_t>(cat)] += record.witness.p_weights[i];
    q[static_cast<std::size_t>(cat)] += record.witness.q_weights[i];
  }

  const auto& c = catalog();
  RMatrix sum(3, 3);
  for (std::size_t i = 0; i < hs.effects.size(); ++i)
    sum = sum + std::get<RMatrix>(hs.effects[i].value) * (p[i] + q[i]);
  ok = ok && sum == c.unit;

  const auto outcome_on = [&](const RVector& weights, int state_pos) {
    Rational value(0);
    for (std::size_t i = 0; i < hs.effects.size(); ++i)
      if (weights[i] != 0)
        value += weights[i] * probability(hs.effects[i], hybrid.states[static_cast<std::size_t>(state_pos)]);
    return value;
  };
  for (const int s : family.eq_set) {
    ok = ok && *hybrid.states[static_cast<std::size_t>(s)].catalog_index < 16;
    ok = ok && outcome_on(p, s) == 1;
  }
  for (const int s : family.neq_set) ok = ok && outcome_on(p, s) == 0;
  checks.add("hybrid_witness_valid_verbatim_in_hs", ok);
}

void seesaw_gates(CheckList& checks, const SeesawResult& seesaw) {
  std::ostringstream detail;
  detail << "restarts=" << seesaw.restarts << " best=" << seesaw.best_value;
  checks.add("seesaw_at_least_50_restarts", seesaw.restarts >= 50);
  checks.add("seesaw_all_restarts_monotone", seesaw.all_monotone);
  checks.add("seesaw_best_below_one", seesaw.best_value < 1.0 - 1e-3, detail.str());
  checks.add("seesaw_best_decoder_is_povm", seesaw.decoder_valid);
}

}  // namespace

CheckList property_suites(std::uint64_t seed, const SeesawResult& seesaw) {
  CheckList checks;
  lp_oracle_suite(checks, seed, 1000);
  dihedral_closure(checks);
  klein_closure(checks);
  unit_decompositions(checks);
  gauge_invariance_suite(checks, seed, 200);
  convexity_suite(checks, seed, 200);
  diagonal_family_suite(checks);
  hybrid_embedding_suite(checks);
  seesaw_gates(checks, seesaw);
  return checks;
}

}  // namespace alc
