#include <alc/engine.hpp>
#include <alc/squarebit.hpp>

#include <doctest.h>

#include <variant>

namespace {

using namespace alc;

TEST_CASE("search space of the full-group model") {
  const GptModel pr = build_model({ModelKind::PR, -1});
  const SearchSpace space = derive_search_space(pr);
  CHECK(space.alice_ops.size() == 8);
  CHECK(space.bob_ops.size() == 8);
  CHECK(space.identity_op == 0);
  CHECK(space.alice_preps.size() == 4);
  CHECK(space.bob_preps.size() == 4);
  CHECK(space.shared_states.size() == 24);
  // Preparation pairs land on the factorized states in row-major order.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int pos = space.product_pair_pos[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      CHECK(*pr.states[static_cast<std::size_t>(pos)].catalog_index == 4 * i + j);
    }
}

TEST_CASE("the rotation-program family collides on the first entangled state") {
  const GptModel pr = build_model({ModelKind::PR, -1});
  EncodingStrategy strategy;
  strategy.kind = FamilyKind::correlated;
  strategy.n_strings = 4;
  strategy.shared_state = 16;
  strategy.alice_assign = {0, 4, 2, 6};
  strategy.bob_assign = {0, 6, 7, 1};
  const EncodedFamily family = encode(pr, strategy);

  // Pairs (00,00) and (01,10) encode to the same shared entangled state, so
  // an equal pair and an unequal pair become indistinguishable.
  const int first = family.pair_state[0 * 4 + 0];
  CHECK(*pr.states[static_cast<std::size_t>(first)].catalog_index == 16);
  CHECK(family.pair_state[1 * 4 + 2] == first);
  CHECK(has_collision(family));
  CHECK_FALSE(perfect_decoder_exists(pr, family).has_value());
}

TEST_CASE("two-string opposite-corner encoding admits a verified perfect decoder") {
  const GptModel hs = build_model({ModelKind::HS, -1});
  EncodingStrategy strategy;
  strategy.kind = FamilyKind::product;
  strategy.n_strings = 2;
  strategy.alice_assign = {0, 2, 0, 0};
  strategy.bob_assign = {0, 2, 0, 0};
  const EncodedFamily family = encode(hs, strategy);
  CHECK_FALSE(has_collision(family));

  const auto witness = perfect_decoder_exists(hs, family);
  REQUIRE(witness.has_value());

  // Independent re-check of the decoder conditions.
  const auto& c = catalog();
  RMatrix sum(3, 3);
  for (std::size_t i = 0; i < hs.effects.size(); ++i)
    sum = sum + std::get<RMatrix>(hs.effects[i].value) * (witness->p_weights[i] + witness->q_weights[i]);
  CHECK(sum == c.unit);
  const auto eq_outcome = [&](int state_pos) {
    Rational v(0);
    for (std::size_t i = 0; i < hs.effects.size(); ++i)
      v += witness->p_weights[i] * probability(hs.effects[i], hs.states[static_cast<std::size_t>(state_pos)]);
    return v;
  };
  for (const int s : family.eq_set) CHECK(eq_outcome(s) == 1);
  for (const int s : family.neq_set) CHECK(eq_outcome(s) == 0);
}

TEST_CASE("the diagonal four-string family has no perfect decoder and floor value") {
  const GptModel hs = build_model({ModelKind::HS, -1});
  EncodingStrategy diagonal;
  diagonal.kind = FamilyKind::product;
  diagonal.n_strings = 4;
  diagonal.alice_assign = {0, 1, 2, 3};
  diagonal.bob_assign = {0, 1, 2, 3};
  const EncodedFamily family = encode(hs, diagonal);
  CHECK_FALSE(has_collision(family));
  CHECK_FALSE(perfect_decoder_exists(hs, family).has_value());
  CHECK(best_decoder_value(hs, family) == rat(3, 4));
}

TEST_CASE("a fully collapsed family still reaches the constant-decoder floor") {
  const GptModel hs = build_model({ModelKind::HS, -1});
  EncodingStrategy collapsed;
  collapsed.kind = FamilyKind::product;
  collapsed.n_strings = 4;
  collapsed.alice_assign = {0, 0, 0, 0};
  collapsed.bob_assign = {0, 0, 0, 0};
  const EncodedFamily family = encode(hs, collapsed);
  CHECK(has_collision(family));
  CHECK(best_decoder_value(hs, family) == rat(3, 4));
}

TEST_CASE("classical-bit self-test: the one-bit game has a perfect two-string protocol") {
  const GptModel bit = build_classical_bit_model();
  SearchOptions options;
  options.jobs = 1;
  const SearchReport report = search_perfect(bit, 2, FamilySelection::product, options);
  REQUIRE(report.perfect.has_value());
  CHECK(report.best_value == 1);
  CHECK(replay_success(bit, *report.perfect) == 1);
}

TEST_CASE("two-string search on the full-effect model finds the first witness") {
  const GptModel hs = build_model({ModelKind::HS, -1});
  SearchOptions options;
  options.jobs = 1;
  const SearchReport report = search_perfect(hs, 2, FamilySelection::product, options);
  REQUIRE(report.perfect.has_value());
  CHECK(report.perfect->strategy.code() == 16777472);
  CHECK(report.strategies_examined == 256);
  CHECK(report.best_value == 1);
  CHECK(replay_success(hs, *report.perfect) == 1);
}

TEST_CASE("two-string search with the restricted transformations stays perfect") {
  const GptModel pr = build_model({ModelKind::PR, -1});
  SearchOptions options;
  options.jobs = 1;
  const SearchReport report = search_perfect(pr, 2, FamilySelection::both, options);
  REQUIRE(report.perfect.has_value());
  CHECK(replay_success(pr, *report.perfect) == 1);
}

TEST_CASE("worker count never changes a search report") {
  const GptModel hybrid = build_model({ModelKind::HybridA, -1});
  SearchOptions serial;
  serial.jobs = 1;
  serial.audit_samples = 4;
  SearchOptions parallel = serial;
  parallel.jobs = 3;
  const SearchReport a = search_perfect(hybrid, 4, FamilySelection::both, serial);
  const SearchReport b = search_perfect(hybrid, 4, FamilySelection::both, parallel);
  CHECK(a.strategies_examined == b.strategies_examined);
  CHECK(a.collisions_pruned == b.collisions_pruned);
  CHECK(a.lp_feasibility_calls == b.lp_feasibility_calls);
  CHECK(a.lp_value_calls == b.lp_value_calls);
  CHECK(a.best_value == b.best_value);
  CHECK(a.perfect.has_value() == b.perfect.has_value());
  REQUIRE(a.best_strategy.has_value());
  REQUIRE(b.best_strategy.has_value());
  CHECK(a.best_strategy->code() == b.best_strategy->code());
  REQUIRE(a.audit.has_value());
  REQUIRE(b.audit.has_value());
  CHECK(a.audit->samples == b.audit->samples);
  CHECK(a.audit->collisions_confirmed == b.audit->collisions_confirmed);
  CHECK(a.audit->lp_infeasible_confirmed == b.audit->lp_infeasible_confirmed);
  CHECK(a.audit->certificates_valid == b.audit->certificates_valid);
}

TEST_CASE("gauge shifts of correlated strategies encode identically") {
  const GptModel pr = build_model({ModelKind::PR, -1});
  const SearchSpace space = derive_search_space(pr);
  const RMatrix& identity = space.alice_ops[static_cast<std::size_t>(space.identity_op)];
  // Shift a fixed strategy by each group element in Alice's first slot.
  EncodingStrategy base;
  base.kind = FamilyKind::correlated;
  base.n_strings = 4;
  base.shared_state = 19;
  base.alice_assign = {0, 3, 5, 6};
  base.bob_assign = {2, 0, 7, 4};
  const auto reference = encode(pr, base).pair_state;
  for (std::uint8_t g = 1; g < 8; ++g) {
    EncodingStrategy shifted = base;
    for (int x = 0; x < 4; ++x) {
      const RMatrix moved = space.alice_ops[base.alice_assign[static_cast<std::size_t>(x)]] *
                            space.alice_ops[g];
      int pos = -1;
      for (std::size_t k = 0; k < space.alice_ops.size(); ++k)
        if (space.alice_ops[k] == moved) pos = static_cast<int>(k);
      REQUIRE(pos >= 0);
      shifted.alice_assign[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(pos);
    }
    // Undo the shift on the shared state: g^-1 applied on Alice's side.
    int inverse = -1;
    for (std::size_t k = 0; k < space.alice_ops.size(); ++k)
      if (space.alice_ops[g] * space.alice_ops[k] == identity) inverse = static_cast<int>(k);
    REQUIRE(inverse >= 0);
    const RMatrix moved_state =
        space.alice_ops[static_cast<std::size_t>(inverse)] *
        std::get<RMatrix>(pr.states[static_cast<std::size_t>(*base.shared_state)].value);
    const auto pos = find_state_index(pr.states, moved_state);
    REQUIRE(pos.has_value());
    shifted.shared_state = *pos;
    CHECK(encode(pr, shifted).pair_state == reference);
  }
}

TEST_CASE("strategy codes order product families first") {
  EncodingStrategy product;
  product.kind = FamilyKind::product;
  product.n_strings = 4;
  EncodingStrategy correlated;
  correlated.kind = FamilyKind::correlated;
  correlated.n_strings = 4;
  correlated.shared_state = 0;
  CHECK(product.code() < correlated.code());
  CHECK(to_string(FamilyKind::product) == "product");
  CHECK(to_string(FamilySelection::both) == "both");
}

}  // namespace
