#include <alc/squarebit.hpp>

#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace {

using namespace alc;

TEST_CASE("catalog invariants") {
  const auto& c = catalog();
  CHECK(c.u == c.e[0] + c.e[2]);
  CHECK(c.u == c.e[1] + c.e[3]);
  for (int j = 0; j < 4; ++j) CHECK(c.u.dot(c.omega[j]) == 1);

  // d8[0] is the identity; the eight elements are distinct and closed.
  RMatrix identity(3, 3);
  for (int i = 0; i < 3; ++i) identity.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
  CHECK(c.d8[0] == identity);
  std::set<std::vector<Rational>> distinct;
  for (const auto& g : c.d8) distinct.insert(g.entries());
  CHECK(distinct.size() == 8);
  for (const auto& a : c.d8)
    for (const auto& b : c.d8)
      CHECK(std::any_of(c.d8.begin(), c.d8.end(), [&](const RMatrix& g) { return g == a * b; }));

  // Rotations permute the corners cyclically; each reflection fixes its axis.
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) {
      RVector rotated(3);
      const RMatrix& rot = c.d8[k];
      for (int r = 0; r < 3; ++r) {
        Rational s(0);
        for (int col = 0; col < 3; ++col)
          s += rot.at(static_cast<std::size_t>(r), static_cast<std::size_t>(col)) * c.omega[j][static_cast<std::size_t>(col)];
        rotated[static_cast<std::size_t>(r)] = s;
      }
      CHECK(rotated == c.omega[static_cast<std::size_t>((j + k) % 4)]);
    }
}

TEST_CASE("full grid matches the frozen reference with exactly sixteen flagged cells") {
  const Table3 t = compute_table3();
  const auto& reference = table3_reference_doubled();
  std::vector<std::pair<int, int>> flagged;
  for (int j = 0; j < 24; ++j)
    for (int i = 0; i < 24; ++i) {
      CHECK(t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] * 2 ==
            reference[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
      if (!in_unit_interval(t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]))
        flagged.emplace_back(j, i);
    }
  const auto& expected = table3_out_of_range_cells();
  REQUIRE(flagged.size() == expected.size());
  CHECK(std::equal(flagged.begin(), flagged.end(), expected.begin()));
}

TEST_CASE("each block of the grid takes its characteristic values") {
  const Table3 t = compute_table3();
  for (int j = 0; j < 24; ++j)
    for (int i = 0; i < 24; ++i) {
      const bool state_entangled = j >= 16, effect_entangled = i >= 16;
      const Rational& v = t[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (state_entangled && !effect_entangled) {
        CHECK((v == 0 || v == rat(1, 2)));  // halved by the entangled mixing
      } else if (!state_entangled && effect_entangled) {
        CHECK((v == 0 || v == 1));
      } else if (!state_entangled) {
        CHECK((v == 0 || v == 1));  // factorized on factorized is deterministic
      } else {
        CHECK((v == rat(-1, 2) || v == rat(1, 2) || v == rat(3, 2)));
      }
    }
}

TEST_CASE("factorized sub-grid stays within the unit interval") {
  const Table4 t = compute_table4();
  for (const auto& row : t)
    for (const Rational& v : row) CHECK(in_unit_interval(v));
}

TEST_CASE("orbit table matches the reference and the sign rule") {
  const Table5 t = compute_table5();
  const auto& reference = table5_reference();
  for (int b = 0; b < 8; ++b)
    for (int a = 0; a < 8; ++a) {
      const int v = t[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
      CHECK(v == reference[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]);
      CHECK((v >= 16 && v < 24));
      // Positive-signed images come exactly from same-type local pairs.
      CHECK((v < 20) == ((a < 4) == (b < 4)));
    }
  CHECK(t[0][0] == 16);
}

TEST_CASE("every composite model validates") {
  std::vector<ModelName> names = {{ModelKind::PR, -1},
                                  {ModelKind::HS, -1},
                                  {ModelKind::HybridA, -1},
                                  {ModelKind::HybridB, -1}};
  for (int n = 16; n < 24; ++n) names.push_back({ModelKind::Frozen, n});
  for (const auto& name : names) {
    const GptModel model = build_model(name);
    CAPTURE(model.name);
    CHECK(validate_model(model).empty());
  }
  CHECK(validate_model(build_classical_bit_model()).empty());
}

TEST_CASE("model shapes") {
  const GptModel pr = build_model({ModelKind::PR, -1});
  CHECK(pr.states.size() == 24);
  CHECK(pr.effects.size() == 16);
  CHECK(pr.transformations.size() == 128);

  const GptModel hs = build_model({ModelKind::HS, -1});
  CHECK(hs.states.size() == 16);
  CHECK(hs.effects.size() == 24);
  CHECK(hs.transformations.size() == 128);

  for (const ModelKind kind : {ModelKind::HybridA, ModelKind::HybridB}) {
    const GptModel hybrid = build_model({kind, -1});
    CHECK(hybrid.states.size() == 18);
    CHECK(hybrid.effects.size() == 18);
    CHECK(hybrid.transformations.size() == 4);
  }

  for (int n = 16; n < 24; ++n) {
    const GptModel frozen = build_model({ModelKind::Frozen, n});
    CAPTURE(n);
    CHECK(frozen.states.size() == 17);
    CHECK(frozen.effects.size() == 17);
    // The swap survives only when the added state is symmetric under it.
    CHECK(frozen.transformations.size() == (n <= 19 ? 2u : 1u));
  }
}

TEST_CASE("frozen pairings evaluate to one half") {
  const auto& c = catalog();
  CHECK(frozen_effect_partner(16) == 17);
  CHECK(frozen_effect_partner(17) == 18);
  CHECK(frozen_effect_partner(18) == 19);
  CHECK(frozen_effect_partner(19) == 16);
  for (int n = 20; n < 24; ++n) CHECK(frozen_effect_partner(n) == n);
  for (int n = 16; n < 24; ++n)
    CHECK(probability(c.effect(frozen_effect_partner(n)), c.state(n)) == rat(1, 2));
}

TEST_CASE("model names render") {
  CHECK(ModelName{ModelKind::PR, -1}.str() == "PR");
  CHECK(ModelName{ModelKind::Frozen, 21}.str() == "Frozen(21)");
}

}  // namespace
