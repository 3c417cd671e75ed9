#include <alc/classical.hpp>

#include <doctest.h>

#include <algorithm>

namespace {

using namespace alc;

TEST_CASE("reference strategies evaluate to their recorded values") {
  for (const auto& ref : classical_reference_strategies()) {
    CAPTURE(ref.label);
    CHECK(evaluate(ref.strategy) == ref.value);
  }
}

TEST_CASE("exhaustive optimum is 13/16 with sixteen maximizers") {
  const ClassicalOptimum optimum = exhaustive_optimum();
  CHECK(optimum.value == rat(13, 16));
  REQUIRE(optimum.maximizers.size() == 16);
  CHECK(std::is_sorted(optimum.maximizers.begin(), optimum.maximizers.end(),
                       [](const auto& a, const auto& b) { return a.code() < b.code(); }));
  // The one-versus-rest compare-at-zero strategy is among them.
  const unsigned expected = classical_reference_strategies()[0].strategy.code();
  CHECK(std::any_of(optimum.maximizers.begin(), optimum.maximizers.end(),
                    [&](const PureClassicalStrategy& s) { return s.code() == expected; }));
  CHECK(optimum.value < 1);
}

TEST_CASE("code packing round-trips") {
  for (unsigned code : {0u, 3809u, 4095u}) {
    const PureClassicalStrategy s = PureClassicalStrategy::from_code(code);
    CHECK(s.code() == code);
  }
  const PureClassicalStrategy s = PureClassicalStrategy::from_code(3809);
  CHECK(s.alice_enc == 14);
  CHECK(s.bob_enc == 14);
  CHECK(s.decoder == 1);
}

TEST_CASE("hand-computed values") {
  // Both parties send constant bits and the verifier always answers
  // not-equal: success on the twelve unequal pairs only.
  CHECK(evaluate({0, 0, 0}) == rat(3, 4));
  // Always answering equal succeeds on the four equal pairs only.
  CHECK(evaluate({0, 0, 15}) == rat(1, 4));
  // Both parties reveal the first bit and the verifier answers equal when
  // the bits agree: right on all equal pairs and on the eight cross-half
  // pairs, wrong on the four unequal same-half pairs.
  CHECK(evaluate({12, 12, 9}) == rat(3, 4));
}

TEST_CASE("describe is stable and readable") {
  const std::string text = classical_reference_strategies()[0].strategy.describe();
  CHECK(text.find("alice") != std::string::npos);
  CHECK(text.find("verifier") != std::string::npos);
}

}  // namespace
