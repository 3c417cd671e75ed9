#include <alc/spekkens.hpp>

#include <doctest.h>

#include <vector>

namespace {

using namespace alc;

TEST_CASE("knowledge balance at the elementary and pair level") {
  int elementary = 0;
  for (int mask = 0; mask < 16; ++mask)
    if (valid_elementary(static_cast<std::uint8_t>(mask))) ++elementary;
  CHECK(elementary == 6);  // two of four ontic states

  // Valid pair supports: 36 products of elementary supports plus 24
  // permutation graphs, with no overlap between the kinds.
  int pairs = 0;
  for (int mask = 0; mask < 65536; ++mask)
    if (valid_epistemic(ToyEpistemic{static_cast<std::uint16_t>(mask)})) ++pairs;
  CHECK(pairs == 60);

  CHECK_FALSE(valid_epistemic(ToyEpistemic{0x000F}));  // one row, not a product
  CHECK(valid_epistemic(ToyEpistemic::product(0b0011, 0b1100)));
  CHECK(valid_epistemic(ToyEpistemic::matching({1, 0, 3, 2})));
}

TEST_CASE("klein group composes by xor and generates the matchings") {
  const auto& group = klein_group();
  const auto& psi = correlated_states();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) CHECK(group[a].then(group[b]) == group[a ^ b]);
    CHECK(apply_alice(group[a], psi[0]) == psi[a]);
    CHECK(valid_epistemic(psi[a]));
  }
}

TEST_CASE("measurements partition the ontic space") {
  CHECK(measurement_partitions(matching_measurement()));
  CHECK(measurement_partitions(coarse_measurement()));
  ToyMeasurement overlapping{"broken", {0x00FF, 0x0FF0}};
  CHECK_FALSE(measurement_partitions(overlapping));
}

TEST_CASE("outcome distributions renormalize the surviving support") {
  const std::vector<Rational> uniform(4, rat(1, 4));
  // Disjunction products, ontic labels zero-based: {0,1} x {0,2} spreads
  // over all four matchings, {0,1} x {0,1} splits between identity and swap.
  CHECK(outcome_distribution(matching_measurement(), ToyEpistemic::product(0b0011, 0b0101)) == uniform);
  const std::vector<Rational> split = {rat(1, 2), rat(1, 2), rat(0), rat(0)};
  CHECK(outcome_distribution(matching_measurement(), ToyEpistemic::product(0b0011, 0b0011)) == split);
  // A correlated state answers the matching measurement deterministically.
  const std::vector<Rational> sure = {rat(0), rat(0), rat(1), rat(0)};
  CHECK(outcome_distribution(matching_measurement(), correlated_states()[2]) == sure);
}

TEST_CASE("the toy protocol is perfect and composes by xor") {
  const ToyProtocolResult toy = toy_protocol();
  CHECK(toy.composition_is_xor);
  CHECK(toy.perfect);
  CHECK(toy.overall_success == 1);
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      CHECK(toy.composed_index[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == (x ^ y));
      CHECK(toy.equal_probability[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] ==
            (x == y ? 1 : 0));
    }
}

}  // namespace
