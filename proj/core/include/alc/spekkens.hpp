// The toy-bit theory on epistemic supports: one toy bit has four ontic states,
// a pair sixteen, and every allowed state of knowledge is a support mask that
// respects the knowledge balance. Local reversible dynamics are ontic
// permutations; measurements partition the ontic space and renormalize.
#pragma once

#include <alc/rational.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace alc {

// Support mask over ontic pairs, pair (a,b) with a,b in 0..3 at bit 4a+b.
struct ToyEpistemic {
  std::uint16_t support = 0;

  int size() const;
  bool contains(int a, int b) const;
  friend bool operator==(const ToyEpistemic&, const ToyEpistemic&) = default;

  // Product of two one-bit supports (each a 4-bit mask over ontic values).
  static ToyEpistemic product(std::uint8_t alice_mask, std::uint8_t bob_mask);
  // Perfectly correlated state {(a, perm[a])} of a permutation graph.
  static ToyEpistemic matching(const std::array<std::uint8_t, 4>& perm);
};

// One-bit knowledge balance: exactly two of the four ontic states.
bool valid_elementary(std::uint8_t mask);

// Pair knowledge balance: four ontic pairs, arranged either as a product of
// two valid one-bit supports or as a permutation graph.
bool valid_epistemic(const ToyEpistemic& s);

// Reversible local dynamics: a permutation of the four ontic values.
struct ToyPermutation {
  std::array<std::uint8_t, 4> map{};  // image of ontic value v is map[v]

  friend bool operator==(const ToyPermutation&, const ToyPermutation&) = default;
  ToyPermutation then(const ToyPermutation& second) const;  // second * this
};

// U_0..U_3: ontic value v maps to v XOR k. Closed, abelian, self-inverse.
const std::array<ToyPermutation, 4>& klein_group();

// psi_0..psi_3: the matchings of the Klein permutations. psi_0 is the
// perfectly correlated shared state the protocol starts from.
const std::array<ToyEpistemic, 4>& correlated_states();

ToyEpistemic apply_alice(const ToyPermutation& u, const ToyEpistemic& s);
ToyEpistemic apply_bob(const ToyPermutation& u, const ToyEpistemic& s);

struct ToyMeasurement {
  std::string label;
  std::vector<std::uint16_t> outcome_supports;
};

// The four-outcome measurement whose outcomes are the four matchings.
const ToyMeasurement& matching_measurement();
// Its two-outcome coarse-graining: psi_0's support against the rest.
const ToyMeasurement& coarse_measurement();

bool measurement_partitions(const ToyMeasurement& m);

// P(outcome k) = |support_k intersect state| / |state|, exactly.
std::vector<Rational> outcome_distribution(const ToyMeasurement& m, const ToyEpistemic& s);

struct ToyProtocolResult {
  std::array<std::array<int, 4>, 4> composed_index{};  // [x][y] -> k, state is psi_k
  bool composition_is_xor = false;
  std::array<std::array<Rational, 4>, 4> equal_probability{};  // coarse outcome 0
  Rational overall_success;
  bool perfect = false;
};

// Shared psi_0; Alice applies U_x, Bob U_y; the referee answers "equal" on
// the psi_0 outcome of the coarse measurement. Succeeds with probability 1.
ToyProtocolResult toy_protocol();

}  // namespace alc
