// Exhaustive analysis of the classical game: two parties each map their
// two-bit string to one channel bit, the verifier maps the received bit pair
// to equal/not-equal. 16 x 16 x 16 pure strategies in total.
#pragma once

#include <alc/rational.hpp>

#include <array>
#include <string>
#include <vector>

namespace alc {

// Encodings are 4-bit masks (bit s = channel bit sent for string s); the
// decoder is a 4-bit mask over received pairs (bit 2a+b set = answer equal).
struct PureClassicalStrategy {
  unsigned alice_enc = 0;  // 0..15
  unsigned bob_enc = 0;    // 0..15
  unsigned decoder = 0;    // 0..15

  unsigned code() const { return (alice_enc << 8) | (bob_enc << 4) | decoder; }
  static PureClassicalStrategy from_code(unsigned code);
  std::string describe() const;
};

// Average success over the 16 equiprobable string pairs, exactly.
Rational evaluate(const PureClassicalStrategy& s);

struct ClassicalOptimum {
  Rational value;
  std::vector<PureClassicalStrategy> maximizers;  // ascending by code
};

ClassicalOptimum exhaustive_optimum();

// Named reference strategies with their exact values, used as embedded
// expectations by --check: the one-versus-rest compare-at-zero optimum and
// three non-optimal rows (two with a constant decoder, one mixed-type).
struct ReferenceStrategy {
  const char* label;
  PureClassicalStrategy strategy;
  Rational value;
};
const std::array<ReferenceStrategy, 4>& classical_reference_strategies();

}  // namespace alc
