// Qubit side of the game: the exact Bell-pair protocol (Pauli encoding on a
// shared singlet, singlet-projector readout) and a floating-point seesaw over
// unentangled product strategies. Numerics stay in the implementation; the
// interface is plain doubles.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace alc {

struct BellProtocolResult {
  std::array<std::array<double, 4>, 4> pair_success{};  // [alice][bob]
  double overall = 0;
  double min_pair = 0;
};

// Deterministic up to double rounding: every pair succeeds with probability 1.
BellProtocolResult bell_protocol();

struct SeesawRestart {
  double final_value = 0;
  int iterations_run = 0;
  bool monotone = false;  // value never dropped by more than the tolerance
};

struct SeesawResult {
  std::uint64_t seed = 0;
  int restarts = 0;
  int iterations = 0;
  double best_value = 0;
  int best_restart = -1;
  bool all_monotone = false;
  bool decoder_valid = false;  // best decoder is a POVM within tolerance
  std::vector<SeesawRestart> per_restart;
};

// Alternating optimization of product encodings (one qubit per party, no
// shared entanglement) against the optimal two-outcome decoder. Each restart
// draws fresh random pure states from mt19937_64(seed + restart), so reports
// are reproducible for a fixed seed and independent of scheduling.
SeesawResult product_strategy_search(std::uint64_t seed, int restarts, int iterations);

}  // namespace alc
