// The square-bit theory, hard-coded: the four elementary pure states and
// extremal effects, the dihedral group of local reversible channels, the 24
// bipartite states and 24 bipartite effects (16 factorized + 8 entangled on
// each side), and the four families of consistent composite models. Also
// carries the frozen reference grids the CLI --check mode compares against.
#pragma once

#include <alc/gpt.hpp>

#include <array>
#include <cstdint>
#include <utility>

namespace alc {

struct SquareBitCatalog {
  std::array<RVector, 4> omega;  // elementary pure states, square corners
  std::array<RVector, 4> e;      // elementary extremal effects, normalized
  RVector u;                     // elementary unit effect
  std::array<RMatrix, 8> d8;     // 0..3 rotations U_k^+, 4..7 reflections U_k^-
  std::array<RMatrix, 24> Omega; // bipartite states: 16 factorized, 8 entangled
  std::array<RMatrix, 24> E;     // bipartite effects: 16 factorized, 8 entangled
  RMatrix unit;                  // u u^T, the bipartite unit effect

  GptState state(int i) const { return GptState{Omega[i], i}; }
  GptEffect effect(int j) const { return GptEffect{E[j], j}; }
};

// Built once, immutable and shareable afterwards.
const SquareBitCatalog& catalog();

enum class ModelKind { PR, HS, HybridA, HybridB, Frozen };

struct ModelName {
  ModelKind kind = ModelKind::PR;
  int frozen_index = -1;  // 16..23, Frozen only
  std::string str() const;
};

// The entangled effect paired with entangled state n in the Frozen models:
// the partner with the same defining pattern for 16..19, the same index for
// 20..23. In both cases the pair evaluates to 1/2 and the model validates.
int frozen_effect_partner(int n);

// Builds one of the composite models, with its reversible transformation set.
GptModel build_model(const ModelName& name);

// Two perfectly distinguishable preparations per side (omega_0/omega_2 with
// the e_0/e_2 readout): the classical-bit composite used as an engine
// self-test target.
GptModel build_classical_bit_model();

using Table3 = std::array<std::array<Rational, 24>, 24>;
using Table4 = std::array<std::array<Rational, 16>, 16>;
using Table5 = std::array<std::array<int, 8>, 8>;

// Full probability grid: entry [j][i] = Tr[E_i^T Omega_j].
Table3 compute_table3();
// Factorized sub-grid: entry [j][i] = Tr[E_i^T Omega_j] for i,j in [0,15].
Table4 compute_table4();
// Orbit of Omega16 under local pairs: entry [bob][alice] = image index.
Table5 compute_table5();

// Frozen reference data (independent exact recomputation, embedded so table
// reproduction acts as a regression suite). Grid entries are doubled so they
// fit integers; 16 cells fall outside [0,1] and are listed separately.
const std::array<std::array<std::int8_t, 24>, 24>& table3_reference_doubled();
const std::array<std::pair<int, int>, 16>& table3_out_of_range_cells();
const std::array<std::array<std::uint8_t, 8>, 8>& table5_reference();

}  // namespace alc
