// Theory-neutral GPT layer: states, effects, reversible transformations,
// finite models, measurements, and the outcome rule. Bipartite objects are
// 3x3 matrices; elementary ones are length-3 vectors. All values immutable.
#pragma once

#include <alc/matrix.hpp>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace alc {

using GptValue = std::variant<RMatrix, RVector>;

struct GptState {
  GptValue value;
  std::optional<int> catalog_index;
};

struct GptEffect {
  GptValue value;
  std::optional<int> catalog_index;
};

// A local pair (alice_op, bob_op) acting as A * M * B^T, optionally followed
// by the party swap, which is matrix transposition in this representation.
struct Transformation {
  RMatrix alice_op;
  RMatrix bob_op;
  bool swap = false;
};

struct GptModel {
  std::string name;
  std::vector<GptState> states;
  std::vector<GptEffect> effects;
  std::vector<Transformation> transformations;
  int measurement_dimension = 0;
};

// A d-outcome measurement stored as conic combinations over a model's
// extremal effects: outcome k has matrix sum_i weights[k][i] * E_i.
struct Measurement {
  std::vector<RVector> outcome_weights;
};

struct Violation {
  enum class Kind { probability_range, closure };
  Kind kind;
  int effect_index = -1;          // probability_range
  int transformation_index = -1;  // closure
  int state_index = -1;
  std::optional<Rational> value;  // offending probability when applicable
  std::string describe() const;
};

// Tr[e^T w] for matrices, dot product for elementary vectors.
Rational probability(const GptEffect& effect, const GptState& state);

// alice_op * M * bob_op^T, transposed afterwards when swap is set.
GptState apply(const Transformation& t, const GptState& state);

// Exact-equality catalog lookup used to restore catalog indices after apply.
std::optional<int> find_state_index(std::span<const GptState> catalog, const RMatrix& value);

// Recomputes consistency (all probabilities in [0,1]) and closure (every
// transformation maps every model state to a model state). Empty means valid.
std::vector<Violation> validate_model(const GptModel& model);

// Materializes outcome k of a measurement as a matrix over the model effects.
RMatrix measurement_outcome_matrix(const GptModel& model, const Measurement& m, std::size_t k);

// Checks that outcomes sum to the given unit and that every outcome lands in
// [0,1] on every model state.
bool measurement_valid(const GptModel& model, const Measurement& m, const RMatrix& unit);

}  // namespace alc
