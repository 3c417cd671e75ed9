// The game engine: enumerates encoding strategies for a model, decides
// perfect-decoder existence by exact LP feasibility, computes best achievable
// success values, and produces search reports whose negative verdicts are
// backed by collisions or Farkas certificates.
#pragma once

#include <alc/gpt.hpp>
#include <alc/linprog.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alc {

enum class FamilyKind { product, correlated };
enum class FamilySelection { product, correlated, both };

std::string to_string(FamilyKind k);
std::string to_string(FamilySelection s);

// A pure encoding strategy. Assignments map each of the n_strings strings to
// a local-operation position (correlated) or a local-preparation position
// (product); positions refer to the model's derived search space.
struct EncodingStrategy {
  FamilyKind kind = FamilyKind::product;
  int n_strings = 4;
  std::optional<int> shared_state;  // position in the model state list
  std::array<std::uint8_t, 4> alice_assign{};
  std::array<std::uint8_t, 4> bob_assign{};

  // Lexicographic enumeration key: product families before correlated, then
  // shared state, then Alice's and Bob's assignments.
  std::uint64_t code() const;
};

// The strategy's encoded states, indexed by string pair (x,y) row-major.
// State values are positions in the model's state list; eq/neq sets are
// deduplicated, counts retain pair multiplicity.
struct EncodedFamily {
  int n_strings = 4;
  std::vector<int> pair_state;
  std::vector<int> eq_set, neq_set;
  std::vector<int> eq_counts, neq_counts;  // indexed by model state position
};

// Nonnegative weights over the model's effects for the two decoder outcomes;
// the two weighted sums add up to the bipartite unit effect exactly.
struct DecoderWitness {
  RVector p_weights, q_weights;
};

struct PerfectRecord {
  EncodingStrategy strategy;
  DecoderWitness witness;
};

struct AuditRecord {
  std::uint64_t samples = 0;
  std::uint64_t collisions_confirmed = 0;
  std::uint64_t lp_infeasible_confirmed = 0;
  std::uint64_t certificates_valid = 0;
};

struct SearchReport {
  std::string model;
  int n_strings = 4;
  std::string families;
  std::uint64_t strategies_examined = 0;
  std::uint64_t collisions_pruned = 0;
  std::uint64_t lp_feasibility_calls = 0;
  std::uint64_t lp_value_calls = 0;
  std::optional<PerfectRecord> perfect;
  Rational best_value;
  std::optional<EncodingStrategy> best_strategy;
  std::optional<AuditRecord> audit;
  double wall_seconds = 0;  // measured; excluded from canonical JSON
};

struct SearchOptions {
  int jobs = 1;
  std::uint64_t seed = 1;
  int audit_samples = 0;  // 0 disables the audit pass
};

// The derived search space: local operations usable per party for correlated
// encodings, elementary preparations for product encodings, and the list of
// usable shared states. Derivation is purely from the model's contents.
struct SearchSpace {
  std::vector<RMatrix> alice_ops, bob_ops;
  int identity_op = -1;  // position of the identity in alice_ops, -1 if absent
  std::vector<RVector> alice_preps, bob_preps;
  std::vector<std::vector<int>> product_pair_pos;  // [prep_a][prep_b] -> state pos
  std::vector<int> shared_states;                  // all model state positions
};

SearchSpace derive_search_space(const GptModel& model);

EncodedFamily encode(const GptModel& model, const EncodingStrategy& strategy);

bool has_collision(const EncodedFamily& family);

// Exact LP: weights p,q >= 0 with sum_i p_i E_i + sum_j q_j E_j = unit, the
// eq outcome evaluating to 1 on every eq state and 0 on every neq state.
std::optional<DecoderWitness> perfect_decoder_exists(const GptModel& model,
                                                     const EncodedFamily& family);

// Exact LP: maximal average success over the decoder cone, pairs counted with
// multiplicity. Always at least 3/4 (the constant not-equal decoder).
Rational best_decoder_value(const GptModel& model, const EncodedFamily& family);

SearchReport search_perfect(const GptModel& model, int n_strings, FamilySelection families,
                            const SearchOptions& options = {});

// Exact replay of a perfect record: re-encodes the strategy and returns the
// overall success of the witnessed decoder (1 when genuinely perfect).
Rational replay_success(const GptModel& model, const PerfectRecord& record);

}  // namespace alc
