#include <alc/gpt.hpp>

#include <stdexcept>

namespace alc {

std::string Violation::describe() const {
  if (kind == Kind::probability_range) {
    return "effect " + std::to_string(effect_index) + " on state " + std::to_string(state_index) +
           " gives " + to_short_string(value.value_or(Rational(0))) + ", outside [0,1]";
  }
  return "transformation " + std::to_string(transformation_index) + " maps state " +
         std::to_string(state_index) + " outside the model";
}

Rational probability(const GptEffect& effect, const GptState& state) {
  if (std::holds_alternative<RMatrix>(effect.value) && std::holds_alternative<RMatrix>(state.value))
    return trace_product(std::get<RMatrix>(effect.value), std::get<RMatrix>(state.value));
  if (std::holds_alternative<RVector>(effect.value) && std::holds_alternative<RVector>(state.value))
    return std::get<RVector>(effect.value).dot(std::get<RVector>(state.value));
  throw std::invalid_argument("probability: effect and state representations differ");
}

GptState apply(const Transformation& t, const GptState& state) {
  if (!std::holds_alternative<RMatrix>(state.value))
    throw std::invalid_argument("apply: transformations act on bipartite states");
  RMatrix out = t.alice_op * std::get<RMatrix>(state.value) * t.bob_op.transpose();
  if (t.swap) out = out.transpose();
  return GptState{out, std::nullopt};
}

std::optional<int> find_state_index(std::span<const GptState> catalog, const RMatrix& value) {
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    if (std::holds_alternative<RMatrix>(catalog[i].value) &&
        std::get<RMatrix>(catalog[i].value) == value)
      return static_cast<int>(i);
  }
  return std::nullopt;
}

std::vector<Violation> validate_model(const GptModel& model) {
  std::vector<Violation> out;
  for (std::size_t e = 0; e < model.effects.size(); ++e) {
    for (std::size_t s = 0; s < model.states.size(); ++s) {
      const Rational v = probability(model.effects[e], model.states[s]);
      if (!in_unit_interval(v)) {
        out.push_back(Violation{Violation::Kind::probability_range, static_cast<int>(e), -1,
                                static_cast<int>(s), v});
      }
    }
  }
  for (std::size_t t = 0; t < model.transformations.size(); ++t) {
    for (std::size_t s = 0; s < model.states.size(); ++s) {
      if (!std::holds_alternative<RMatrix>(model.states[s].value)) continue;
      const GptState image = apply(model.transformations[t], model.states[s]);
      bool found = false;
      for (const auto& candidate : model.states) {
        if (std::get<RMatrix>(candidate.value) == std::get<RMatrix>(image.value)) {
          found = true;
          break;
        }
      }
      if (!found) {
        out.push_back(Violation{Violation::Kind::closure, -1, static_cast<int>(t),
                                static_cast<int>(s), std::nullopt});
      }
    }
  }
  return out;
}

RMatrix measurement_outcome_matrix(const GptModel& model, const Measurement& m, std::size_t k) {
  const RVector& w = m.outcome_weights.at(k);
  if (w.size() != model.effects.size())
    throw std::invalid_argument("measurement weights do not match model effects");
  RMatrix sum(3, 3);
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 0) continue;
    sum = sum + std::get<RMatrix>(model.effects[i].value) * w[i];
  }
  return sum;
}

bool measurement_valid(const GptModel& model, const Measurement& m, const RMatrix& unit) {
  RMatrix total(3, 3);
  for (std::size_t k = 0; k < m.outcome_weights.size(); ++k) {
    for (std::size_t i = 0; i < m.outcome_weights[k].size(); ++i)
      if (m.outcome_weights[k][i] < 0) return false;
    total = total + measurement_outcome_matrix(model, m, k);
  }
  if (!(total == unit)) return false;
  for (const auto& state : model.states) {
    Rational sum(0);
    for (std::size_t k = 0; k < m.outcome_weights.size(); ++k) {
      const Rational v =
          trace_product(measurement_outcome_matrix(model, m, k), std::get<RMatrix>(state.value));
      if (!in_unit_interval(v)) return false;
      sum += v;
    }
    if (sum != 1) return false;
  }
  return true;
}

}  // namespace alc
