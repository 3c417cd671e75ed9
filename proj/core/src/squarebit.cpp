#include <alc/squarebit.hpp>

#include <stdexcept>

namespace alc {
namespace {

constexpr int kSign[4][2] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};  // cos/sin at k*pi/2

// Each entangled state/effect is a signed combination of four factorized
// terms; term = (sign, alice factor index, bob factor index). States carry an
// overall 1/2, effects an overall 1.
struct ComboTerm {
  int sign, i, j;
};
constexpr ComboTerm kEntangledStates[8][4] = {
    {{1, 1, 1}, {-1, 2, 2}, {1, 2, 3}, {1, 3, 2}},
    {{1, 0, 3}, {-1, 0, 0}, {1, 1, 1}, {1, 3, 0}},
    {{1, 0, 0}, {-1, 1, 1}, {1, 1, 2}, {1, 2, 1}},
    {{1, 0, 0}, {-1, 0, 3}, {1, 1, 3}, {1, 3, 2}},
    {{1, 0, 3}, {-1, 0, 0}, {1, 1, 0}, {1, 3, 1}},
    {{1, 0, 0}, {-1, 0, 1}, {1, 1, 1}, {1, 3, 2}},
    {{1, 1, 1}, {-1, 2, 1}, {1, 2, 2}, {1, 3, 0}},
    {{1, 0, 1}, {-1, 1, 1}, {1, 1, 2}, {1, 2, 0}},
};
constexpr ComboTerm kEntangledEffects[8][4] = {
    {{1, 0, 0}, {-1, 0, 3}, {1, 1, 3}, {1, 3, 2}},
    {{1, 1, 1}, {-1, 2, 2}, {1, 2, 3}, {1, 3, 2}},
    {{1, 0, 3}, {-1, 0, 0}, {1, 1, 1}, {1, 3, 0}},
    {{1, 0, 0}, {-1, 1, 1}, {1, 1, 2}, {1, 2, 1}},
    {{1, 0, 1}, {-1, 1, 1}, {1, 1, 2}, {1, 2, 0}},
    {{1, 1, 1}, {-1, 2, 1}, {1, 2, 2}, {1, 3, 0}},
    {{1, 0, 0}, {-1, 0, 1}, {1, 1, 1}, {1, 3, 2}},
    {{1, 0, 3}, {-1, 0, 0}, {1, 1, 0}, {1, 3, 1}},
};

SquareBitCatalog build_catalog() {
  SquareBitCatalog c;
  c.omega = {RVector{rat(1), rat(0), rat(1)}, RVector{rat(0), rat(1), rat(1)},
             RVector{rat(-1), rat(0), rat(1)}, RVector{rat(0), rat(-1), rat(1)}};
  c.e = {RVector{rat(1, 2), rat(1, 2), rat(1, 2)}, RVector{rat(-1, 2), rat(1, 2), rat(1, 2)},
         RVector{rat(-1, 2), rat(-1, 2), rat(1, 2)}, RVector{rat(1, 2), rat(-1, 2), rat(1, 2)}};
  c.u = RVector{rat(0), rat(0), rat(1)};

  for (int k = 0; k < 4; ++k) {
    for (int s = 0; s < 2; ++s) {
      const int sgn = s == 0 ? 1 : -1;
      RMatrix m(3, 3);
      m.at(0, 0) = rat(kSign[k][0]);
      m.at(0, 1) = rat(-sgn * kSign[k][1]);
      m.at(1, 0) = rat(kSign[k][1]);
      m.at(1, 1) = rat(sgn * kSign[k][0]);
      m.at(2, 2) = rat(1);
      c.d8[4 * s + k] = m;
    }
  }

  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      c.Omega[4 * i + j] = outer(c.omega[i], c.omega[j]);
      c.E[4 * i + j] = outer(c.e[i], c.e[j]);
    }
  for (int k = 0; k < 8; ++k) {
    RMatrix st(3, 3), ef(3, 3);
    for (const auto& t : kEntangledStates[k])
      st = st + outer(c.omega[t.i], c.omega[t.j]) * rat(t.sign);
    for (const auto& t : kEntangledEffects[k])
      ef = ef + outer(c.e[t.i], c.e[t.j]) * rat(t.sign);
    c.Omega[16 + k] = st * rat(1, 2);
    c.E[16 + k] = ef;
  }
  c.unit = outer(c.u, c.u);
  return c;
}

}  // namespace

const SquareBitCatalog& catalog() {
  static const SquareBitCatalog c = build_catalog();
  return c;
}

std::string ModelName::str() const {
  switch (kind) {
    case ModelKind::PR: return "PR";
    case ModelKind::HS: return "HS";
    case ModelKind::HybridA: return "HybridA";
    case ModelKind::HybridB: return "HybridB";
    case ModelKind::Frozen: return "Frozen(" + std::to_string(frozen_index) + ")";
  }
  return "?";
}

int frozen_effect_partner(int n) {
  if (n < 16 || n > 23) throw std::invalid_argument("frozen index out of range");
  if (n < 20) return 16 + (n - 16 + 1) % 4;
  return n;
}

GptModel build_model(const ModelName& name) {
  const auto& c = catalog();
  GptModel m;
  m.name = name.str();
  m.measurement_dimension = 4;

  auto add_states = [&](int lo, int hi) {
    for (int i = lo; i <= hi; ++i) m.states.push_back(c.state(i));
  };
  auto add_effects = [&](int lo, int hi) {
    for (int j = lo; j <= hi; ++j) m.effects.push_back(c.effect(j));
  };
  auto full_group = [&] {
    for (int sw = 0; sw < 2; ++sw)
      for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b)
          m.transformations.push_back(Transformation{c.d8[a], c.d8[b], sw == 1});
  };

  switch (name.kind) {
    case ModelKind::PR:
      add_states(0, 23);
      add_effects(0, 15);
      full_group();
      break;
    case ModelKind::HS:
      add_states(0, 15);
      add_effects(0, 23);
      full_group();
      break;
    case ModelKind::HybridA:
    case ModelKind::HybridB: {
      add_states(0, 15);
      add_effects(0, 15);
      const int x = name.kind == ModelKind::HybridA ? 20 : 21;
      const int y = name.kind == ModelKind::HybridA ? 22 : 23;
      m.states.push_back(c.state(x));
      m.states.push_back(c.state(y));
      m.effects.push_back(c.effect(x));
      m.effects.push_back(c.effect(y));
      for (int a : {0, 2})
        for (int b : {0, 2})
          m.transformations.push_back(Transformation{c.d8[a], c.d8[b], false});
      break;
    }
    case ModelKind::Frozen: {
      const int n = name.frozen_index;
      if (n < 16 || n > 23) throw std::invalid_argument("frozen index out of range");
      add_states(0, 15);
      add_effects(0, 15);
      m.states.push_back(c.state(n));
      m.effects.push_back(c.effect(frozen_effect_partner(n)));
      m.transformations.push_back(Transformation{c.d8[0], c.d8[0], false});
      if (n <= 19) m.transformations.push_back(Transformation{c.d8[0], c.d8[0], true});
      break;
    }
  }
  return m;
}

GptModel build_classical_bit_model() {
  const auto& c = catalog();
  GptModel m;
  m.name = "ClassicalBit";
  m.measurement_dimension = 4;
  for (int i : {0, 2})
    for (int j : {0, 2}) {
      m.states.push_back(c.state(4 * i + j));
      m.effects.push_back(c.effect(4 * i + j));
    }
  m.transformations.push_back(Transformation{c.d8[0], c.d8[0], false});
  return m;
}

Table3 compute_table3() {
  const auto& c = catalog();
  Table3 t;
  for (int j = 0; j < 24; ++j)
    for (int i = 0; i < 24; ++i) t[j][i] = trace_product(c.E[i], c.Omega[j]);
  return t;
}

Table4 compute_table4() {
  const auto& c = catalog();
  Table4 t;
  for (int j = 0; j < 16; ++j)
    for (int i = 0; i < 16; ++i) t[j][i] = trace_product(c.E[i], c.Omega[j]);
  return t;
}

Table5 compute_table5() {
  const auto& c = catalog();
  Table5 t;
  std::vector<GptState> states;
  for (int i = 0; i < 24; ++i) states.push_back(c.state(i));
  for (int b = 0; b < 8; ++b)
    for (int a = 0; a < 8; ++a) {
      const GptState img = apply(Transformation{c.d8[a], c.d8[b], false}, c.state(16));
      const auto idx = find_state_index(states, std::get<RMatrix>(img.value));
      if (!idx) throw std::logic_error("orbit image not in catalog");
      t[b][a] = *idx;
    }
  return t;
}

const std::array<std::array<std::int8_t, 24>, 24>& table3_reference_doubled() {
  // Entry = 2 * Tr[E_i^T Omega_j], recomputed independently with exact
  // fraction arithmetic and frozen here as regression data.
  static const std::array<std::array<std::int8_t, 24>, 24> k = {{
      {2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 2, 2, 0, 2, 2, 0},
      {2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 0, 0, 2, 2, 2, 0, 0},
      {0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 2, 0, 0, 2, 0, 0, 2},
      {0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 2, 0, 0, 0, 2, 2},
      {2, 0, 0, 2, 2, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 0, 0, 2, 2},
      {2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2, 0},
      {0, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 2, 0, 0},
      {0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 0, 0, 2},
      {0, 0, 0, 0, 2, 0, 0, 2, 2, 0, 0, 2, 0, 0, 0, 0, 2, 2, 0, 0, 2, 0, 0, 2},
      {0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 0, 2, 2},
      {0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 2, 2, 0},
      {0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 2, 0, 0, 2, 2, 2, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 2, 2, 0, 0, 2, 0, 2, 2, 0, 2, 2, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 0, 0, 0, 2, 2, 2, 0, 0, 2},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 0, 2, 0, 0, 2, 0, 0, 2, 2},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 0, 0, 2, 2, 2, 2, 0, 0, 0, 2, 2, 0},
      {1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 3, 1, -1, 1, 1, 1, 1, 1},
      {0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 1, 3, 1, -1, 1, 1, 1, 1},
      {0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1, -1, 1, 3, 1, 1, 1, 1, 1},
      {1, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, -1, 1, 3, 1, 1, 1, 1},
      {0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, -1, 1, 3},
      {1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, -1, 1, 3, 1},
      {1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 3, 1, -1},
      {0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1, 3, 1, -1, 1},
  }};
  return k;
}

const std::array<std::pair<int, int>, 16>& table3_out_of_range_cells() {
  static const std::array<std::pair<int, int>, 16> k = {{{16, 16},
                                                         {16, 18},
                                                         {17, 17},
                                                         {17, 19},
                                                         {18, 16},
                                                         {18, 18},
                                                         {19, 17},
                                                         {19, 19},
                                                         {20, 21},
                                                         {20, 23},
                                                         {21, 20},
                                                         {21, 22},
                                                         {22, 21},
                                                         {22, 23},
                                                         {23, 20},
                                                         {23, 22}}};
  return k;
}

const std::array<std::array<std::uint8_t, 8>, 8>& table5_reference() {
  static const std::array<std::array<std::uint8_t, 8>, 8> k = {{
      {16, 17, 18, 19, 23, 22, 21, 20},
      {17, 18, 19, 16, 20, 23, 22, 21},
      {18, 19, 16, 17, 21, 20, 23, 22},
      {19, 16, 17, 18, 22, 21, 20, 23},
      {20, 23, 22, 21, 17, 18, 19, 16},
      {21, 20, 23, 22, 18, 19, 16, 17},
      {22, 21, 20, 23, 19, 16, 17, 18},
      {23, 22, 21, 20, 16, 17, 18, 19},
  }};
  return k;
}

}  // namespace alc
