#include <alc/spekkens.hpp>

#include <bit>
#include <stdexcept>

namespace alc {

namespace {

bool is_permutation(const std::array<std::uint8_t, 4>& map) {
  std::uint8_t seen = 0;
  for (std::uint8_t v : map) {
    if (v > 3) return false;
    seen |= static_cast<std::uint8_t>(1u << v);
  }
  return seen == 0xf;
}

}  // namespace

int ToyEpistemic::size() const { return std::popcount(support); }

bool ToyEpistemic::contains(int a, int b) const {
  if (a < 0 || a > 3 || b < 0 || b > 3) throw std::out_of_range("ontic value out of range");
  return (support >> (4 * a + b)) & 1;
}

ToyEpistemic ToyEpistemic::product(std::uint8_t alice_mask, std::uint8_t bob_mask) {
  ToyEpistemic s;
  for (int a = 0; a < 4; ++a)
    if (alice_mask & (1u << a))
      for (int b = 0; b < 4; ++b)
        if (bob_mask & (1u << b)) s.support |= static_cast<std::uint16_t>(1u << (4 * a + b));
  return s;
}

ToyEpistemic ToyEpistemic::matching(const std::array<std::uint8_t, 4>& perm) {
  if (!is_permutation(perm)) throw std::invalid_argument("matching needs a permutation");
  ToyEpistemic s;
  for (int a = 0; a < 4; ++a) s.support |= static_cast<std::uint16_t>(1u << (4 * a + perm[a]));
  return s;
}

bool valid_elementary(std::uint8_t mask) { return mask < 16 && std::popcount(mask) == 2; }

bool valid_epistemic(const ToyEpistemic& s) {
  if (s.size() != 4) return false;
  std::uint8_t row_mask = 0, col_mask = 0;
  std::array<int, 4> row_count{}, col_count{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (s.contains(a, b)) {
        row_mask |= static_cast<std::uint8_t>(1u << a);
        col_mask |= static_cast<std::uint8_t>(1u << b);
        row_count[a]++;
        col_count[b]++;
      }
  if (valid_elementary(row_mask) && valid_elementary(col_mask) &&
      s == ToyEpistemic::product(row_mask, col_mask))
    return true;
  for (int a = 0; a < 4; ++a)
    if (row_count[a] != 1 || col_count[a] != 1) return false;
  return true;  // a permutation graph
}

ToyPermutation ToyPermutation::then(const ToyPermutation& second) const {
  ToyPermutation r;
  for (int v = 0; v < 4; ++v) r.map[v] = second.map[map[v]];
  return r;
}

const std::array<ToyPermutation, 4>& klein_group() {
  static const std::array<ToyPermutation, 4> group = [] {
    std::array<ToyPermutation, 4> g{};
    for (int k = 0; k < 4; ++k)
      for (int v = 0; v < 4; ++v) g[k].map[v] = static_cast<std::uint8_t>(v ^ k);
    return g;
  }();
  return group;
}

const std::array<ToyEpistemic, 4>& correlated_states() {
  static const std::array<ToyEpistemic, 4> states = [] {
    std::array<ToyEpistemic, 4> s{};
    for (int k = 0; k < 4; ++k) s[k] = ToyEpistemic::matching(klein_group()[k].map);
    return s;
  }();
  return states;
}

ToyEpistemic apply_alice(const ToyPermutation& u, const ToyEpistemic& s) {
  if (!is_permutation(u.map)) throw std::invalid_argument("dynamics must be a permutation");
  ToyEpistemic r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (s.contains(a, b)) r.support |= static_cast<std::uint16_t>(1u << (4 * u.map[a] + b));
  return r;
}

ToyEpistemic apply_bob(const ToyPermutation& u, const ToyEpistemic& s) {
  if (!is_permutation(u.map)) throw std::invalid_argument("dynamics must be a permutation");
  ToyEpistemic r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (s.contains(a, b)) r.support |= static_cast<std::uint16_t>(1u << (4 * a + u.map[b]));
  return r;
}

const ToyMeasurement& matching_measurement() {
  static const ToyMeasurement m = [] {
    ToyMeasurement r;
    r.label = "matchings";
    for (const ToyEpistemic& s : correlated_states()) r.outcome_supports.push_back(s.support);
    return r;
  }();
  return m;
}

const ToyMeasurement& coarse_measurement() {
  static const ToyMeasurement m = [] {
    ToyMeasurement r;
    r.label = "equal-vs-rest";
    const std::uint16_t eq = correlated_states()[0].support;
    r.outcome_supports = {eq, static_cast<std::uint16_t>(~eq & 0xffff)};
    return r;
  }();
  return m;
}

bool measurement_partitions(const ToyMeasurement& m) {
  std::uint32_t covered = 0;
  for (std::uint16_t s : m.outcome_supports) {
    if (covered & s) return false;
    covered |= s;
  }
  return covered == 0xffff;
}

std::vector<Rational> outcome_distribution(const ToyMeasurement& m, const ToyEpistemic& s) {
  if (s.support == 0) throw std::invalid_argument("empty epistemic state");
  std::vector<Rational> dist;
  dist.reserve(m.outcome_supports.size());
  for (std::uint16_t o : m.outcome_supports)
    dist.push_back(rat(std::popcount(static_cast<std::uint16_t>(o & s.support)), s.size()));
  return dist;
}

ToyProtocolResult toy_protocol() {
  ToyProtocolResult result;
  result.composition_is_xor = true;
  result.perfect = true;
  Rational total(0);

  const auto& group = klein_group();
  const auto& states = correlated_states();
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const ToyEpistemic composed = apply_bob(group[y], apply_alice(group[x], states[0]));
      int index = -1;
      for (int k = 0; k < 4; ++k)
        if (composed == states[k]) index = k;
      if (index < 0) throw std::logic_error("composed state is not a correlated state");
      result.composed_index[x][y] = index;
      if (index != (x ^ y)) result.composition_is_xor = false;

      const std::vector<Rational> dist = outcome_distribution(coarse_measurement(), composed);
      result.equal_probability[x][y] = dist[0];
      const Rational success = x == y ? dist[0] : dist[1];
      if (success != 1) result.perfect = false;
      total += success;
    }
  result.overall_success = total / 16;
  return result;
}

}  // namespace alc
