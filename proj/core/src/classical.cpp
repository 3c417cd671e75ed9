#include <alc/classical.hpp>

namespace alc {

PureClassicalStrategy PureClassicalStrategy::from_code(unsigned code) {
  return PureClassicalStrategy{(code >> 8) & 0xF, (code >> 4) & 0xF, code & 0xF};
}

std::string PureClassicalStrategy::describe() const {
  auto partition = [](unsigned enc) {
    std::string zero, one;
    static const char* names[4] = {"00", "01", "10", "11"};
    for (int s = 0; s < 4; ++s) ((enc >> s) & 1 ? one : zero) += std::string(names[s]) + " ";
    return "{" + zero + "-> 0 | " + one + "-> 1}";
  };
  std::string dec;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      dec += std::to_string(a) + std::to_string(b);
      dec += (decoder >> (2 * a + b)) & 1 ? "->eq " : "->neq ";
    }
  return "alice " + partition(alice_enc) + " bob " + partition(bob_enc) + " verifier {" + dec + "}";
}

Rational evaluate(const PureClassicalStrategy& s) {
  int correct = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const unsigned a = (s.alice_enc >> x) & 1;
      const unsigned b = (s.bob_enc >> y) & 1;
      const bool says_equal = (s.decoder >> (2 * a + b)) & 1;
      if (says_equal == (x == y)) ++correct;
    }
  return Rational(correct, 16);
}

ClassicalOptimum exhaustive_optimum() {
  ClassicalOptimum out;
  out.value = 0;
  for (unsigned code = 0; code < 4096; ++code) {
    const auto s = PureClassicalStrategy::from_code(code);
    const Rational v = evaluate(s);
    if (v > out.value) {
      out.value = v;
      out.maximizers.clear();
    }
    if (v == out.value) out.maximizers.push_back(s);
  }
  return out;
}

const std::array<ReferenceStrategy, 4>& classical_reference_strategies() {
  static const std::array<ReferenceStrategy, 4> k = {{
      {"optimal-compare-at-zero", {14, 14, 1}, Rational(13, 16)},
      {"one-vs-rest-constant-neq", {14, 13, 0}, Rational(3, 4)},
      {"two-vs-two-constant-neq", {6, 10, 0}, Rational(3, 4)},
      {"mixed-types-compare-at-zero", {14, 10, 1}, Rational(3, 4)},
  }};
  return k;
}

}  // namespace alc
