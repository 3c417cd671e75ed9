// Exact rational scalar used for every probability and every LP pivot.
// Backed by boost::multiprecision so pivoting can grow numerators without
// overflow; values are always kept in lowest terms with positive denominator.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace alc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational rat(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  return Rational(num, den);
}

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline bool in_unit_interval(const Rational& r) { return r >= 0 && r <= 1; }

// Canonical wire form "p/q" with q > 0, used by every JSON report.
inline std::string to_fraction_string(const Rational& r) {
  return num(r).str() + "/" + den(r).str();
}

// Short human form: integers bare, everything else "p/q". Used by CSV/pretty output.
inline std::string to_short_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return to_fraction_string(r);
}

inline Rational parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    BigInt p{std::string(text.substr(0, slash))};
    BigInt q{std::string(text.substr(slash + 1))};
    if (q <= 0) throw std::invalid_argument("nonpositive denominator");
    return Rational(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed rational: " + std::string(text));
  }
}

struct RationalHash {
  std::size_t operator()(const Rational& r) const {
    std::size_t h = std::hash<std::string>{}(num(r).str());
    h ^= std::hash<std::string>{}(den(r).str()) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace alc
