// Property suites behind `paper report`: solver exactness against a
// brute-force oracle, group closure, unit decompositions, gauge invariance of
// the encoding map, convexity of the classical optimum, and the structural
// cross-checks tying the composite-model searches together.
#pragma once

#include "checks.hpp"

#include <alc/quantum.hpp>

#include <cstdint>

namespace alc {

CheckList property_suites(std::uint64_t seed, const SeesawResult& seesaw);

}  // namespace alc
