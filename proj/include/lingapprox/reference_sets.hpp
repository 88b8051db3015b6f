#pragma once

#include "lingapprox/vocabulary.hpp"

namespace lingapprox {

// Two-hump sets on a 0..100 temperature grid: X1 peaks at 0.7 over medium
// and 1.0 over large, X2 at 1.0 over medium and 0.6 over large.
UniversePtr temperature_universe();
FuzzySet reference_x1(const Vocabulary& vocab);
FuzzySet reference_x2(const Vocabulary& vocab);

}  // namespace lingapprox
