// Minimal-denominator rational in an open interval, by walking the
// Stern-Brocot tree with continued-fraction jumps (logarithmic in the
// size of the answer, unlike the naive mediant walk).

#pragma once

#include "fairalloc/rational.hpp"

namespace fairalloc {

// The unique rational with smallest denominator in the open interval
// (lo, hi); among equal denominators the one with smallest numerator
// (which only matters for denominator 1). Requires lo < hi.
Rat simplest_in_open_interval(const Rat& lo, const Rat& hi);

}  // namespace fairalloc
