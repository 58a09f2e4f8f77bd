#pragma once

#include "tc4/common.hpp"

#include <vector>

namespace tc4 {

// Invariant factors (diagonal of the Smith normal form) of a small integer
// matrix, nonnegative, divisibility-chained. Used to certify that a kernel
// basis spans a saturated lattice (all factors 1).
std::vector<Int> smith_invariant_factors(std::vector<std::vector<Int>> m);

}  // namespace tc4
