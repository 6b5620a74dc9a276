#pragma once
#include <vector>

#include "reeslab/rational.hpp"

namespace reeslab {

using IntMatrix = std::vector<std::vector<Int>>;

// Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form.
std::vector<Int> smith_invariant_factors(IntMatrix m);

}  // namespace reeslab
