#pragma once

#include <gmpxx.h>

#include <vector>

namespace heckoid {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// In-place LLL reduction of linearly independent integer rows, delta = 99/100.
// Exact integral version (no floating point).
void lll_reduce(IntMatrix& basis);

}  // namespace heckoid
