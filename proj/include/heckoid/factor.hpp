#pragma once

#include <vector>

#include "heckoid/polynomial.hpp"
#include "heckoid/precision.hpp"

namespace heckoid {

struct Factor {
  IntPoly poly;  // primitive, irreducible, positive leading coefficient
  int multiplicity = 1;
};

struct Factorization {
  mpz_class unit_content;  // signed content
  std::vector<Factor> factors;
};

// Complete factorization over Z.  Irreducible factors are found by
// recombining certified complex roots (reals and conjugate pairs) in order of
// increasing size and confirmed by exact division.
Factorization factor(const IntPoly& p, const PrecisionPolicy& pol = {});

// Irreducible factors of a squarefree primitive polynomial.
std::vector<IntPoly> factor_squarefree(const IntPoly& p, const PrecisionPolicy& pol = {});

bool is_irreducible(const IntPoly& p, const PrecisionPolicy& pol = {});

}  // namespace heckoid
