#pragma once

#include <complex>
#include <vector>

#include "heckoid/numeric.hpp"
#include "heckoid/polynomial.hpp"
#include "heckoid/precision.hpp"

namespace heckoid {

struct RootBox {
  CInterval box;  // exactly one root inside; im == [0,0] for real roots
  bool real = false;
};

// Certified isolation of every complex root of a squarefree p with deg >= 1,
// sorted by (real part, imaginary part).  Throws PrecisionError when the
// inclusion discs cannot be separated at this precision.
std::vector<RootBox> isolate_roots(const IntPoly& p, mpfr_prec_t prec);
// Same with precision escalation.
std::vector<RootBox> isolate_roots(const IntPoly& p, const PrecisionPolicy& pol = {});

// Plain floating approximations (no certificate), used for quick screening.
std::vector<std::complex<double>> approximate_roots(const IntPoly& p);

// Index of the unique root box meeting `e`, or -1 when none or several do.
int locate_root(const std::vector<RootBox>& roots, const CInterval& e);

}  // namespace heckoid
