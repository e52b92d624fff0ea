#pragma once

#include "heckoid/polynomial.hpp"

namespace heckoid {

// res(p, q) = lead(p)^deg(q) * prod q(a_i) over the roots a_i of p, so that
// res(z - a, z - b) = a - b.  Subresultant PRS, exact over Z.
mpz_class resultant(const IntPoly& p, const IntPoly& q);

// (-1)^(d(d-1)/2) res(p, p') / lead(p).
mpz_class poly_discriminant(const IntPoly& p);

}  // namespace heckoid
