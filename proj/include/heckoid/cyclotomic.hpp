#pragma once

#include "heckoid/polynomial.hpp"

namespace heckoid {

// N-th cyclotomic polynomial.
IntPoly cyclotomic(int n);
// Minimal polynomial of 2cos(2π/N) (N ≥ 1).
IntPoly real_cyclotomic(int n);
// D_j with D_j(x + 1/x) = x^j + x^-j; D_0 = 2.
IntPoly dickson(int j);
// Minimal polynomial of 2cos(kπ/m).
IntPoly two_cos_min_poly(long k, long m);

long gcd_long(long a, long b);
long lcm_long(long a, long b);
long euler_phi(long n);

}  // namespace heckoid
