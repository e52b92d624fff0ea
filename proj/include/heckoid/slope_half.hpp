#pragma once

#include <stdexcept>
#include <vector>

#include "heckoid/algebraic.hpp"
#include "heckoid/farey.hpp"
#include "heckoid/polynomial.hpp"
#include "heckoid/precision.hpp"

namespace heckoid {

// -2 - 2cos(π/n), n >= 2.
AlgebraicNumber gamma_of_n(int n, const PrecisionPolicy& pol = {});

// Thrown when α(p,q,n) vanishes.
class DegenerateAlpha : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimal polynomial of α² = A²B²((4 - A²)(4 - B²) - 8 - 4C) with
// A = 2cos(π/p), B = 2cos(π/q), C = 2cos(π/n).
IntPoly alpha_sq_min_poly(int p, int q, int n, const PrecisionPolicy& pol = {});

// α = 8 cos(π/p) cos(π/q) sqrt(4 sin²(π/p) sin²(π/q) - 2 - 2cos(π/n)),
// principal branch.
AlgebraicNumber alpha(int p, int q, int n, const PrecisionPolicy& pol = {});

// (p,p,n) or (q,q,n) is a hyperbolic triangle triple.
bool hyperfinite_vertex_check(int p, int q, int n);

// α² has exactly one negative Galois conjugate and no others off the positive
// axis, i.e. Q(α) has exactly one complex place.
bool galois_positivity_filter(int p, int q, int n, const PrecisionPolicy& pol = {});

// Arithmeticity of the triangle group (a,b,c) (kParabolic for a cusp) by
// Takeuchi's criterion: every non-identity real embedding of the invariant
// trace field makes cos²(π/a) + cos²(π/b) + cos²(π/c) + 2cos(π/a)cos(π/b)cos(π/c) - 1
// negative.
bool takeuchi_arithmetic(Order a, Order b, Order c);

struct SlopeHalfRow {
  int index = 0;
  GroupSymbol symbol;
  mpz_class field_disc;
  IntPoly min_poly;  // of α
  bool field_disc_resolved = true;
};

struct SlopeHalfOptions {
  int p_max = 30, q_max = 30, n_max = 30;
  bool takeuchi = false;  // also require an arithmetic hyperbolic vertex
  bool parallel = true;
  PrecisionPolicy policy{};
};

// Rows for 3 <= p <= q, p <= p_max, q <= q_max, 2 <= n <= n_max, sorted by
// (n, p, q) and numbered from 1.  Throws std::invalid_argument on bounds below
// (3, 3, 2); computational failures are rethrown naming the triple.
std::vector<SlopeHalfRow> enumerate_slope_half(const SlopeHalfOptions& opt = {});

// The row's polynomial is the minimal polynomial of α(p,q,n) and the slope
// 1/2 trace at γ = -2 - 2cos(π/n) is certified to be ±2cos(π/n).
bool relator_consistency(const SlopeHalfRow& row, const PrecisionPolicy& pol = {});

}  // namespace heckoid
