#pragma once

#include <optional>
#include <vector>

#include "heckoid/algebraic.hpp"
#include "heckoid/polynomial.hpp"
#include "heckoid/precision.hpp"

namespace heckoid {

// Q(γ) represented as Q[y]/(m) with m the minimal polynomial of γ.  Elements
// are polynomials of degree < deg m in the power basis of γ.
class NumberField {
 public:
  explicit NumberField(AlgebraicNumber gamma, PrecisionPolicy pol = {});

  const AlgebraicNumber& generator() const { return gamma_; }
  const IntPoly& modulus() const { return gamma_.min_poly(); }
  int degree() const { return gamma_.degree(); }
  const PrecisionPolicy& policy() const { return pol_; }

  RatPoly reduce(const RatPoly& a) const;
  RatPoly mul(const RatPoly& a, const RatPoly& b) const;
  // Throws std::domain_error for zero.
  RatPoly inv(const RatPoly& a) const;
  RatPoly pow(const RatPoly& a, unsigned e) const;
  // Characteristic polynomial of multiplication by a (monic, degree n).
  RatPoly charpoly(const RatPoly& a) const;
  // Minimal polynomial, primitive over Z.
  IntPoly minpoly(const RatPoly& a) const;
  // a(γ) under the identity embedding, and at an arbitrary root enclosure.
  CInterval eval(const RatPoly& a, mpfr_prec_t prec) const;
  // The element as an exact algebraic number.
  AlgebraicNumber to_algebraic(const RatPoly& a) const;

  // Coordinates of θ when θ ∈ Q(γ).  Throws PrecisionError when neither a
  // relation nor an exclusion witness is found below the precision cap.
  std::optional<RatPoly> membership(const AlgebraicNumber& theta) const;
  // Square root of d inside the field, if any.
  std::optional<RatPoly> sqrt(const RatPoly& d) const;

 private:
  AlgebraicNumber gamma_;
  PrecisionPolicy pol_;
  RatPoly mod_;
};

// Convenience wrappers with AlgebraicNumber inputs.
std::optional<RatPoly> membership(const AlgebraicNumber& theta, const AlgebraicNumber& gamma,
                                  const PrecisionPolicy& pol = {});
// Throws std::invalid_argument when D is not in Q(γ).
std::optional<AlgebraicNumber> is_square_in_field(const AlgebraicNumber& d, const AlgebraicNumber& gamma,
                                                  const PrecisionPolicy& pol = {});

}  // namespace heckoid
