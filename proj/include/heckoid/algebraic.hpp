#pragma once

#include <functional>
#include <string>
#include <vector>

#include "heckoid/numeric.hpp"
#include "heckoid/polynomial.hpp"
#include "heckoid/precision.hpp"
#include "heckoid/roots.hpp"

namespace heckoid {

struct Signature {
  int degree = 0;
  int real_places = 0;
  int complex_places = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

// Signature of the field Q[z]/(p).  Throws std::invalid_argument when p is
// reducible or constant.
Signature signature(const IntPoly& p, const PrecisionPolicy& pol = {});

// Exact algebraic number: primitive irreducible minimal polynomial plus a box
// holding exactly one of its roots.
class AlgebraicNumber {
 public:
  AlgebraicNumber() : AlgebraicNumber(mpq_class(0)) {}
  explicit AlgebraicNumber(const mpq_class& v);
  // Root of the irreducible `min_poly` inside `hint`.  The hint must meet
  // exactly one root box at some precision up to the cap.
  AlgebraicNumber(IntPoly min_poly, const CInterval& hint, const PrecisionPolicy& pol = {});
  // Root number `index` in (real part, imaginary part) order.
  static AlgebraicNumber from_root_index(const IntPoly& min_poly, int index,
                                         const PrecisionPolicy& pol = {});
  // All roots of an irreducible polynomial, in root-index order.
  static std::vector<AlgebraicNumber> roots_of(const IntPoly& min_poly,
                                               const PrecisionPolicy& pol = {});

  const IntPoly& min_poly() const { return min_poly_; }
  const CInterval& box() const { return box_; }
  mpfr_prec_t precision() const { return box_.prec(); }
  int degree() const { return min_poly_.degree(); }

  bool is_rational() const { return degree() == 1; }
  mpq_class rational_value() const;
  bool is_integral() const { return min_poly_.is_monic(); }
  bool is_real() const { return real_; }

  // Same number with a box at precision >= prec, nested in the current box.
  AlgebraicNumber refined(mpfr_prec_t prec) const;
  // Enclosure rounded to `prec` bits.
  CInterval enclosure(mpfr_prec_t prec) const;
  std::complex<long double> approx() const;

  std::string str() const;

 private:
  AlgebraicNumber(IntPoly p, CInterval box, bool real) : min_poly_(std::move(p)), box_(std::move(box)), real_(real) {}
  IntPoly min_poly_;
  CInterval box_;
  bool real_ = true;
};

enum class TrigKind { Cos, SinSq, TwoCos };

// cos(kπ/m), sin²(kπ/m) or 2cos(kπ/m).  Throws std::invalid_argument when m <= 0.
AlgebraicNumber trig_value(TrigKind kind, long k, long m, const PrecisionPolicy& pol = {});

// Expands prod (z - c_j) over a Galois orbit, rounds to integers and returns
// the irreducible factor vanishing at the first conjugate.  The orbit callback
// is re-run at doubled precision while the rounding stays ambiguous.
using OrbitFn = std::function<std::vector<CInterval>(mpfr_prec_t)>;
IntPoly min_poly_from_conjugates(const OrbitFn& orbit, bool certify = true,
                                 const PrecisionPolicy& pol = {});
// Fixed enclosures, no retry.
IntPoly min_poly_from_conjugates(const std::vector<CInterval>& conjugates, bool certify = true);

// Thrown when the expanded orbit polynomial is not close to any integer
// polynomial.
class NotIntegralOrbit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heckoid

namespace heckoid {

// The root of some factor of `annihilator` enclosed by enclose(prec), located
// with precision escalation.  The annihilator need not be irreducible.
AlgebraicNumber algebraic_from_annihilator(const IntPoly& annihilator,
                                           const std::function<CInterval(mpfr_prec_t)>& enclose,
                                           const PrecisionPolicy& pol = {});

// x², with minimal polynomial taken from the norm E(w)² - w O(w)².
AlgebraicNumber square(const AlgebraicNumber& x, const PrecisionPolicy& pol = {});

}  // namespace heckoid
