#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <complex>
#include <string>

namespace heckoid {

// RAII owner of one mpfr_t.  Rounding is always explicit at the call site.
class Float {
 public:
  explicit Float(mpfr_prec_t prec = 128);
  Float(mpfr_prec_t prec, double v);
  Float(const Float& o);
  Float(Float&& o) noexcept;
  Float& operator=(const Float& o);
  Float& operator=(Float&& o) noexcept;
  ~Float();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }

 private:
  mpfr_t v_;
};

// Closed interval [lo, hi] with outward-rounded endpoints.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(mpfr_prec_t prec, const mpz_class& v);
  Interval(mpfr_prec_t prec, const mpq_class& v);
  Interval(mpfr_prec_t prec, const mpq_class& lo, const mpq_class& hi);
  Interval(const Float& lo, const Float& hi);
  // Exact point (the Float must be representable at prec).
  static Interval point(const Float& v);
  static Interval from_double(mpfr_prec_t prec, double v);
  static Interval pi(mpfr_prec_t prec);

  mpfr_prec_t prec() const { return lo_.prec(); }
  const Float& lo() const { return lo_; }
  const Float& hi() const { return hi_; }

  Float mid() const;
  Float rad() const;  // upper bound of max(hi - mid, mid - lo)
  Float width() const;
  Float mag() const;  // upper bound of max |x|
  Float mig() const;  // lower bound of min |x|

  bool contains_zero() const;
  bool contains(const mpq_class& q) const;
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }
  bool nonneg() const { return lo_.sign() >= 0; }
  bool is_point() const;
  bool intersects(const Interval& o) const;
  bool subset_of(const Interval& o) const;
  double to_double() const;

  Interval operator-() const;
  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  Interval& operator*=(const Interval& o);
  Interval& operator/=(const Interval& o);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }

  Interval inv() const;
  Interval sqr() const;
  Interval sqrt() const;
  Interval abs() const;
  Interval cos() const;
  Interval sin() const;
  // Hull with a second interval.
  Interval hull(const Interval& o) const;
  // Intersection; throws std::domain_error when disjoint.
  Interval intersect(const Interval& o) const;
  // Widen symmetrically by an upper bound r >= 0.
  Interval inflate(const Float& r) const;

  // Unique integer within distance < 1/4 of every point, if any.
  bool round_to_integer(mpz_class& out) const;

  std::string str(int digits = 20) const;

 private:
  Float lo_, hi_;
};

Interval cos_pi_rational(mpfr_prec_t prec, long k, long m);  // cos(kπ/m)
Interval sin_pi_rational(mpfr_prec_t prec, long k, long m);

class CInterval {
 public:
  explicit CInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  CInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  explicit CInterval(Interval r);
  CInterval(mpfr_prec_t prec, const mpz_class& v);

  Interval re, im;

  mpfr_prec_t prec() const { return re.prec(); }
  CInterval operator-() const { return {-re, -im}; }
  CInterval& operator+=(const CInterval& o);
  CInterval& operator-=(const CInterval& o);
  CInterval& operator*=(const CInterval& o);
  CInterval& operator*=(const Interval& o);
  CInterval& operator/=(const CInterval& o);
  friend CInterval operator+(CInterval a, const CInterval& b) { return a += b; }
  friend CInterval operator-(CInterval a, const CInterval& b) { return a -= b; }
  friend CInterval operator*(CInterval a, const CInterval& b) { return a *= b; }
  friend CInterval operator*(CInterval a, const Interval& b) { return a *= b; }
  friend CInterval operator/(CInterval a, const CInterval& b) { return a /= b; }

  CInterval conj() const { return {re, -im}; }
  CInterval inv() const;
  Interval norm() const;  // |z|^2
  Float mag() const;      // upper bound on |z|
  Float mig() const;      // lower bound on |z|
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  bool intersects(const CInterval& o) const {
    return re.intersects(o.re) && im.intersects(o.im);
  }
  bool subset_of(const CInterval& o) const {
    return re.subset_of(o.re) && im.subset_of(o.im);
  }
  std::complex<double> to_complex() const {
    return {re.to_double(), im.to_double()};
  }
  std::string str(int digits = 20) const;
};

// e^{iπk/m} as a complex interval.
CInterval unit_root(mpfr_prec_t prec, long k, long m);

// Enclosure of the square root of z nearest to `guess` (any branch).  Throws
// PrecisionError when z is too wide relative to |guess| to isolate it.
CInterval sqrt_near(const CInterval& z, std::complex<long double> guess);
// Principal branch with ties on the negative axis resolved to Im >= 0.
CInterval sqrt_upper(const CInterval& z);

// Converts a finite Float to an exact rational.
mpq_class to_rational(const Float& f);

}  // namespace heckoid
