#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heckoid/numeric.hpp"

namespace heckoid {

// Dense polynomial over Z, coefficients in ascending degree order.  The zero
// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> c);
  IntPoly(std::initializer_list<long> c);
  static IntPoly monomial(const mpz_class& c, int deg);
  static IntPoly x() { return {0, 1}; }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpz_class& lead() const { return c_.back(); }
  const mpz_class& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  mpz_class coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& s);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& s) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

  IntPoly derivative() const;
  mpz_class content() const;
  // Divided by its content, sign fixed so the leading coefficient is positive.
  IntPoly primitive_part() const;
  bool is_monic() const { return !is_zero() && lead() == 1; }
  // True when p(-z) = p(z).
  bool is_even() const;

  mpz_class eval(const mpz_class& x) const;
  mpq_class eval(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;
  Interval eval(const Interval& x) const;
  CInterval eval(const CInterval& x) const;

  // p(q(z)).
  IntPoly compose(const IntPoly& q) const;
  // p(z^k).
  IntPoly inflate(int k) const;
  // z^deg p(1/z).
  IntPoly reversed() const;
  // p(-z).
  IntPoly negate_var() const;

  // Human form used by the classification table, e.g. "-11+9 z^2+z^4".
  std::string str(const std::string& var = "z") const;
  // "[-11,0,9,0,1]".
  std::string json() const;
  // "-11,0,9,0,1".
  std::string csv_coeffs() const;
  // Parses "-11,0,9,0,1" (ascending); whitespace tolerated.
  static IntPoly parse_coeffs(const std::string& s);
  // Parses the human form produced by str().
  static IntPoly parse_str(const std::string& s, const std::string& var = "z");

 private:
  void trim();
  std::vector<mpz_class> c_;
};

// Exact quotient a / b over Z when b divides a, otherwise nullopt.
std::optional<IntPoly> divexact(const IntPoly& a, const IntPoly& b);
// lead(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_rem(const IntPoly& a, const IntPoly& b);
// Primitive gcd with positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);
IntPoly squarefree_part(const IntPoly& p);
// Monic integral polynomial of lead(p) * root: c_i lead^(n-1-i).
IntPoly monic_integral(const IntPoly& p);
// Yun: p = c * prod f_i^i with f_i primitive squarefree, pairwise coprime.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Dense polynomial over Q.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<mpq_class> c);
  explicit RatPoly(const IntPoly& p);
  RatPoly(std::initializer_list<long> c);
  static RatPoly constant(const mpq_class& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const mpq_class& lead() const { return c_.back(); }
  const mpq_class& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  mpq_class coeff(int i) const;
  const std::vector<mpq_class>& coeffs() const { return c_; }

  RatPoly operator-() const;
  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  RatPoly& operator*=(const mpq_class& s);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(RatPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  RatPoly monic() const;
  RatPoly derivative() const;
  mpq_class eval(const mpq_class& x) const;
  CInterval eval(const CInterval& x) const;
  Interval eval(const Interval& x) const;
  RatPoly compose(const RatPoly& q) const;
  // Scaled to a primitive integer polynomial with positive leading coefficient.
  IntPoly to_primitive_int() const;
  // Common denominator of the coefficients.
  mpz_class denominator() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic
// Bezout: returns (g, s, t) with s a + t b = g monic.
struct RatBezout {
  RatPoly g, s, t;
};
RatBezout ext_gcd(const RatPoly& a, const RatPoly& b);

}  // namespace heckoid
