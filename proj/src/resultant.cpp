#include "heckoid/resultant.hpp"

#include <stdexcept>

namespace heckoid {

namespace {

mpz_class ipow(const mpz_class& b, long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

IntPoly divide_all(const IntPoly& p, const mpz_class& d) {
  std::vector<mpz_class> v(p.coeffs());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  return IntPoly(std::move(v));
}

}  // namespace

mpz_class resultant(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  IntPoly a = p, b = q;
  mpz_class sign = 1;
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if ((a.degree() % 2 != 0) && (b.degree() % 2 != 0)) sign = -1;
  }
  if (b.degree() == 0) return sign * ipow(b.lead(), a.degree());

  mpz_class ca = a.content(), cb = b.content();
  mpz_class t = ipow(ca, b.degree()) * ipow(cb, a.degree());
  a = divide_all(a, ca);
  b = divide_all(b, cb);

  mpz_class g = 1, h = 1;
  while (true) {
    const int delta = a.degree() - b.degree();
    if ((a.degree() % 2 != 0) && (b.degree() % 2 != 0)) sign = -sign;
    IntPoly r = pseudo_rem(a, b);
    a = b;
    if (r.is_zero()) return 0;
    b = divide_all(r, g * ipow(h, delta));
    g = a.lead();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      mpz_class num = ipow(g, delta), den = ipow(h, delta - 1);
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (b.degree() <= 0) break;
  }
  // b is a nonzero constant here.
  const int da = a.degree();
  mpz_class hb;
  if (da == 0) {
    hb = h;
  } else if (da == 1) {
    hb = b.lead();
  } else {
    mpz_class num = ipow(b.lead(), da), den = ipow(h, da - 1);
    mpz_divexact(hb.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  return sign * t * hb;
}

mpz_class poly_discriminant(const IntPoly& p) {
  const int d = p.degree();
  if (d < 1) throw std::invalid_argument("discriminant of a constant");
  if (d == 1) return 1;
  mpz_class r = resultant(p, p.derivative());
  mpz_class out;
  mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.lead().get_mpz_t());
  if ((static_cast<long>(d) * (d - 1) / 2) % 2 != 0) out = -out;
  return out;
}

}  // namespace heckoid
