#include "heckoid/algebraic.hpp"

#include <sstream>
#include <stdexcept>

#include "heckoid/cyclotomic.hpp"
#include "heckoid/factor.hpp"
#include "heckoid/sturm.hpp"

namespace heckoid {

Signature signature(const IntPoly& p, const PrecisionPolicy& pol) {
  if (p.degree() < 1) throw std::invalid_argument("signature of a constant");
  if (!is_irreducible(p, pol)) throw std::invalid_argument("signature of reducible " + p.str());
  Signature s;
  s.degree = p.degree();
  s.real_places = sturm_real_roots(p);
  s.complex_places = (s.degree - s.real_places) / 2;
  return s;
}

namespace {

int count_meeting(const std::vector<RootBox>& roots, const CInterval& e, int& idx) {
  int n = 0;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (roots[i].box.intersects(e)) {
      ++n;
      idx = static_cast<int>(i);
    }
  }
  return n;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(const mpq_class& v)
    : min_poly_(RatPoly(std::vector<mpq_class>{-v, 1}).to_primitive_int()),
      box_(Interval(128, v)),
      real_(true) {}

AlgebraicNumber::AlgebraicNumber(IntPoly min_poly, const CInterval& hint, const PrecisionPolicy& pol)
    : min_poly_(min_poly.primitive_part()) {
  if (min_poly_.degree() < 1) throw std::invalid_argument("minimal polynomial must be nonconstant");
  bool none = false;
  with_escalation(pol, "locating root of " + min_poly_.str(), [&](mpfr_prec_t prec) {
    auto roots = isolate_roots(min_poly_, PrecisionPolicy{prec, std::max(prec, pol.cap)});
    int idx = -1;
    const int n = count_meeting(roots, hint, idx);
    if (n == 0) {
      none = true;
      return true;
    }
    if (n > 1) return false;
    box_ = roots[static_cast<size_t>(idx)].box;
    real_ = roots[static_cast<size_t>(idx)].real;
    return true;
  });
  if (none) throw std::invalid_argument("no root of " + min_poly_.str() + " in " + hint.str(10));
}

AlgebraicNumber AlgebraicNumber::from_root_index(const IntPoly& min_poly, int index,
                                                 const PrecisionPolicy& pol) {
  auto all = roots_of(min_poly, pol);
  if (index < 0 || index >= static_cast<int>(all.size()))
    throw std::out_of_range("root index " + std::to_string(index) + " out of range");
  return all[static_cast<size_t>(index)];
}

std::vector<AlgebraicNumber> AlgebraicNumber::roots_of(const IntPoly& min_poly, const PrecisionPolicy& pol) {
  IntPoly p = min_poly.primitive_part();
  auto roots = isolate_roots(p, pol);
  std::vector<AlgebraicNumber> out;
  for (auto& r : roots) out.push_back(AlgebraicNumber(p, r.box, r.real));
  return out;
}

mpq_class AlgebraicNumber::rational_value() const {
  if (!is_rational()) throw std::logic_error("not rational: " + str());
  mpq_class v(-min_poly_[0], min_poly_[1]);
  v.canonicalize();
  return v;
}

AlgebraicNumber AlgebraicNumber::refined(mpfr_prec_t prec) const {
  if (prec <= precision()) return *this;
  if (is_rational()) return AlgebraicNumber(min_poly_, CInterval(Interval(prec, rational_value())), true);
  for (mpfr_prec_t p = prec;; p *= 2) {
    auto roots = isolate_roots(min_poly_, PrecisionPolicy{p, std::max<mpfr_prec_t>(p * 4, 4096)});
    int idx = -1;
    if (count_meeting(roots, box_, idx) == 1) {
      const auto& nb = roots[static_cast<size_t>(idx)].box;
      CInterval b(nb.re.intersect(box_.re), real_ ? Interval(nb.re.prec()) : nb.im.intersect(box_.im));
      return AlgebraicNumber(min_poly_, std::move(b), real_);
    }
    if (p > 16 * 4096) throw PrecisionError("cannot refine " + str());
  }
}

CInterval AlgebraicNumber::enclosure(mpfr_prec_t prec) const {
  if (is_rational()) return CInterval(Interval(prec, rational_value()));
  return refined(prec).box_;
}

std::complex<long double> AlgebraicNumber::approx() const {
  return {box_.re.mid().to_long_double(), box_.im.mid().to_long_double()};
}

std::string AlgebraicNumber::str() const {
  std::ostringstream os;
  os << "root of " << min_poly_.str() << " near " << box_.re.mid().to_double();
  if (!real_) os << (box_.im.mid().to_double() < 0 ? "-" : "+") << std::abs(box_.im.mid().to_double()) << "i";
  return os.str();
}

AlgebraicNumber trig_value(TrigKind kind, long k, long m, const PrecisionPolicy& pol) {
  if (m <= 0) throw std::invalid_argument("denominator must be positive");
  const mpfr_prec_t prec = pol.start;
  switch (kind) {
    case TrigKind::TwoCos: {
      Interval v = cos_pi_rational(prec, k, m) * Interval(prec, mpz_class(2));
      return AlgebraicNumber(two_cos_min_poly(k, m), CInterval(v), pol);
    }
    case TrigKind::Cos: {
      IntPoly p = two_cos_min_poly(k, m).compose(IntPoly{0, 2});
      return AlgebraicNumber(p, CInterval(cos_pi_rational(prec, k, m)), pol);
    }
    case TrigKind::SinSq: {
      // sin²x = (2 - 2cos 2x) / 4
      IntPoly p = two_cos_min_poly(2 * k, m).compose(IntPoly{2, -4});
      Interval s = sin_pi_rational(prec, k, m);
      return AlgebraicNumber(p, CInterval(s.sqr()), pol);
    }
  }
  throw std::logic_error("unknown trig kind");
}

namespace {

enum class Round { Ok, Ambiguous, NotIntegral };

Round round_coeff(const CInterval& c, mpz_class& out) {
  if (!c.im.contains_zero()) return Round::NotIntegral;
  mpz_class lo, hi;
  mpfr_get_z(lo.get_mpz_t(), c.re.lo().get(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), c.re.hi().get(), MPFR_RNDD);
  if (lo > hi) return Round::NotIntegral;
  if (lo == hi && c.re.round_to_integer(out)) {
    Float w = c.im.mag();
    if (mpfr_cmp_d(w.get(), 0.25) < 0) return Round::Ok;
  }
  return Round::Ambiguous;
}

}  // namespace

IntPoly min_poly_from_conjugates(const std::vector<CInterval>& conj, bool certify) {
  if (conj.empty()) throw std::invalid_argument("empty orbit");
  const mpfr_prec_t prec = conj.front().prec();
  std::vector<CInterval> poly{CInterval(prec, mpz_class(1))};
  for (const auto& c : conj) {
    std::vector<CInterval> next(poly.size() + 1, CInterval(prec));
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= poly[i] * c;
    }
    poly = std::move(next);
  }
  std::vector<mpz_class> coeffs(poly.size());
  for (size_t i = 0; i < poly.size(); ++i) {
    switch (round_coeff(poly[i], coeffs[i])) {
      case Round::Ok:
        break;
      case Round::Ambiguous:
        throw PrecisionError("orbit product rounding ambiguous");
      case Round::NotIntegral:
        throw NotIntegralOrbit("orbit product is not an integer polynomial");
    }
  }
  const IntPoly full(std::move(coeffs));
  auto fac = factor(full);
  const IntPoly* pick = nullptr;
  for (const auto& f : fac.factors) {
    if (!f.poly.eval(conj.front()).contains_zero()) continue;
    if (pick) throw PrecisionError("several factors vanish at the first conjugate");
    pick = &f.poly;
  }
  if (!pick) throw NotIntegralOrbit("no factor vanishes at the first conjugate");
  if (certify && pick->degree() > 1) {
    // The first conjugate must single out one root of the factor.
    auto roots = isolate_roots(*pick, PrecisionPolicy{prec, std::max<mpfr_prec_t>(prec, 4096)});
    if (locate_root(roots, conj.front()) < 0) throw PrecisionError("first conjugate not isolated");
  }
  return *pick;
}

IntPoly min_poly_from_conjugates(const OrbitFn& orbit, bool certify, const PrecisionPolicy& pol) {
  IntPoly out;
  with_escalation(pol, "minimal polynomial from conjugates", [&](mpfr_prec_t prec) {
    try {
      out = min_poly_from_conjugates(orbit(prec), certify);
      return true;
    } catch (const PrecisionError&) {
      return false;
    }
  });
  return out;
}

}  // namespace heckoid

namespace heckoid {

AlgebraicNumber algebraic_from_annihilator(const IntPoly& annihilator,
                                           const std::function<CInterval(mpfr_prec_t)>& enclose,
                                           const PrecisionPolicy& pol) {
  auto fac = factor(annihilator, pol);
  for (mpfr_prec_t prec = pol.start; prec <= pol.cap; prec = pol.next(prec)) {
    const CInterval e = enclose(prec);
    const IntPoly* pick = nullptr;
    int hits = 0;
    for (const auto& f : fac.factors) {
      if (f.poly.eval(e).contains_zero()) {
        pick = &f.poly;
        ++hits;
      }
    }
    if (hits == 0) throw std::invalid_argument("enclosure holds no root of " + annihilator.str());
    if (hits > 1) continue;
    try {
      return AlgebraicNumber(*pick, e, PrecisionPolicy{prec, prec});
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("cannot single out a root of " + annihilator.str());
}

AlgebraicNumber square(const AlgebraicNumber& x, const PrecisionPolicy& pol) {
  if (x.is_rational()) return AlgebraicNumber(x.rational_value() * x.rational_value());
  const IntPoly& m = x.min_poly();
  std::vector<mpz_class> ev, od;
  for (int i = 0; i <= m.degree(); ++i) (i % 2 == 0 ? ev : od).push_back(m[i]);
  const IntPoly e(ev), o(od);
  const IntPoly norm = e * e - IntPoly{0, 1} * o * o;
  return algebraic_from_annihilator(norm, [&](mpfr_prec_t prec) {
    CInterval b = x.enclosure(prec);
    return b * b;
  }, pol);
}

}  // namespace heckoid
