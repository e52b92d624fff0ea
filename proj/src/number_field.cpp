#include "heckoid/number_field.hpp"

#include <cstdint>
#include <stdexcept>

#include "heckoid/lll.hpp"

namespace heckoid {

namespace {

using u64 = std::uint64_t;

u64 mod_u(const mpz_class& v, u64 l) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), l);
  return r.get_ui();
}

u64 eval_mod(const std::vector<u64>& c, u64 x, u64 l) {
  u64 acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = (acc * x + c[i]) % l;
  return acc;
}

u64 pow_mod(u64 b, u64 e, u64 l) {
  u64 r = 1;
  b %= l;
  while (e) {
    if (e & 1) r = r * b % l;
    b = b * b % l;
    e >>= 1;
  }
  return r;
}


std::vector<u64> reduce_coeffs(const IntPoly& p, u64 l) {
  std::vector<u64> out;
  for (const auto& v : p.coeffs()) out.push_back(mod_u(v, l));
  return out;
}

// Simple roots of the monic integral m mod l.
std::vector<u64> simple_roots_mod(const IntPoly& m, u64 l) {
  auto c = reduce_coeffs(m, l);
  auto dc = reduce_coeffs(m.derivative(), l);
  std::vector<u64> out;
  for (u64 r = 0; r < l; ++r)
    if (eval_mod(c, r, l) == 0 && eval_mod(dc, r, l) != 0) out.push_back(r);
  return out;
}

bool has_root_mod(const IntPoly& m, u64 l) {
  auto c = reduce_coeffs(m, l);
  for (u64 r = 0; r < l; ++r)
    if (eval_mod(c, r, l) == 0) return true;
  return false;
}

std::vector<u64> small_primes(u64 bound) {
  std::vector<bool> comp(bound + 1);
  std::vector<u64> out;
  for (u64 i = 2; i <= bound; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) comp[j] = true;
  }
  return out;
}

const std::vector<u64>& witness_primes() {
  static const std::vector<u64> primes = small_primes(3000);
  return primes;
}

mpz_class scaled_round(const Float& x, long bits) {
  Float t(x.prec() + 64);
  mpfr_mul_2si(t.get(), x.get(), bits, MPFR_RNDN);
  mpz_class out;
  mpfr_get_z(out.get_mpz_t(), t.get(), MPFR_RNDN);
  return out;
}

// Integer relations a_0 t + sum a_{i+1} γ^i = 0 suggested by LLL, returned as
// h = -sum a_{i+1} y^i / a_0.
std::vector<RatPoly> relation_candidates(const CInterval& t, const std::vector<CInterval>& powers, mpfr_prec_t prec) {
  const size_t dim = powers.size() + 1;
  const long bits = static_cast<long>(prec) - 16;
  IntMatrix basis(dim, std::vector<mpz_class>(dim + 2));
  for (size_t i = 0; i < dim; ++i) {
    const CInterval& x = i == 0 ? t : powers[i - 1];
    basis[i][i] = 1;
    basis[i][dim] = scaled_round(x.re.mid(), bits);
    basis[i][dim + 1] = scaled_round(x.im.mid(), bits);
  }
  lll_reduce(basis);
  std::vector<RatPoly> out;
  for (const auto& row : basis) {
    if (row[0] == 0) continue;
    std::vector<mpq_class> h(powers.size());
    for (size_t i = 0; i < powers.size(); ++i) {
      h[i] = mpq_class(-row[i + 1], row[0]);
      h[i].canonicalize();
    }
    out.emplace_back(std::move(h));
  }
  return out;
}

}  // namespace

NumberField::NumberField(AlgebraicNumber gamma, PrecisionPolicy pol)
    : gamma_(std::move(gamma)), pol_(pol), mod_(gamma_.min_poly()) {}

RatPoly NumberField::reduce(const RatPoly& a) const { return a % mod_; }

RatPoly NumberField::mul(const RatPoly& a, const RatPoly& b) const { return (a * b) % mod_; }

RatPoly NumberField::inv(const RatPoly& a) const {
  RatPoly r = reduce(a);
  if (r.is_zero()) throw std::domain_error("inverse of zero");
  auto bz = ext_gcd(r, mod_);
  if (bz.g.degree() != 0) throw std::domain_error("modulus is not irreducible");
  return reduce(bz.s * (1 / bz.g[0]));
}

RatPoly NumberField::pow(const RatPoly& a, unsigned e) const {
  RatPoly r = RatPoly::constant(1), b = reduce(a);
  while (e) {
    if (e & 1u) r = mul(r, b);
    b = mul(b, b);
    e >>= 1u;
  }
  return r;
}

RatPoly NumberField::charpoly(const RatPoly& a) const {
  const int n = degree();
  // Matrix of multiplication by a; column j is a * y^j.
  std::vector<std::vector<mpq_class>> h(static_cast<size_t>(n), std::vector<mpq_class>(static_cast<size_t>(n)));
  RatPoly col = reduce(a);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) h[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
    col = mul(col, RatPoly{0, 1});
  }
  // Hessenberg form by similarity.
  for (int c = 0; c + 2 < n; ++c) {
    int piv = -1;
    for (int i = c + 1; i < n; ++i)
      if (h[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    const auto s = [](int v) { return static_cast<size_t>(v); };
    if (piv != c + 1) {
      std::swap(h[s(piv)], h[s(c + 1)]);
      for (int i = 0; i < n; ++i) std::swap(h[s(i)][s(piv)], h[s(i)][s(c + 1)]);
    }
    for (int r = c + 2; r < n; ++r) {
      if (h[s(r)][s(c)] == 0) continue;
      mpq_class u = h[s(r)][s(c)] / h[s(c + 1)][s(c)];
      for (int k = 0; k < n; ++k) h[s(r)][s(k)] -= u * h[s(c + 1)][s(k)];
      for (int k = 0; k < n; ++k) h[s(k)][s(c + 1)] += u * h[s(k)][s(r)];
    }
  }
  const auto at = [&](int i, int j) -> const mpq_class& { return h[static_cast<size_t>(i)][static_cast<size_t>(j)]; };
  std::vector<RatPoly> p{RatPoly::constant(1)};
  for (int m = 1; m <= n; ++m) {
    RatPoly next = RatPoly(std::vector<mpq_class>{-at(m - 1, m - 1), 1}) * p[static_cast<size_t>(m - 1)];
    mpq_class prod = 1;
    for (int i = m - 1; i >= 1; --i) {
      prod *= at(i, i - 1);
      next -= p[static_cast<size_t>(i - 1)] * (at(i - 1, m - 1) * prod);
    }
    p.push_back(next);
  }
  return p.back();
}

IntPoly NumberField::minpoly(const RatPoly& a) const {
  RatPoly c = charpoly(a);
  RatPoly g = gcd(c, c.derivative());
  return divmod(c, g).first.to_primitive_int();
}

CInterval NumberField::eval(const RatPoly& a, mpfr_prec_t prec) const {
  RatPoly r = reduce(a);
  if (r.degree() <= 0) return CInterval(Interval(prec, r.coeff(0)));
  return r.eval(gamma_.enclosure(prec));
}

AlgebraicNumber NumberField::to_algebraic(const RatPoly& a) const {
  RatPoly r = reduce(a);
  if (r.degree() <= 0) return AlgebraicNumber(r.coeff(0));
  const IntPoly mp = minpoly(r);
  for (mpfr_prec_t prec = pol_.start; prec <= pol_.cap; prec = pol_.next(prec)) {
    try {
      return AlgebraicNumber(mp, eval(r, prec), PrecisionPolicy{prec, prec});
    } catch (const PrecisionError&) {
    }
  }
  throw PrecisionError("cannot locate field element " + mp.str());
}

std::optional<RatPoly> NumberField::membership(const AlgebraicNumber& theta) const {
  if (theta.is_rational()) return RatPoly::constant(theta.rational_value());
  const int n = degree();
  if (n % theta.degree() != 0) return std::nullopt;
  const IntPoly mg = monic_integral(modulus());
  const IntPoly mt = monic_integral(theta.min_poly());
  bool witnessed = false;

  for (mpfr_prec_t prec = pol_.start; prec <= pol_.cap; prec = pol_.next(prec)) {
    std::vector<CInterval> powers;
    const CInterval g = gamma_.enclosure(prec + 32);
    CInterval x(prec + 32, mpz_class(1));
    for (int i = 0; i < n; ++i) {
      powers.push_back(x);
      x *= g;
    }
    const AlgebraicNumber th = theta.refined(prec + 32);
    for (auto& h : relation_candidates(th.box(), powers, prec)) {
      // Exact: theta's minimal polynomial vanishes at h(γ).
      RatPoly acc;
      for (int i = theta.degree(); i >= 0; --i) acc = mul(acc, h) + RatPoly::constant(mpq_class(theta.min_poly()[i]));
      if (!acc.is_zero()) continue;
      // Numeric: h(γ) is the root of m_θ that θ isolates.
      auto roots = isolate_roots(theta.min_poly(), PrecisionPolicy{prec, std::max<mpfr_prec_t>(prec, pol_.cap)});
      const int a = locate_root(roots, eval(h, prec + 32));
      const int b = locate_root(roots, th.box());
      if (a >= 0 && a == b) return h;
    }
    if (!witnessed) {
      witnessed = true;
      for (u64 l : witness_primes()) {
        if (simple_roots_mod(mg, l).empty()) continue;
        if (!has_root_mod(mt, l)) return std::nullopt;
      }
    }
  }
  throw PrecisionError("membership undetermined for " + theta.str());
}

std::optional<RatPoly> NumberField::sqrt(const RatPoly& d0) const {
  const RatPoly d = reduce(d0);
  if (d.is_zero()) return RatPoly();
  if (d.degree() == 0 && degree() == 1) {
    // Rational field: exact integer square roots.
    mpq_class v = d[0];
    if (v < 0) return std::nullopt;
    mpz_class nr, dr;
    if (!mpz_perfect_square_p(v.get_num_mpz_t()) || !mpz_perfect_square_p(v.get_den_mpz_t())) return std::nullopt;
    mpz_sqrt(nr.get_mpz_t(), v.get_num_mpz_t());
    mpz_sqrt(dr.get_mpz_t(), v.get_den_mpz_t());
    return RatPoly::constant(mpq_class(nr, dr));
  }
  const IntPoly mg = monic_integral(modulus());
  const mpz_class lc = modulus().lead();
  const mpz_class den = d.denominator();
  bool witnessed = false;

  for (mpfr_prec_t prec = pol_.start; prec <= pol_.cap; prec = pol_.next(prec)) {
    if (!witnessed) {
      witnessed = true;
      // d is a non-residue at a degree-one prime: no square root.
      for (u64 l : witness_primes()) {
        if (l == 2 || mod_u(lc * den, l) == 0) continue;
        const u64 lc_inv = pow_mod(mod_u(lc, l), l - 2, l);
        const u64 den_inv = pow_mod(mod_u(den, l), l - 2, l);
        std::vector<u64> dn;
        for (int i = 0; i <= d.degree(); ++i) {
          mpq_class c = d[i] * den;
          dn.push_back(mod_u(c.get_num(), l));
        }
        for (u64 r : simple_roots_mod(mg, l)) {
          const u64 g = r * lc_inv % l;
          const u64 v = eval_mod(dn, g, l) * den_inv % l;
          if (v != 0 && pow_mod(v, (l - 1) / 2, l) == l - 1) return std::nullopt;
        }
      }
    }
    const int n = degree();
    std::vector<CInterval> powers;
    const CInterval g = gamma_.enclosure(prec + 32);
    CInterval x(prec + 32, mpz_class(1));
    for (int i = 0; i < n; ++i) {
      powers.push_back(x);
      x *= g;
    }
    CInterval dv = d.eval(g);
    CInterval root(prec + 32);
    try {
      root = sqrt_upper(dv);
    } catch (const PrecisionError&) {
      continue;
    }
    for (auto& h : relation_candidates(root, powers, prec)) {
      if (mul(h, h) == d) return h;
    }
  }
  throw PrecisionError("square root in field undetermined");
}

std::optional<RatPoly> membership(const AlgebraicNumber& theta, const AlgebraicNumber& gamma,
                                  const PrecisionPolicy& pol) {
  return NumberField(gamma, pol).membership(theta);
}

std::optional<AlgebraicNumber> is_square_in_field(const AlgebraicNumber& d, const AlgebraicNumber& gamma,
                                                  const PrecisionPolicy& pol) {
  NumberField k(gamma, pol);
  auto coords = k.membership(d);
  if (!coords) throw std::invalid_argument("D is not in Q(gamma)");
  auto s = k.sqrt(*coords);
  if (!s) return std::nullopt;
  return k.to_algebraic(*s);
}

}  // namespace heckoid
