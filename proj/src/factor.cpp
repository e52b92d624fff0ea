#include "heckoid/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "heckoid/roots.hpp"

namespace heckoid {

namespace {

// A real factor of degree 1 or 2 built from one real root or a conjugate pair.
struct Unit {
  std::vector<Interval> poly;  // ascending
  int degree;
};

enum class Rounding { None, One, Ambiguous };

Rounding integer_in(const Interval& x, mpz_class& out) {
  mpz_class lo, hi;
  mpfr_get_z(lo.get_mpz_t(), x.lo().get(), MPFR_RNDU);
  mpfr_get_z(hi.get_mpz_t(), x.hi().get(), MPFR_RNDD);
  if (lo > hi) return Rounding::None;
  if (lo == hi) {
    out = lo;
    return Rounding::One;
  }
  return Rounding::Ambiguous;
}

std::vector<Interval> mul(const std::vector<Interval>& a, const std::vector<Interval>& b) {
  const mpfr_prec_t prec = a.front().prec();
  std::vector<Interval> out(a.size() + b.size() - 1, Interval(prec));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

std::vector<Unit> units_of(const std::vector<RootBox>& roots, mpfr_prec_t prec) {
  std::vector<Unit> out;
  const Interval one(prec, mpz_class(1));
  for (const auto& r : roots) {
    if (r.real) {
      out.push_back({{-r.box.re, one}, 1});
    } else if (r.box.im.positive()) {
      Interval two_re = r.box.re * Interval(prec, mpz_class(2));
      out.push_back({{r.box.norm(), -two_re, one}, 2});
    }
  }
  return out;
}

// Tries every subset of `units` with total degree k.  Returns a found factor,
// or nullopt; sets `ambiguous` when some subset could not be decided.
std::optional<IntPoly> try_degree(const IntPoly& f, const std::vector<Unit>& units, int k,
                                  std::vector<size_t>& picked, bool& ambiguous) {
  const mpfr_prec_t prec = units.front().poly.front().prec();
  std::optional<IntPoly> found;
  std::vector<size_t> chosen;
  const Interval lc(prec, f.lead());

  auto test = [&]() -> bool {
    std::vector<Interval> prod{lc};
    for (size_t i : chosen) prod = mul(prod, units[i].poly);
    std::vector<mpz_class> c(prod.size());
    for (size_t i = 0; i < prod.size(); ++i) {
      switch (integer_in(prod[i], c[i])) {
        case Rounding::None:
          return false;
        case Rounding::Ambiguous:
          ambiguous = true;
          return false;
        case Rounding::One:
          break;
      }
    }
    IntPoly g = IntPoly(std::move(c)).primitive_part();
    if (g.degree() != k || !divexact(f, g)) return false;
    found = g;
    picked = chosen;
    return true;
  };

  // Depth-first over index-increasing subsets.
  auto rec = [&](auto&& self, size_t start, int deg) -> bool {
    if (deg == k) return test();
    for (size_t i = start; i < units.size(); ++i) {
      if (deg + units[i].degree > k) continue;
      chosen.push_back(i);
      if (self(self, i + 1, deg + units[i].degree)) return true;
      chosen.pop_back();
    }
    return false;
  };
  rec(rec, 0, 0);
  return found;
}

// One pass at fixed precision.  Throws PrecisionError on ambiguity.
std::vector<IntPoly> split_at(const IntPoly& f, mpfr_prec_t prec) {
  std::vector<IntPoly> out;
  IntPoly rest = f;
  while (rest.degree() > 1) {
    auto roots = isolate_roots(rest, prec);
    auto units = units_of(roots, prec);
    const int d = rest.degree();
    std::optional<IntPoly> g;
    std::vector<size_t> picked;
    bool ambiguous = false;
    for (int k = 1; k <= d / 2 && !g; ++k) g = try_degree(rest, units, k, picked, ambiguous);
    if (!g) {
      if (ambiguous) throw PrecisionError("factor recombination ambiguous");
      break;
    }
    out.push_back(*g);
    rest = *divexact(rest, *g);
  }
  if (rest.degree() >= 1) out.push_back(rest.primitive_part());
  return out;
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  for (int i = a.degree(); i >= 0; --i) {
    const int c = cmp(x[static_cast<size_t>(i)], y[static_cast<size_t>(i)]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& p, const PrecisionPolicy& pol) {
  if (p.degree() < 1) throw std::invalid_argument("factor of a constant");
  IntPoly f = p.primitive_part();
  std::vector<IntPoly> out;
  if (f.degree() == 1) {
    out.push_back(f);
    return out;
  }
  with_escalation(pol, "factorization of " + f.str(), [&](mpfr_prec_t prec) {
    try {
      out = split_at(f, prec);
      return true;
    } catch (const PrecisionError&) {
      return false;
    }
  });
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

Factorization factor(const IntPoly& p, const PrecisionPolicy& pol) {
  if (p.is_zero()) throw std::invalid_argument("factor of zero");
  Factorization out;
  out.unit_content = p.content();
  if (p.lead() < 0) out.unit_content = -out.unit_content;
  if (p.degree() < 1) return out;
  for (const auto& [sf, mult] : squarefree_decomposition(p)) {
    if (sf.degree() < 1) continue;
    for (auto& g : factor_squarefree(sf, pol)) out.factors.push_back({std::move(g), mult});
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Factor& a, const Factor& b) { return poly_less(a.poly, b.poly); });
  return out;
}

bool is_irreducible(const IntPoly& p, const PrecisionPolicy& pol) {
  if (p.degree() < 1) return false;
  IntPoly f = p.primitive_part();
  if (squarefree_part(f).degree() != f.degree()) return false;
  return factor_squarefree(f, pol).size() == 1;
}

}  // namespace heckoid
