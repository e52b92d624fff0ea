#include "heckoid/sturm.hpp"

#include <stdexcept>

namespace heckoid {

SturmChain::SturmChain(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  chain_.push_back(p);
  if (p.degree() == 0) return;
  chain_.push_back(p.derivative());
  while (true) {
    const IntPoly& a = chain_[chain_.size() - 2];
    const IntPoly& b = chain_.back();
    IntPoly r = pseudo_rem(a, b);
    // prem multiplies by lead(b)^e; undo a negative factor so signs survive.
    const int e = a.degree() - b.degree() + 1;
    if (b.lead() < 0 && (e % 2 != 0)) r = -r;
    if (r.is_zero()) break;
    r = -r;
    mpz_class c = r.content();
    if (c != 1) {
      std::vector<mpz_class> v(r.coeffs());
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
      r = IntPoly(std::move(v));
    }
    chain_.push_back(std::move(r));
  }
  if (chain_.back().degree() > 0)
    throw std::invalid_argument("Sturm chain requires a squarefree polynomial");
}

int SturmChain::variations(const mpq_class& x) const {
  int count = 0, last = 0;
  for (const auto& q : chain_) {
    int s = q.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int SturmChain::variations_at_infinity(bool positive) const {
  int count = 0, last = 0;
  for (const auto& q : chain_) {
    int s = sgn(q.lead());
    if (!positive && (q.degree() % 2 != 0)) s = -s;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sturm_real_roots(const IntPoly& p, const std::optional<mpq_class>& lo,
                     const std::optional<mpq_class>& hi, Ends ends) {
  if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
  if (lo && hi && *lo > *hi) return 0;
  SturmChain sc(p);
  const int va = lo ? sc.variations(*lo) : sc.variations_at_infinity(false);
  const int vb = hi ? sc.variations(*hi) : sc.variations_at_infinity(true);
  // va - vb counts roots in (lo, hi].
  int n = va - vb;
  if (ends == Ends::Open) {
    if (hi && p.sign_at(*hi) == 0) --n;
  } else {
    if (lo && p.sign_at(*lo) == 0) ++n;
  }
  if (lo && hi && *lo == *hi) return ends == Ends::Closed && p.sign_at(*lo) == 0 ? 1 : 0;
  return n;
}

int sturm_real_roots(const IntPoly& p) { return sturm_real_roots(p, std::nullopt, std::nullopt); }

}  // namespace heckoid
