#pragma once

#include <optional>
#include <vector>

#include "heckoid/polynomial.hpp"

namespace heckoid {

// Sturm chain over Z built with sign-corrected pseudo-remainders.
class SturmChain {
 public:
  // p must be squarefree and nonzero.
  explicit SturmChain(const IntPoly& p);

  // Sign variations at x; nullopt means -inf when at_minus_inf, else +inf.
  int variations(const mpq_class& x) const;
  int variations_at_infinity(bool positive) const;

  const std::vector<IntPoly>& chain() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

enum class Ends { Open, Closed };

// Number of distinct real roots of a squarefree p in the interval between lo
// and hi; an absent bound means -inf / +inf.  Open by default.
int sturm_real_roots(const IntPoly& p, const std::optional<mpq_class>& lo,
                     const std::optional<mpq_class>& hi, Ends ends = Ends::Open);
// Whole real line.
int sturm_real_roots(const IntPoly& p);

}  // namespace heckoid
