#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

namespace heckoid {

// Raised when a comparison or rounding stays ambiguous at the precision cap.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrecisionPolicy {
  mpfr_prec_t start = 128;
  mpfr_prec_t cap = 4096;

  mpfr_prec_t next(mpfr_prec_t p) const { return p * 2; }

  // Start precision taken from HECKOID_PRECISION when set and valid.
  static PrecisionPolicy from_env();
};

// Runs fn(prec) with prec = start, 2*start, ... up to cap.  fn returns true
// when it reached a decision.  Throws PrecisionError naming `what` otherwise.
template <class Fn>
void with_escalation(const PrecisionPolicy& pol, const std::string& what, Fn&& fn) {
  for (mpfr_prec_t p = pol.start; p <= pol.cap; p = pol.next(p)) {
    if (fn(p)) return;
  }
  throw PrecisionError("undetermined at precision cap: " + what);
}

}  // namespace heckoid
