#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "heckoid/criterion.hpp"
#include "heckoid/farey.hpp"

namespace heckoid {

// Box (rational endpoints) for the root with positive imaginary part,
// optionally cut by |z| <= max_abs.
struct SearchRegion {
  mpq_class re_lo = -4, re_hi = 4, im_lo = 0, im_hi = 4;
  std::optional<mpq_class> max_abs;

  bool empty() const;
  // "re_lo,re_hi,im_lo,im_hi" or with a fifth entry for max_abs; entries are
  // integers or fractions.
  static SearchRegion parse(const std::string& text);
  std::string str() const;
};

// Raised when a coefficient box holds more lattice points than allowed.
class SearchOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using IntRange = std::pair<mpz_class, mpz_class>;

// Integer ranges for a_0 .. a_{d-1} of a monic degree d polynomial with one
// conjugate pair in `region` and d - 2 real roots in [-real_bound, 0].
// Empty when the region is empty.
std::vector<IntRange> coefficient_bounds(int d, const SearchRegion& region,
                                         const mpq_class& real_bound);

// Rational upper bound for max over embeddings of (1 - cos 2π/p)(1 - cos 2π/q).
mpq_class real_root_bound(Order p, Order q);

// Irreducible monic polynomials of degree 2..degree_max whose roots are one
// conjugate pair with its upper root in the region and real roots in
// (-real_bound, 0), in (degree, a_0, a_1, ...) order.
std::vector<IntPoly> lattice_candidates(int degree_max, const SearchRegion& region,
                                        const mpq_class& real_bound, long long cap = 10'000'000,
                                        const PrecisionPolicy& pol = {});

// Name of the first free-product certificate that fires, if any.
// "riley_modulus": both parabolic and |ρ| >= 4.
// "isometric_circle_pingpong": after a conjugation moving ∞ off the fixed
// points, the closed isometric discs of the nontrivial powers of f are
// disjoint from those of g (powers ±1 for a parabolic).
std::optional<std::string> free_exclusion(Order p, Order q, const AlgebraicNumber& gamma,
                                          const PrecisionPolicy& pol = {});
std::optional<std::string> free_exclusion_parabolic(const AlgebraicNumber& rho,
                                                    const PrecisionPolicy& pol = {});

struct CandidatePoint {
  Order p = 3, q = 3;
  AlgebraicNumber gamma;
  std::optional<AlgebraicNumber> rho;  // parabolic pairs
  CriterionReport report;
  std::optional<std::string> excluded_by;
  std::vector<RelatorHit> relator_hits;
  std::vector<RelatorHit> near_misses;

  bool excluded_free() const { return excluded_by.has_value(); }
  // "candidate", "excluded" or "fails".
  std::string status() const;
};

struct ScanOptions {
  long long cap = 10'000'000;
  long relator_denominator = 100;  // 0 skips the relator search
  bool include_failing = false;
  bool parallel = true;
  PrecisionPolicy policy{};
};

std::vector<CandidatePoint> enumerate_gammas(Order p, Order q, int degree_max,
                                             const SearchRegion& region,
                                             const ScanOptions& opt = {});

// ρ quadratic integers in the upper half plane inside the region (points are
// taken up to complex conjugation).  With symmetry_reduce, ρ and -conj(ρ) are
// identified and the representative with Re ρ >= 0 is kept.
std::vector<CandidatePoint> parabolic_scan(const SearchRegion& region, bool symmetry_reduce,
                                           const ScanOptions& opt = {});

}  // namespace heckoid
