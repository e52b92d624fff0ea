#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "heckoid/polynomial.hpp"

namespace heckoid {

struct IntegerFactorization {
  std::vector<std::pair<mpz_class, int>> primes;  // ascending
  mpz_class cofactor = 1;                          // composite part left unsplit
  bool complete() const { return cofactor == 1; }
};

// Trial division, then Pollard-Brent with a bounded iteration budget.
IntegerFactorization factor_integer(const mpz_class& n, long rho_budget = 2'000'000);

// Dedekind criterion: is Z[θ] maximal at p, θ a root of the monic f?
bool dedekind_is_p_maximal(const IntPoly& monic_f, const mpz_class& p);

struct FieldDiscriminant {
  mpz_class value;
  // Factors of the polynomial discriminant that could not be split; value is
  // then only correct up to squares of these.
  std::vector<mpz_class> unresolved;
  bool resolved() const { return unresolved.empty(); }
};

// Discriminant of the maximal order of Q[z]/(p), p irreducible.
FieldDiscriminant field_discriminant(const IntPoly& p);

// Power of p in [O_K : Z[θ]] for the monic f (round 2).
int index_exponent(const IntPoly& monic_f, const mpz_class& p);

}  // namespace heckoid
