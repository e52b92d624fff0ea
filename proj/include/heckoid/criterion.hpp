#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "heckoid/algebraic.hpp"
#include "heckoid/number_field.hpp"

namespace heckoid {

// Order of an elliptic generator; kParabolic marks a parabolic one.
using Order = int;
constexpr Order kParabolic = 0;

std::string order_str(Order o);

struct GammaCandidate {
  Order p = 3;
  Order q = 3;
  AlgebraicNumber gamma;
};

// The candidate is outside the scope of the complex-γ criterion.
class RoutingError : public std::invalid_argument {
 public:
  enum class Kind { RealGamma, Parabolic };
  RoutingError(Kind k, const std::string& what) : std::invalid_argument(what), kind(k) {}
  Kind kind;
};

enum class Verdict { Pass, Fail, Undetermined };
std::string verdict_str(Verdict v);

// One real embedding τ of Q(γ) and the margins of -B_σ < τ(γ) < 0, where
// B_σ = (1 - σ cos 2π/p)(1 - σ cos 2π/q).  Margins are τ + B (lower) and -τ
// (upper); both must be positive.
struct EmbeddingCheck {
  int root_index = 0;
  Interval tau;
  Interval lower_margin;
  Interval upper_margin;
  Verdict verdict = Verdict::Undetermined;
};

struct FrickeQuadratic {
  RatPoly b, c;  // x² - b x + c, coordinates in the power basis of γ
  RatPoly discriminant() const;
};

struct CriterionReport {
  bool integrality = false;
  bool field_contains_L = false;
  bool signature_ok = false;
  bool embedding_bounds_ok = false;
  bool embedding_bounds_evaluated = false;
  bool fricke_splits = false;
  bool fricke_evaluated = false;
  std::vector<EmbeddingCheck> embeddings;
  int field_degree = 0;
  Signature field_signature;
  mpz_class field_discriminant;
  bool field_discriminant_resolved = true;
  std::string note;

  bool all_pass() const {
    return integrality && field_contains_L && signature_ok && embedding_bounds_ok && fricke_splits;
  }
};

// Coordinates of cos(2π/p) in Q(γ), if present.
std::optional<RatPoly> cos_coordinates(const NumberField& k, Order p);

FrickeQuadratic fricke_quadratic(const NumberField& k, Order p, Order q);
// Throws std::invalid_argument when cos 2π/p or cos 2π/q is not in Q(γ).
FrickeQuadratic fricke_quadratic(Order p, Order q, const AlgebraicNumber& gamma,
                                 const PrecisionPolicy& pol = {});

std::vector<EmbeddingCheck> embedding_bounds_check(const NumberField& k, Order p, Order q);
std::vector<EmbeddingCheck> embedding_bounds_check(Order p, Order q, const AlgebraicNumber& gamma,
                                                   const PrecisionPolicy& pol = {});

// Integrality, L in Q(γ), signature, embedding bounds and Fricke splitting for
// complex γ and finite orders.  Throws RoutingError for
// real γ or parabolic orders.
CriterionReport check_arithmetic_subgroup(const GammaCandidate& cand, const PrecisionPolicy& pol = {});

// Which field the parabolic test reads: Q(ρ) or Q(γ) = Q(ρ²).
enum class ParabolicField { Rho, Gamma };

// Parabolic pair with parameter ρ, γ = ρ²: passes iff γ is an algebraic
// integer and the chosen field is imaginary quadratic.
CriterionReport parabolic_check(const AlgebraicNumber& rho, ParabolicField mode = ParabolicField::Rho,
                                const PrecisionPolicy& pol = {});

}  // namespace heckoid
