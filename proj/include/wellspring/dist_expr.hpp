#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wellspring/smooth_fn.hpp"

namespace wellspring::distcalc {

// Raised whenever a rewrite would need a product that has no distributional
// meaning: delta * delta, a delta sitting on a step's jump, evaluation at a
// singular point, or a delta at an integration endpoint.
class ill_defined_error : public std::domain_error {
 public:
  ill_defined_error(const std::string& what, double location)
      : std::domain_error(what + " (at x = " + std::to_string(location) + ")"),
        location_(location) {}
  double location() const { return location_; }

 private:
  double location_;
};

enum class StepDir : std::uint8_t { Rising, Falling };

// H(x - location) for Rising, H(location - x) for Falling.
struct StepFactor {
  StepDir dir = StepDir::Rising;
  double location = 0.0;
  friend bool operator==(const StepFactor&, const StepFactor&) = default;
};

inline StepFactor rising(double location) {
  return {StepDir::Rising, location};
}
inline StepFactor falling(double location) {
  return {StepDir::Falling, location};
}

// k-th derivative of the Dirac delta at `location`, canonically written with
// argument (x - location).
struct DeltaFactor {
  double location = 0.0;
  unsigned order = 0;
  friend bool operator==(const DeltaFactor&, const DeltaFactor&) = default;
};

// smooth * (product of step factors) * (at most one delta factor).  Step
// idempotence H^2 = H is applied at construction by deduplication; a delta
// colocated with a step jump is rejected outright.
class DistTerm {
 public:
  explicit DistTerm(SmoothFn smooth, std::vector<StepFactor> steps = {},
                    std::optional<DeltaFactor> delta = {});

  const SmoothFn& smooth() const { return smooth_; }
  const std::vector<StepFactor>& steps() const { return steps_; }
  const std::optional<DeltaFactor>& delta() const { return delta_; }

  friend bool operator==(const DistTerm&, const DistTerm&) = default;

 private:
  SmoothFn smooth_;
  std::vector<StepFactor> steps_;  // sorted by (location, dir), unique
  std::optional<DeltaFactor> delta_;
};

// Finite sum of terms.  Arithmetic operators return normalized results;
// from_terms keeps the raw shape for callers that want to compare against a
// hand-built form.
class DistExpr {
 public:
  DistExpr() = default;  // zero
  explicit DistExpr(DistTerm term) { terms_.push_back(std::move(term)); }
  static DistExpr from_terms(std::vector<DistTerm> terms);
  static DistExpr delta(double coeff, double location, unsigned order = 0);

  const std::vector<DistTerm>& terms() const { return terms_; }

  friend DistExpr operator+(const DistExpr& a, const DistExpr& b);
  friend DistExpr operator-(const DistExpr& a, const DistExpr& b);
  friend DistExpr operator*(const DistExpr& a, const DistExpr& b);
  friend DistExpr operator*(const DistExpr& a, double s);
  friend DistExpr operator*(double s, const DistExpr& a) { return a * s; }
  DistExpr operator-() const;

  bool operator==(const DistExpr& rhs) const = default;

 private:
  std::vector<DistTerm> terms_;
};

// Rewrites to the unique normal form:
//   R1  f(x) * delta^(k)(x-c)  ->  sum_j (-1)^j C(k,j) f^(j)(c) delta^(k-j),
//       so surviving delta terms carry constant coefficients and no steps;
//   R2  a step factor multiplying a delta at a different point folds to its
//       0/1 value there (a colocated pair is rejected at construction);
//   R3  terms whose smooth factor is exactly zero are dropped, terms with
//       identical singular structure are merged, and a term containing both
//       H(x-a) and H(a-x) (empty support) is dropped.
// Regular terms come first sorted by step structure, then deltas by
// (location, order).  Idempotent: normalize(normalize(e)) == normalize(e).
DistExpr normalize(const DistExpr& e);

// Distributional derivative: product rule over the factors, with
// H(x-a) -> delta(x-a), H(a-x) -> -delta(x-a), delta^(k) -> delta^(k+1).
// Result is normalized.
DistExpr differentiate(const DistExpr& e);

// Definite integral over [lo, hi].  Order-0 deltas strictly inside add their
// coefficients (higher orders integrate to zero once normalized); the regular
// part uses the exact antiderivative restricted to the step-allowed window.
// A delta exactly at an endpoint is rejected.
double integrate(const DistExpr& e, double lo, double hi);

// Coefficient of delta^(order)(x - location) in the normal form (0 if absent).
double delta_coefficient(const DistExpr& e, double location, unsigned order);

// Pointwise value of the regular (delta-free) part.  Rejects x at any step
// jump or delta location of the expression.
double evaluate_regular(const DistExpr& e, double x);

// True iff the delta structures agree coefficient-wise within tol and the
// regular parts agree within tol on a deterministic sample grid that avoids
// singular points.  Comparison scale is max(1, |a|, |b|).
bool equivalent(const DistExpr& a, const DistExpr& b, double tol);

// Largest |coefficient| over all smooth factors; meaningful on normalized
// expressions where delta coefficients are constants.
double max_abs_coefficient(const DistExpr& e);

// max_abs_coefficient(normalize(e)) <= tol.
bool is_zero(const DistExpr& e, double tol = 0.0);

// Stable line-oriented rendering for golden tests, one term per line, e.g.
//   1.41421*sin(1*pi*x/L) * H(x)*H(1-x)
//   3.14159 * d0(x-0)
std::string pretty(const DistExpr& e);

}  // namespace wellspring::distcalc
