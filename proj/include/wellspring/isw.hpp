#pragma once

#include "wellspring/dist_expr.hpp"

namespace wellspring::isw {

using distcalc::DistExpr;
using distcalc::SmoothFn;

// Well on [0, L] with particle mass m; all three parameters must be positive.
struct WellConfig {
  double L = 1.0;
  double m = 1.0;
  double hbar = 1.0;
  friend bool operator==(const WellConfig&, const WellConfig&) = default;
};

void validate(const WellConfig& cfg);

// k_n = n*pi/L; evaluated with the same expression the symbolic derivative
// uses, so the two routes agree bitwise.
double wavenumber(const WellConfig& cfg, unsigned n);

// E_n = hbar^2 k_n^2 / (2m).
double eigenenergy(const WellConfig& cfg, unsigned n);

// Normalized bound state n >= 1: sqrt(2/L) sin(k_n x) confined by H(x)H(L-x).
struct Eigenstate {
  unsigned n = 0;
  double k = 0.0;
  double energy = 0.0;
  WellConfig well;
  DistExpr expr;
};

Eigenstate eigenstate(const WellConfig& cfg, unsigned n);

// The confining potential as a formal operator.  It has no expression-level
// representation; it acts only on states that vanish at both walls, where
//   V psi = (hbar^2/2m) [psi'(0+) delta(x) - psi'(L-) delta(x-L)].
// Anything with a nonvanishing wall value is outside the domain: confining it
// would force the trivial solution, so apply() rejects it.
class BoundaryPotential {
 public:
  explicit BoundaryPotential(WellConfig cfg);
  const WellConfig& config() const { return cfg_; }
  DistExpr apply(const DistExpr& psi) const;

 private:
  WellConfig cfg_;
};

inline DistExpr apply_well_potential(const BoundaryPotential& v,
                                     const DistExpr& psi) {
  return v.apply(psi);
}

// normalize( -(hbar^2/2m) psi'' + V psi - E psi ); identically zero exactly
// when (psi, E) is an eigenpair.
DistExpr tise_residual(const WellConfig& cfg, const DistExpr& psi,
                       double energy);

enum class JumpMethod { Integral, OneSided };

// Jump of the state's first derivative at x0.  Walls carry the only jumps;
// any interior point returns 0.  Integral recovers the jump from
// (2m/hbar^2) * integral of V psi over a window around the wall; OneSided
// differences the one-sided regular derivatives.  Both agree to rounding.
double derivative_jump(const Eigenstate& state, double x0, JumpMethod method);

// What multiplying by the piecewise-constant "naive" well potential
//   1/H(x) + 1/H(L-x) - 2
// leaves behind: g(x) [H(x) + H(L-x) - 2 H(x)H(L-x)], which vanishes inside
// the well and equals g outside.  Demanding it vanish everywhere forces
// g == 0, so that potential admits only the trivial state.
DistExpr naive_potential_residual(const WellConfig& cfg, const SmoothFn& g);

}  // namespace wellspring::isw
