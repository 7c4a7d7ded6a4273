#include "wellspring/isw.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace wellspring::isw {

namespace {

constexpr double kPi = std::numbers::pi;

using distcalc::DistTerm;
using distcalc::StepDir;
using distcalc::StepFactor;
using distcalc::Trig;

// One-sided limit of a step factor at x0 (above = limit from x0+).
double one_sided_step(const StepFactor& s, double x0, bool above) {
  if (s.dir == StepDir::Rising) {
    if (x0 > s.location) return 1.0;
    if (x0 < s.location) return 0.0;
    return above ? 1.0 : 0.0;
  }
  if (x0 < s.location) return 1.0;
  if (x0 > s.location) return 0.0;
  return above ? 0.0 : 1.0;
}

// One-sided limit of the regular part's order-th derivative.
double one_sided_regular(const DistExpr& e, double x0, bool above,
                         unsigned order) {
  double sum = 0.0;
  for (const DistTerm& t : e.terms()) {
    if (t.delta()) continue;
    double v = t.smooth().eval_derivative(x0, order);
    for (const auto& s : t.steps()) v *= one_sided_step(s, x0, above);
    sum += v;
  }
  return sum;
}

}  // namespace

void validate(const WellConfig& cfg) {
  if (!(cfg.L > 0.0) || !std::isfinite(cfg.L))
    throw std::invalid_argument("well width L must be positive");
  if (!(cfg.m > 0.0) || !std::isfinite(cfg.m))
    throw std::invalid_argument("mass m must be positive");
  if (!(cfg.hbar > 0.0) || !std::isfinite(cfg.hbar))
    throw std::invalid_argument("hbar must be positive");
}

double wavenumber(const WellConfig& cfg, unsigned n) {
  return static_cast<double>(n) * kPi / cfg.L;
}

double eigenenergy(const WellConfig& cfg, unsigned n) {
  validate(cfg);
  if (n < 1) throw std::invalid_argument("quantum number n starts at 1");
  const double k = wavenumber(cfg, n);
  const double h2m = cfg.hbar * cfg.hbar / (2.0 * cfg.m);
  return h2m * k * k;
}

Eigenstate eigenstate(const WellConfig& cfg, unsigned n) {
  validate(cfg);
  if (n < 1) throw std::invalid_argument("quantum number n starts at 1");
  SmoothFn g = SmoothFn::harmonic(std::sqrt(2.0 / cfg.L), 0, Trig::Sin,
                                  static_cast<int>(n), cfg.L);
  DistExpr expr = normalize(DistExpr(
      DistTerm(std::move(g), {distcalc::rising(0.0), distcalc::falling(cfg.L)})));
  return {n, wavenumber(cfg, n), eigenenergy(cfg, n), cfg, std::move(expr)};
}

BoundaryPotential::BoundaryPotential(WellConfig cfg) : cfg_(cfg) {
  validate(cfg_);
}

DistExpr BoundaryPotential::apply(const DistExpr& psi) const {
  const DistExpr p = normalize(psi);
  const double L = cfg_.L;
  const double v0 = one_sided_regular(p, 0.0, true, 0);
  const double vL = one_sided_regular(p, L, false, 0);

  // Vanishing is judged against the state's own amplitude scale.
  double amp = std::max(std::abs(v0), std::abs(vL));
  for (int i = 0; i < 129; ++i) {
    const double x = L * (static_cast<double>(i) + 0.618) / 129.0;
    try {
      amp = std::max(amp, std::abs(evaluate_regular(p, x)));
    } catch (const distcalc::ill_defined_error&) {
      // sample landed on a singular point; skip it
    }
  }
  const double bound = 1e-12 * amp;
  if (std::abs(v0) > bound || std::abs(vL) > bound) {
    const double wall = std::abs(v0) > bound ? 0.0 : L;
    const double value = std::abs(v0) > bound ? v0 : vL;
    throw std::domain_error(
        "state outside the potential domain: psi(" + std::to_string(wall) +
        ") = " + std::to_string(value) +
        " does not vanish, and a confining well admits only the trivial "
        "solution for such a state");
  }

  const double d0 = one_sided_regular(p, 0.0, true, 1);
  const double dL = one_sided_regular(p, L, false, 1);
  const double h2m = cfg_.hbar * cfg_.hbar / (2.0 * cfg_.m);
  return DistExpr::delta(h2m * d0, 0.0) + DistExpr::delta(-(h2m * dL), L);
}

DistExpr tise_residual(const WellConfig& cfg, const DistExpr& psi,
                       double energy) {
  validate(cfg);
  const BoundaryPotential v(cfg);
  const double h2m = cfg.hbar * cfg.hbar / (2.0 * cfg.m);
  return differentiate(differentiate(psi)) * (-h2m) + v.apply(psi) -
         psi * energy;
}

double derivative_jump(const Eigenstate& state, double x0, JumpMethod method) {
  const WellConfig& cfg = state.well;
  const bool at_left = (x0 == 0.0), at_right = (x0 == cfg.L);
  if (!at_left && !at_right) return 0.0;  // derivative is continuous inside

  if (method == JumpMethod::OneSided)
    return one_sided_regular(state.expr, x0, true, 1) -
           one_sided_regular(state.expr, x0, false, 1);

  const double eps = std::min(cfg.L / 4.0, 0.1 * cfg.L);
  const double other = at_left ? cfg.L : 0.0;
  if (std::abs(other - x0) <= eps)
    throw std::domain_error(
        "jump integration window would reach the opposite wall");
  const BoundaryPotential v(cfg);
  const double window =
      distcalc::integrate(v.apply(state.expr), x0 - eps, x0 + eps);
  return 2.0 * cfg.m / (cfg.hbar * cfg.hbar) * window;
}

DistExpr naive_potential_residual(const WellConfig& cfg, const SmoothFn& g) {
  validate(cfg);
  std::vector<DistTerm> ts;
  ts.emplace_back(g, std::vector<StepFactor>{distcalc::rising(0.0)});
  ts.emplace_back(g, std::vector<StepFactor>{distcalc::falling(cfg.L)});
  ts.emplace_back(g * -2.0, std::vector<StepFactor>{distcalc::rising(0.0),
                                                    distcalc::falling(cfg.L)});
  return normalize(DistExpr::from_terms(std::move(ts)));
}

}  // namespace wellspring::isw
