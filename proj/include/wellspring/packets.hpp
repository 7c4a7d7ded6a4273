#pragma once

#include <complex>
#include <vector>

#include "wellspring/isw.hpp"

namespace wellspring::packets {

using isw::WellConfig;

// psi(x,t) = sum_n a_n Psi_n(x) exp(-i omega_n t), omega_n = E_n / hbar.
// Coefficients are normalized at construction: sum |a_n|^2 == 1.
struct WavePacket {
  WellConfig well;
  std::vector<std::complex<double>> coeffs;  // index i holds mode n = i+1
  std::vector<double> omegas;
  unsigned modes() const { return static_cast<unsigned>(coeffs.size()); }
};

// Rejects an empty or all-zero coefficient list.
WavePacket make_packet(const WellConfig& cfg,
                       std::vector<std::complex<double>> coeffs);

// Exactly zero outside [0, L].
std::complex<double> amplitude(const WavePacket& p, double x, double t);

// <P>(t) = (-i hbar)(2/L) sum_{n != m} a_n* a_m [k_n k_m/(k_n^2 - k_m^2)]
//          beta_nm exp(i(omega_n - omega_m) t),  beta_nm = 1 - (-1)^(n+m).
// The (n,m) and (m,n) terms are conjugate up to sign, so the sum is real;
// the implementation folds each such pair analytically, making the result
// real by construction rather than real up to rounding.
double momentum_expectation(const WavePacket& p, double t);

// d<P>/dt as its own series:
//   (hbar^2/(m L)) sum_{n != m} a_n* a_m k_n k_m beta_nm e^{i(w_n - w_m)t}.
double momentum_rate(const WavePacket& p, double t);

// Coefficient of the (n,m) pair in the momentum_rate series.  Exposed so the
// term-level cancellation against the force series can be asserted without
// any summation.
double momentum_rate_coefficient(const WellConfig& cfg, unsigned n, unsigned m);

// <n| dV/dx |m> = -(hbar^2/(m L)) k_n k_m beta_nm for n != m, 0 on the
// diagonal: the exact negative of momentum_rate_coefficient.
double force_matrix_element(const WellConfig& cfg, unsigned n, unsigned m);

// <dV/dx>(t): same double sum built from force_matrix_element.
double force_expectation(const WavePacket& p, double t);

// momentum_rate + force_expectation; cancels term by term, so this is zero to
// machine precision for every packet and time.
double ehrenfest_residual(const WavePacket& p, double t);

// Trapezoid-rule integral of psi* (-i hbar d/dx) psi over [0, L] with centered
// differences inside and one-sided stencils at the walls (the derivative
// jumps there).  Second-order in h; rejects h > L/100.
double grid_momentum(const WavePacket& p, double t, double h);

// 2*pi / (omega_2 - omega_1), the slowest oscillation period any pair series
// of this well can carry.
double beat_period(const WellConfig& cfg);

// Sampled state on a uniform grid covering at least [0, L].
struct GridState {
  std::vector<double> points;
  std::vector<std::complex<double>> values;
};

GridState sample_grid(const WavePacket& p, double t, double h,
                      double x_lo = 0.0, double x_hi = -1.0);

// Trapezoid-rule norm of the sampled state; within O(h^2) of 1.
double grid_norm(const GridState& g);

std::vector<double> linspace(double a, double b, unsigned samples);

// Column-oriented time sweep of the momentum series.  force holds <-dV/dx>,
// residual = momentum_rate - force; grid_momentum stays empty unless the
// oracle column was requested.
struct EhrenfestReport {
  std::vector<double> times;
  std::vector<double> momentum;
  std::vector<double> momentum_rate;
  std::vector<double> force;
  std::vector<double> residual;
  std::vector<double> grid_momentum;
};

EhrenfestReport ehrenfest_report(const WavePacket& p,
                                 const std::vector<double>& times,
                                 bool with_grid_oracle, double h);

}  // namespace wellspring::packets
