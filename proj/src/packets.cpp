#include "wellspring/packets.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

namespace wellspring::packets {

namespace {

constexpr double kPi = std::numbers::pi;

// Drivers for the double series over mode pairs with odd n + m (the parity
// factor beta_nm kills even pairs exactly).  The (n, m) and (m, n) summands
// are complex conjugates up to the coefficient's symmetry, so each pair is
// folded analytically: the sums are real by construction instead of merely
// real up to rounding.  coeff(n, m) carries everything but a_n* a_m and the
// phase; a series built from exactly negated coefficients therefore produces
// the exactly negated sum.
//
// z_nm below is conj(a_n) a_m e^{i (omega_n - omega_m) t}.

// For coeff(m, n) == coeff(n, m): sum = Sum_{n<m} 2 c_nm Re(z_nm).
template <typename PairCoeff>
double symmetric_pair_series(const WavePacket& p, double t,
                             PairCoeff&& coeff) {
  const unsigned N = p.modes();
  std::vector<std::complex<double>> phase(N);
  for (unsigned i = 0; i < N; ++i) phase[i] = std::polar(1.0, p.omegas[i] * t);
  double sum = 0.0;
  for (unsigned n = 1; n <= N; ++n) {
    for (unsigned m = n + 1; m <= N; ++m) {
      if ((n + m) % 2 == 0) continue;
      const std::complex<double> z = std::conj(p.coeffs[n - 1]) *
                                     p.coeffs[m - 1] * phase[n - 1] *
                                     std::conj(phase[m - 1]);
      sum += 2.0 * coeff(n, m) * z.real();
    }
  }
  return sum;
}

// For coeff(m, n) == -coeff(n, m): the full sum is i * S with
// S = Sum_{n<m} 2 c_nm Im(z_nm); this returns S.
template <typename PairCoeff>
double antisymmetric_pair_series(const WavePacket& p, double t,
                                 PairCoeff&& coeff) {
  const unsigned N = p.modes();
  std::vector<std::complex<double>> phase(N);
  for (unsigned i = 0; i < N; ++i) phase[i] = std::polar(1.0, p.omegas[i] * t);
  double sum = 0.0;
  for (unsigned n = 1; n <= N; ++n) {
    for (unsigned m = n + 1; m <= N; ++m) {
      if ((n + m) % 2 == 0) continue;
      const std::complex<double> z = std::conj(p.coeffs[n - 1]) *
                                     p.coeffs[m - 1] * phase[n - 1] *
                                     std::conj(phase[m - 1]);
      sum += 2.0 * coeff(n, m) * z.imag();
    }
  }
  return sum;
}

void require_mode(unsigned n) {
  if (n < 1) throw std::invalid_argument("mode index starts at 1");
}

}  // namespace

WavePacket make_packet(const WellConfig& cfg,
                       std::vector<std::complex<double>> coeffs) {
  isw::validate(cfg);
  if (coeffs.empty())
    throw std::invalid_argument("packet needs at least one coefficient");
  double norm2 = 0.0;
  for (const auto& a : coeffs) norm2 += std::norm(a);
  if (!(norm2 > 0.0))
    throw std::invalid_argument("packet coefficients are all zero");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : coeffs) a *= scale;
  std::vector<double> omegas(coeffs.size());
  for (unsigned i = 0; i < omegas.size(); ++i)
    omegas[i] = isw::eigenenergy(cfg, i + 1) / cfg.hbar;
  return {cfg, std::move(coeffs), std::move(omegas)};
}

std::complex<double> amplitude(const WavePacket& p, double x, double t) {
  if (x < 0.0 || x > p.well.L) return {0.0, 0.0};
  const double root = std::sqrt(2.0 / p.well.L);
  std::complex<double> sum{0.0, 0.0};
  for (unsigned i = 0; i < p.modes(); ++i) {
    const double k = isw::wavenumber(p.well, i + 1);
    sum += p.coeffs[i] * (root * std::sin(k * x)) *
           std::polar(1.0, -p.omegas[i] * t);
  }
  return sum;
}

double momentum_expectation(const WavePacket& p, double t) {
  // k_n k_m / (k_n^2 - k_m^2) reduces to the exact integer ratio
  // n m / ((n - m)(n + m)); beta_nm = 2 on the surviving odd pairs.
  auto coeff = [](unsigned n, unsigned m) {
    const long long nn = n, mm = m;
    return 2.0 * static_cast<double>(nn * mm) /
           static_cast<double>((nn - mm) * (nn + mm));
  };
  // The ratio is antisymmetric under n <-> m, so the raw double series is
  // purely imaginary; the prefactor -i 2 hbar / L turns it real.
  const double s = antisymmetric_pair_series(p, t, coeff);
  return (p.well.hbar * 2.0 / p.well.L) * s;
}

double momentum_rate_coefficient(const WellConfig& cfg, unsigned n,
                                 unsigned m) {
  require_mode(n);
  require_mode(m);
  if (n == m || (n + m) % 2 == 0) return 0.0;
  const double pref = cfg.hbar * cfg.hbar / (cfg.m * cfg.L);
  return pref * isw::wavenumber(cfg, n) * isw::wavenumber(cfg, m) * 2.0;
}

double force_matrix_element(const WellConfig& cfg, unsigned n, unsigned m) {
  return -momentum_rate_coefficient(cfg, n, m);
}

double momentum_rate(const WavePacket& p, double t) {
  auto coeff = [&p](unsigned n, unsigned m) {
    return momentum_rate_coefficient(p.well, n, m);
  };
  return symmetric_pair_series(p, t, coeff);
}

double force_expectation(const WavePacket& p, double t) {
  auto coeff = [&p](unsigned n, unsigned m) {
    return force_matrix_element(p.well, n, m);
  };
  return symmetric_pair_series(p, t, coeff);
}

double ehrenfest_residual(const WavePacket& p, double t) {
  return momentum_rate(p, t) + force_expectation(p, t);
}

double grid_momentum(const WavePacket& p, double t, double h) {
  const double L = p.well.L;
  if (!(h > 0.0) || !(h <= L / 100.0))
    throw std::invalid_argument("grid spacing too coarse: need 0 < h <= L/100");
  const auto M = static_cast<std::size_t>(std::llround(L / h));
  const double dx = L / static_cast<double>(M);
  std::vector<std::complex<double>> psi(M + 1);
  for (std::size_t j = 0; j <= M; ++j)
    psi[j] = amplitude(p, static_cast<double>(j) * dx, t);
  std::complex<double> total{0.0, 0.0};
  for (std::size_t j = 0; j <= M; ++j) {
    std::complex<double> d;
    if (j == 0)
      d = (psi[1] - psi[0]) / dx;
    else if (j == M)
      d = (psi[M] - psi[M - 1]) / dx;
    else
      d = (psi[j + 1] - psi[j - 1]) / (2.0 * dx);
    const std::complex<double> g = std::conj(psi[j]) * d;
    total += (j == 0 || j == M) ? 0.5 * g : g;
  }
  total *= dx;
  return (std::complex<double>(0.0, -p.well.hbar) * total).real();
}

double beat_period(const WellConfig& cfg) {
  return 2.0 * kPi * cfg.hbar /
         (isw::eigenenergy(cfg, 2) - isw::eigenenergy(cfg, 1));
}

GridState sample_grid(const WavePacket& p, double t, double h, double x_lo,
                      double x_hi) {
  if (x_hi < x_lo) x_hi = p.well.L;  // default window [0, L]
  if (x_lo > 0.0 || x_hi < p.well.L)
    throw std::invalid_argument("grid window must cover [0, L]");
  if (!(h > 0.0)) throw std::invalid_argument("grid spacing must be positive");
  const auto M = static_cast<std::size_t>(
      std::max<long long>(1, std::llround((x_hi - x_lo) / h)));
  const double dx = (x_hi - x_lo) / static_cast<double>(M);
  GridState g;
  g.points.resize(M + 1);
  g.values.resize(M + 1);
  for (std::size_t j = 0; j <= M; ++j) {
    g.points[j] = x_lo + static_cast<double>(j) * dx;
    g.values[j] = amplitude(p, g.points[j], t);
  }
  return g;
}

double grid_norm(const GridState& g) {
  double total = 0.0;
  const std::size_t M = g.points.size() - 1;
  for (std::size_t j = 0; j <= M; ++j) {
    const double v = std::norm(g.values[j]);
    total += (j == 0 || j == M) ? 0.5 * v : v;
  }
  return total * (g.points.back() - g.points.front()) / static_cast<double>(M);
}

std::vector<double> linspace(double a, double b, unsigned samples) {
  std::vector<double> xs;
  if (samples == 0) return xs;
  xs.reserve(samples);
  if (samples == 1) {
    xs.push_back(a);
    return xs;
  }
  for (unsigned i = 0; i < samples; ++i)
    xs.push_back(a + (b - a) * static_cast<double>(i) /
                         static_cast<double>(samples - 1));
  return xs;
}

EhrenfestReport ehrenfest_report(const WavePacket& p,
                                 const std::vector<double>& times,
                                 bool with_grid_oracle, double h) {
  EhrenfestReport r;
  r.times = times;
  for (double t : times) {
    const double rate = momentum_rate(p, t);
    const double dvdx = force_expectation(p, t);
    r.momentum.push_back(momentum_expectation(p, t));
    r.momentum_rate.push_back(rate);
    r.force.push_back(-dvdx);
    r.residual.push_back(rate + dvdx);
    if (with_grid_oracle) r.grid_momentum.push_back(grid_momentum(p, t, h));
  }
  return r;
}

}  // namespace wellspring::packets
