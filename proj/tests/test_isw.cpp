#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "wellspring/isw.hpp"

using namespace wellspring;
using distcalc::DistExpr;
using distcalc::DistTerm;
using distcalc::SmoothFn;
using distcalc::Trig;
using isw::WellConfig;
using wellspring::testing::close;

namespace {

constexpr double kPi = std::numbers::pi;

const WellConfig kUnit{};                  // L = m = hbar = 1
const WellConfig kOdd{2.3, 0.5, 1.0};      // stress non-unit scales

double h2m(const WellConfig& c) { return c.hbar * c.hbar / (2.0 * c.m); }

}  // namespace

TEST_CASE("configuration validation names the offending field") {
  CHECK_NOTHROW(isw::validate(kUnit));
  for (const WellConfig bad : {WellConfig{-1.0, 1.0, 1.0},
                               WellConfig{1.0, 0.0, 1.0},
                               WellConfig{1.0, 1.0, -2.0}}) {
    CHECK_THROWS_AS(isw::validate(bad), std::invalid_argument);
  }
}

TEST_CASE("wavenumbers and energies follow the mode ladder") {
  CHECK(isw::wavenumber(kUnit, 1) == kPi);
  CHECK(isw::eigenenergy(kUnit, 1) == kPi * kPi / 2.0);
  CHECK_THROWS_AS(isw::eigenenergy(kUnit, 0), std::invalid_argument);
  for (unsigned n = 1; n <= 12; ++n) {
    const double ratio = isw::eigenenergy(kOdd, n) / isw::eigenenergy(kOdd, 1);
    CHECK(close(ratio, double(n) * double(n), 1e-13));
  }
}

TEST_CASE("eigenstates vanish outside and peak inside the box") {
  const auto st = isw::eigenstate(kUnit, 1);
  CHECK(st.n == 1);
  CHECK(st.k == kPi);
  CHECK(close(distcalc::evaluate_regular(st.expr, 0.5), std::sqrt(2.0),
              1e-12));
  CHECK(distcalc::evaluate_regular(st.expr, -0.5) == 0.0);
  CHECK(distcalc::evaluate_regular(st.expr, 1.5) == 0.0);
}

TEST_CASE("eigenstates are orthonormal") {
  for (const WellConfig& cfg : {kUnit, kOdd}) {
    for (unsigned n = 1; n <= 10; ++n) {
      for (unsigned m = n; m <= 10; ++m) {
        const auto a = isw::eigenstate(cfg, n);
        const auto b = isw::eigenstate(cfg, m);
        const double overlap = distcalc::integrate(
            a.expr * b.expr, -0.5 * cfg.L, 1.5 * cfg.L);
        CHECK(close(overlap, n == m ? 1.0 : 0.0, 1e-12));
      }
    }
  }
}

TEST_CASE("the wall operator turns an eigenstate into pure point masses") {
  for (const WellConfig& cfg : {kUnit, kOdd}) {
    const isw::BoundaryPotential v(cfg);
    for (unsigned n = 1; n <= 20; ++n) {
      const auto st = isw::eigenstate(cfg, n);
      const DistExpr out = isw::apply_well_potential(v, st.expr);
      // structurally singular: no delta-free term survives
      for (const auto& t : out.terms()) CHECK(t.delta().has_value());
      const double amp = std::sqrt(2.0 / cfg.L) * st.k;
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK(close(distcalc::delta_coefficient(out, 0.0, 0), h2m(cfg) * amp,
                  1e-12));
      CHECK(close(distcalc::delta_coefficient(out, cfg.L, 0),
                  -h2m(cfg) * amp * sign, 1e-12));
    }
  }
}

TEST_CASE("the wall operator rejects states that do not vanish at the walls") {
  const isw::BoundaryPotential v(kUnit);
  const DistExpr bad(DistTerm(SmoothFn::harmonic(1.0, 0, Trig::Cos, 1, 1.0),
                              {distcalc::rising(0.0), distcalc::falling(1.0)}));
  CHECK_THROWS_AS(v.apply(bad), std::domain_error);
  const DistExpr shifted(DistTerm(
      SmoothFn::constant(1.0) + SmoothFn::harmonic(1.0, 0, Trig::Sin, 1, 1.0),
      {distcalc::rising(0.0), distcalc::falling(1.0)}));
  CHECK_THROWS_AS(v.apply(shifted), std::domain_error);
}

TEST_CASE("eigenpairs solve the eigenvalue equation identically") {
  for (const WellConfig& cfg : {kUnit, kOdd}) {
    for (unsigned n = 1; n <= 20; ++n) {
      const auto st = isw::eigenstate(cfg, n);
      const DistExpr res = isw::tise_residual(cfg, st.expr, st.energy);
      CHECK(distcalc::max_abs_coefficient(res) <= 1e-12);
    }
  }
}

TEST_CASE("a wrong energy leaves exactly the expected defect") {
  const auto s1 = isw::eigenstate(kUnit, 1);
  const auto s2 = isw::eigenstate(kUnit, 2);
  const DistExpr res = isw::tise_residual(kUnit, s1.expr, s2.energy);
  CHECK(distcalc::equivalent(res, s1.expr * (s1.energy - s2.energy), 1e-12));
}

TEST_CASE("a two-mode superposition off one eigenvalue leaves the other mode") {
  const auto s1 = isw::eigenstate(kUnit, 1);
  const auto s2 = isw::eigenstate(kUnit, 2);
  const double r = 1.0 / std::sqrt(2.0);
  const DistExpr mix = (s1.expr + s2.expr) * r;
  const DistExpr res = isw::tise_residual(kUnit, mix, s1.energy);
  CHECK(distcalc::equivalent(res, s2.expr * ((s2.energy - s1.energy) * r),
                             1e-12));
}

TEST_CASE("second derivative of an eigenstate agrees with the built form") {
  for (const WellConfig& cfg : {kUnit, kOdd}) {
    for (unsigned n : {1u, 3u, 8u}) {
      const auto st = isw::eigenstate(cfg, n);
      const DistExpr dd = distcalc::differentiate(
          distcalc::differentiate(st.expr));
      const double amp = std::sqrt(2.0 / cfg.L) * st.k;
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      const DistExpr hand = st.expr * (-(st.k * st.k)) +
                            DistExpr::delta(amp, 0.0) +
                            DistExpr::delta(-amp * sign, cfg.L);
      CHECK(distcalc::equivalent(dd, hand, 1e-12));
    }
  }
}

TEST_CASE("derivative jumps at the walls come out the same both ways") {
  for (const WellConfig& cfg : {kUnit, kOdd}) {
    for (unsigned n = 1; n <= 20; ++n) {
      const auto st = isw::eigenstate(cfg, n);
      const double amp = std::sqrt(2.0 / cfg.L) * st.k;
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      for (const auto method :
           {isw::JumpMethod::Integral, isw::JumpMethod::OneSided}) {
        CHECK(close(isw::derivative_jump(st, 0.0, method), amp, 1e-12));
        CHECK(close(isw::derivative_jump(st, cfg.L, method), -amp * sign,
                    1e-12));
      }
      CHECK(isw::derivative_jump(st, 0.5 * cfg.L, isw::JumpMethod::OneSided) ==
            0.0);
      CHECK(isw::derivative_jump(st, 0.5 * cfg.L, isw::JumpMethod::Integral) ==
            0.0);
    }
  }
}

TEST_CASE("a step-built confining term leaves no trace inside the box") {
  for (const WellConfig& cfg : {kUnit, kOdd}) {
    const SmoothFn g = SmoothFn::harmonic(std::sqrt(2.0 / cfg.L), 0, Trig::Sin,
                                          1, cfg.L);
    const DistExpr res = isw::naive_potential_residual(cfg, g);
    for (const double f : {0.25, 0.5, 0.75}) {
      CHECK(distcalc::evaluate_regular(res, f * cfg.L) == 0.0);
    }
    for (const double f : {-0.5, 1.25, 1.5, 2.0}) {
      const double x = f * cfg.L;
      CHECK(close(distcalc::evaluate_regular(res, x), g.eval(x), 1e-12));
    }
    // the leftover genuinely survives outside: a half-amplitude witness
    CHECK(std::abs(distcalc::evaluate_regular(res, -0.5 * cfg.L)) >=
          0.5 * std::sqrt(2.0 / cfg.L));
  }
}
