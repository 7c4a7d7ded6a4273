#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "wellspring/dist_expr.hpp"

using namespace wellspring::distcalc;
using wellspring::testing::close;
using wellspring::testing::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

DistExpr boxed(SmoothFn f) {
  return DistExpr(DistTerm(std::move(f), {rising(0.0), falling(1.0)}));
}

}  // namespace

TEST_CASE("differentiating a step yields a unit point mass") {
  const DistExpr step(DistTerm(SmoothFn::constant(1.0), {rising(0.0)}));
  const DistExpr d = differentiate(step);
  REQUIRE(d.terms().size() == 1);
  CHECK(delta_coefficient(d, 0.0, 0) == 1.0);
  // and the falling direction flips the sign
  const DistExpr fall(DistTerm(SmoothFn::constant(1.0), {falling(1.0)}));
  CHECK(delta_coefficient(differentiate(fall), 1.0, 0) == -1.0);
}

TEST_CASE("a sine factor kills a point mass at its zero") {
  const DistExpr e(DistTerm(SmoothFn::harmonic(1.0, 0, Trig::Sin, 1, 1.0), {},
                            DeltaFactor{0.0, 0}));
  CHECK(normalize(e).terms().empty());
  CHECK(is_zero(e));
}

TEST_CASE("a cosine factor collapses onto the point mass") {
  const DistExpr e(DistTerm(SmoothFn::harmonic(2.0, 0, Trig::Cos, 3, 1.0), {},
                            DeltaFactor{0.0, 0}));
  const DistExpr n = normalize(e);
  REQUIRE(n.terms().size() == 1);
  CHECK(delta_coefficient(n, 0.0, 0) == 2.0);
  CHECK(n.terms()[0].steps().empty());
}

TEST_CASE("first-order point mass trades a derivative for a sign") {
  // f(x) d1(x): with f(0) = 0 only the -f'(0) d0 part survives.
  const DistExpr e(DistTerm(SmoothFn::harmonic(1.0, 0, Trig::Sin, 1, 1.0), {},
                            DeltaFactor{0.0, 1}));
  const DistExpr n = normalize(e);
  CHECK(delta_coefficient(n, 0.0, 0) == -kPi);
  CHECK(delta_coefficient(n, 0.0, 1) == 0.0);
}

TEST_CASE("a step factor at another point folds to its value") {
  const DistExpr kept(DistTerm(SmoothFn::constant(1.0), {falling(1.0)},
                               DeltaFactor{0.0, 0}));
  CHECK(delta_coefficient(normalize(kept), 0.0, 0) == 1.0);
  const DistExpr dropped(DistTerm(SmoothFn::constant(1.0), {rising(1.0)},
                                  DeltaFactor{0.0, 0}));
  CHECK(normalize(dropped).terms().empty());
}

TEST_CASE("ill-defined products are rejected") {
  CHECK_THROWS_AS(DistTerm(SmoothFn::constant(1.0), {rising(0.0)},
                           DeltaFactor{0.0, 0}),
                  ill_defined_error);
  const DistExpr d = DistExpr::delta(1.0, 0.0);
  CHECK_THROWS_AS(d * d, ill_defined_error);
}

TEST_CASE("empty-support step pairs vanish") {
  const DistExpr e(DistTerm(SmoothFn::constant(1.0),
                            {rising(0.5), falling(0.5)}));
  CHECK(normalize(e).terms().empty());
}

TEST_CASE("terms with identical singular structure merge") {
  const DistExpr e = DistExpr::from_terms(
      {DistTerm(SmoothFn::constant(1.0), {rising(0.0)}),
       DistTerm(SmoothFn::monomial(1.0, 1), {rising(0.0)})});
  const DistExpr n = normalize(e);
  REQUIRE(n.terms().size() == 1);
  CHECK(n.terms()[0].smooth() ==
        SmoothFn::constant(1.0) + SmoothFn::monomial(1.0, 1));
}

TEST_CASE("normalization is idempotent on random expressions") {
  Rng rng(wellspring::seed_from_env() + 10);
  for (int trial = 0; trial < 200; ++trial) {
    const DistExpr e = wellspring::testing::random_expr(rng);
    const DistExpr once = normalize(e);
    CHECK(normalize(once) == once);
  }
}

TEST_CASE("point-mass integration counts strictly interior masses once") {
  const DistExpr d = DistExpr::delta(1.0, 0.0);
  CHECK(integrate(d, -1.0, 1.0) == 1.0);
  CHECK(integrate(d, 0.5, 1.0) == 0.0);
  CHECK_THROWS_AS(integrate(d, 0.0, 1.0), ill_defined_error);
  CHECK_THROWS_AS(integrate(d, -1.0, 0.0), ill_defined_error);
  // higher-order masses integrate to zero
  CHECK(integrate(DistExpr::delta(2.0, 0.5, 1), 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(integrate(d, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("regular integration clips to the step-allowed window") {
  const DistExpr box = boxed(SmoothFn::constant(1.0));
  CHECK(close(integrate(box, -5.0, 0.25), 0.25, 1e-15));
  CHECK(close(integrate(box, 0.5, 5.0), 0.5, 1e-15));
  CHECK(integrate(box, 2.0, 3.0) == 0.0);
  CHECK(close(integrate(box, -1.0, 2.0), 1.0, 1e-15));
}

TEST_CASE("the normalized mode density integrates to one") {
  const double L = 1.0;
  const DistExpr psi = boxed(
      SmoothFn::harmonic(std::sqrt(2.0 / L), 0, Trig::Sin, 1, L));
  CHECK(close(integrate(psi * psi, -0.5, 1.5), 1.0, 1e-12));
}

TEST_CASE("fundamental theorem holds through jumps on random expressions") {
  Rng rng(wellspring::seed_from_env() + 11);
  for (int trial = 0; trial < 150; ++trial) {
    const DistExpr e = wellspring::testing::random_expr(rng, false);
    const double lo = rng.uniform(-1.5, -0.2);
    const double hi = rng.uniform(1.2, 2.5);
    const double lhs = integrate(differentiate(e), lo, hi);
    const double rhs = evaluate_regular(e, hi) - evaluate_regular(e, lo);
    CHECK(close(lhs, rhs, 1e-10));
  }
}

TEST_CASE("differentiation is additive") {
  Rng rng(wellspring::seed_from_env() + 12);
  for (int trial = 0; trial < 100; ++trial) {
    const DistExpr a = wellspring::testing::random_expr(rng);
    const DistExpr b = wellspring::testing::random_expr(rng);
    CHECK(equivalent(differentiate(a + b),
                     normalize(differentiate(a) + differentiate(b)), 1e-12));
  }
}

TEST_CASE("second derivative of a boxed mode exposes the wall masses") {
  const double root2 = std::sqrt(2.0);
  const DistExpr psi = boxed(SmoothFn::harmonic(root2, 0, Trig::Sin, 1, 1.0));
  const DistExpr d1 = differentiate(psi);
  // the boundary masses of the first derivative vanish with the sine
  for (const auto& t : d1.terms()) CHECK(!t.delta());
  const DistExpr d2 = differentiate(d1);
  CHECK(close(delta_coefficient(d2, 0.0, 0), root2 * kPi, 1e-12));
  CHECK(close(delta_coefficient(d2, 1.0, 0), root2 * kPi, 1e-12));
  // interior part is -pi^2 times the mode
  const DistExpr interior =
      d2 - DistExpr::delta(delta_coefficient(d2, 0.0, 0), 0.0) -
      DistExpr::delta(delta_coefficient(d2, 1.0, 0), 1.0);
  CHECK(equivalent(interior, psi * (-kPi * kPi), 1e-12));
}

TEST_CASE("pointwise evaluation respects steps and rejects singular points") {
  const DistExpr e(DistTerm(SmoothFn::monomial(1.0, 1), {rising(0.0)}));
  CHECK(evaluate_regular(e, -0.3) == 0.0);
  CHECK(evaluate_regular(e, 0.7) == 0.7);
  CHECK_THROWS_AS(evaluate_regular(e, 0.0), ill_defined_error);
  const DistExpr d = DistExpr::delta(1.0, 0.5);
  CHECK_THROWS_AS(evaluate_regular(d, 0.5), ill_defined_error);
  CHECK(evaluate_regular(d, 0.25) == 0.0);
}

TEST_CASE("equivalence sees through term arrangement") {
  const DistExpr split = DistExpr::from_terms(
      {DistTerm(SmoothFn::constant(1.0), {rising(0.0)}),
       DistTerm(SmoothFn::monomial(1.0, 1), {rising(0.0)})});
  const DistExpr joined(DistTerm(
      SmoothFn::constant(1.0) + SmoothFn::monomial(1.0, 1), {rising(0.0)}));
  CHECK(equivalent(split, joined, 1e-12));
  CHECK(!equivalent(split, joined + DistExpr::delta(1.0, 0.5), 1e-12));
  CHECK(!equivalent(split, joined * 1.001, 1e-12));
}

TEST_CASE("expression products fold steps and evaluate pointwise") {
  const DistExpr a(DistTerm(SmoothFn::monomial(1.0, 1), {rising(0.0)}));
  const DistExpr b(DistTerm(SmoothFn::constant(2.0), {falling(1.0)}));
  const DistExpr ab = a * b;
  CHECK(evaluate_regular(ab, 0.5) == 1.0);
  CHECK(evaluate_regular(ab, -0.5) == 0.0);
  CHECK(evaluate_regular(ab, 1.5) == 0.0);
  // a smooth factor sweeps into a point mass under multiplication
  const DistExpr c = b * DistExpr::delta(3.0, 0.0);
  CHECK(delta_coefficient(c, 0.0, 0) == 6.0);
}

TEST_CASE("largest coefficient scans regular and singular parts") {
  const DistExpr e = DistExpr::delta(3.0, 0.0) +
                     DistExpr(DistTerm(SmoothFn::constant(2.0), {rising(0.0)}));
  CHECK(max_abs_coefficient(e) == 3.0);
  CHECK(max_abs_coefficient(DistExpr()) == 0.0);
  CHECK(is_zero(DistExpr()));
}

TEST_CASE("rendering is stable for goldens") {
  const DistExpr psi = boxed(
      SmoothFn::harmonic(std::sqrt(2.0), 0, Trig::Sin, 1, 1.0));
  CHECK(pretty(psi) == "1.41421*sin(1*pi*x/L) * H(x)*H(1-x)\n");
  CHECK(pretty(normalize(DistExpr::delta(kPi, 0.0))) ==
        "3.14159 * d0(x-0)\n");
  CHECK(pretty(DistExpr()) == "0\n");
}
