#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "pwcalc/theta.hpp"

#include "oracles.hpp"

using namespace pwcalc;
using cd = std::complex<double>;

namespace {

PolydiscDomain disc(double r) {
  return PolydiscDomain(1, Eigen::VectorXd::Constant(1, r));
}

CoefficientTable constant_one() {
  CoefficientTable F(1, 0, SeriesKind::PowerSeries);
  F.set(MultiIndex{0}, cd(1.0, 0.0));
  return F;
}

Eigen::VectorXd x1(double x) { return Eigen::VectorXd::Constant(1, x); }

}  // namespace

TEST_CASE("theta of the zero series vanishes") {
  CoefficientTable zero(1, 4, SeriesKind::PowerSeries);
  const QuadValue v = theta_eval(zero, disc(1.0), x1(0.7));
  CHECK(v.converged);
  CHECK(std::abs(v.value) == 0.0);
}

TEST_CASE("theta of a constant is even in x") {
  const CoefficientTable one = constant_one();
  const PolydiscDomain D = disc(1.0);
  for (double x : {0.5, 1.0, 2.0}) {
    const QuadValue plus = theta_eval(one, D, x1(x));
    const QuadValue minus = theta_eval(one, D, x1(-x));
    CHECK(plus.converged);
    CHECK(std::abs(plus.value - minus.value) < 1e-12);
    CHECK(std::abs(plus.value.imag()) < 1e-12);
  }
}

TEST_CASE("theta of a constant at the origin against a direct oracle") {
  // Theta_{1,r}(0) = int_0^r rho e^{-3 rho^2/2 - (cos sin residue)} ... ;
  // evaluated independently as a radial adaptive-Simpson integral of a
  // dense trapezoid angular integral.
  const double r = 1.0;
  auto angular = [](double rho) {
    const int M = 512;
    double acc = 0.0;
    for (int m = 0; m < M; ++m) {
      const double th = 2.0 * std::numbers::pi * m / M;
      const double y = rho * std::cos(th), eta = rho * std::sin(th);
      acc += std::exp(-0.5 * y * y - y * y - eta * eta) *
             std::cos(0.5 * y * eta);
    }
    return rho * acc * 2.0 * std::numbers::pi / M;
  };
  const double expect = oracles::adaptive_simpson(angular, 0.0, r, 1e-13);
  const QuadValue v = theta_eval(constant_one(), disc(r), x1(0.0));
  CHECK(v.converged);
  CHECK(std::abs(v.value.real() - expect) < 1e-10);
  CHECK(std::abs(v.value.imag()) < 1e-13);
}

TEST_CASE("theta of a constant grows with the polydisc radius") {
  const CoefficientTable one = constant_one();
  double prev = 0.0;
  for (double r : {0.25, 0.5, 1.0, 2.0}) {
    const QuadValue v = theta_eval(one, disc(r), x1(0.0));
    CHECK(v.value.real() > prev);
    prev = v.value.real();
  }
}

TEST_CASE("theta is linear in the series") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  CoefficientTable F(1, 8, SeriesKind::PowerSeries);
  CoefficientTable G(1, 8, SeriesKind::PowerSeries);
  CoefficientTable H(1, 8, SeriesKind::PowerSeries);
  for (int n = 0; n <= 8; ++n) {
    const cd f(uni(rng), uni(rng)), g(uni(rng), uni(rng));
    F.set(MultiIndex{n}, f);
    G.set(MultiIndex{n}, g);
    H.set(MultiIndex{n}, 1.5 * f - 2.0 * g);
  }
  const PolydiscDomain D = disc(1.0);
  const Eigen::VectorXd x = x1(0.6);
  const cd lhs = theta_eval(H, D, x).value;
  const cd rhs = 1.5 * theta_eval(F, D, x).value -
                 2.0 * theta_eval(G, D, x).value;
  CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("rescaled kernel-side density") {
  const BargmannSideData data = scale_to_bargmann_side(constant_one(), disc(1.0));
  CHECK(data.support.radii(0) == doctest::Approx(1.0 / std::sqrt(2.0)));
  const double amp = std::pow(16.0 * std::pow(std::numbers::pi, 5), 0.25);
  Eigen::VectorXcd w0(1), w1(1);
  w0 << cd(0.0, 0.0);
  w1 << cd(0.4, -0.3);
  CHECK(std::abs(data.density.eval(w0) - cd(amp, 0.0)) < 1e-12);
  CHECK(std::abs(data.density.eval(w1) - amp * std::exp(-1.5 * 0.25)) < 1e-12);

  // For F = e_1 the density is amp e^{-3|w|^2/2} sqrt2 w.
  CoefficientTable e1(1, 1, SeriesKind::PowerSeries);
  e1.set(MultiIndex{1}, cd(1.0, 0.0));
  const BargmannSideData lin = scale_to_bargmann_side(e1, disc(1.0));
  const cd expect =
      amp * std::exp(-1.5 * 0.25) * std::sqrt(2.0) * cd(0.4, -0.3);
  CHECK(std::abs(lin.density.eval(w1) - expect) < 1e-12);

  CoefficientTable zero(1, 2, SeriesKind::PowerSeries);
  const BargmannSideData z = scale_to_bargmann_side(zero, disc(1.0));
  CHECK(std::abs(z.density.eval(w1)) == 0.0);
}

TEST_CASE("cross-oracle consistency of the two synthesis routes") {
  const PolydiscDomain D = disc(1.0);
  for (int a : {0, 1, 2}) {
    CoefficientTable ea(1, a, SeriesKind::PowerSeries);
    ea.set(MultiIndex{a}, cd(1.0, 0.0));
    const GrochReport rep = groch_consistency_check(ea, D, 10);
    CHECK(rep.converged);
    CHECK(rep.discrepancy <= 1e-4);
  }
}

TEST_CASE("cross-oracle discrepancy decreases under refinement") {
  CoefficientTable e1(1, 1, SeriesKind::PowerSeries);
  e1.set(MultiIndex{1}, cd(1.0, 0.0));
  GrochOptions coarse;
  coarse.theta_radial = 10;
  coarse.theta_angular = 12;
  coarse.hermite_order = 24;
  coarse.pia_radial = 6;
  coarse.pia_angular = 10;
  coarse.a2_radial = 24;
  coarse.a2_angular = 16;
  const GrochReport lo = groch_consistency_check(e1, disc(1.0), 8, coarse);
  const GrochReport hi =
      groch_consistency_check(e1, disc(1.0), 8, coarse.doubled());
  CHECK(hi.discrepancy < lo.discrepancy);
  CHECK(hi.discrepancy <= 1e-4);
}

TEST_CASE("contracts") {
  CHECK_THROWS_AS(PolydiscDomain(0, Eigen::VectorXd::Ones(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(PolydiscDomain(1, Eigen::VectorXd::Constant(1, -1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(PolydiscDomain(2, Eigen::VectorXd::Ones(1)),
                  std::invalid_argument);

  CoefficientTable herm(1, 2, SeriesKind::HermiteSeries);
  herm.set(MultiIndex{0}, cd(1.0, 0.0));
  CHECK_THROWS_AS(theta_eval(herm, disc(1.0), x1(0.0)), std::invalid_argument);
  CHECK_THROWS_AS(scale_to_bargmann_side(herm, disc(1.0)),
                  std::invalid_argument);

  const PolydiscDomain D2(2, Eigen::VectorXd::Ones(2));
  CoefficientTable F2(2, 2, SeriesKind::PowerSeries);
  F2.set(MultiIndex{0, 0}, cd(1.0, 0.0));
  CHECK_THROWS_AS(groch_consistency_check(F2, D2, 4), std::invalid_argument);
  CoefficientTable deep(1, 13, SeriesKind::PowerSeries);
  deep.set(MultiIndex{13}, cd(1.0, 0.0));
  CHECK_THROWS_AS(groch_consistency_check(deep, disc(1.0), 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(groch_consistency_check(constant_one(), disc(1.0), 21),
                  std::invalid_argument);
}
