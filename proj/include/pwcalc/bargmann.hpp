#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "pwcalc/coefficient_table.hpp"
#include "pwcalc/radial_measure.hpp"

namespace pwcalc {

/// Black-box sampled function on R^d (deterministic evaluator).
struct RealSampledFunction {
  int dim = 1;
  std::function<std::complex<double>(const Eigen::VectorXd&)> eval;
};

/// Black-box sampled function on C^d.
struct ComplexSampledFunction {
  int dim = 1;
  std::function<std::complex<double>(const Eigen::VectorXcd&)> eval;
};

/// Quadrature result with the order-doubling convergence check: the rule is
/// re-run at twice the order; converged is false when the two values
/// disagree by more than 10x the target tolerance.
struct QuadValue {
  std::complex<double> value;
  bool converged = true;
};

/// Hermite function h_alpha(x) via the stable three-term recurrence per
/// axis, seeded with h_0(x) = pi^{-1/4} e^{-x^2/2}.
double hermite_eval(const MultiIndex& alpha, const Eigen::VectorXd& x);

struct HermiteCoefficients {
  CoefficientTable table;
  bool converged = true;
};

/// c_h(f,alpha) = (f, h_alpha)_{L^2} for |alpha| <= degree, by tensor
/// Gauss-Hermite quadrature of order >= 2*degree + 20.
HermiteCoefficients hermite_coefficients(const RealSampledFunction& f,
                                         int degree, int order = 0,
                                         double tol = 1e-10);

/// Bargmann transform integral
/// (V_d f)(z) = pi^{-d/4} int exp(-(z.z + |y|^2)/2 + sqrt(2) z.y) f(y) dy
/// by tensor Gauss-Hermite quadrature. Certified for |z_j| <= 6.
QuadValue bargmann_quadrature(const RealSampledFunction& f,
                              const Eigen::VectorXcd& z, int order = 96,
                              double tol = 1e-7);

struct PiaOptions {
  int angular = 160;   // trapezoid points per axis (spectral for periodic)
  int radial = 96;     // Gauss-Legendre order per density axis
  double tol = 1e-8;
  bool check_convergence = true;
};

/// Reproducing-kernel multiplier integral
/// (Pi_A (F nu))(z) = pi^{-d} int F(w) e^{(z,w) - |w|^2} d nu(w)
/// by polar tensor quadrature over the radial part of nu. Positive measure
/// bodies only.
QuadValue pia_quadrature(const ComplexSampledFunction& F,
                         const RadialMeasure& nu, const Eigen::VectorXcd& z,
                         const PiaOptions& opts = {});

struct A2Options {
  int radial = 160;
  int angular = 128;
  double tol = 1e-8;
  bool check_convergence = false;  // expensive; on demand
};

/// (F,G)_{A^2} = pi^{-d} int F(z) conj(G(z)) e^{-|z|^2} dlambda(z),
/// truncated to the polydisc |z_j| <= R, polar tensor quadrature.
QuadValue a2_inner_quadrature(const ComplexSampledFunction& F,
                              const ComplexSampledFunction& G, double R,
                              const A2Options& opts = {});

struct GrowthExponent {
  double beta = 0.0;  // slope of log log M(R) against log R
  bool ok = false;
  std::string note;
};

/// Leading radial growth exponent of a truncated power series:
/// M(R) = max over 64 angles of |F(R e^{i theta} * (1,..,1))|, then the
/// least-squares slope of log log M(R) against log R.
GrowthExponent radial_growth_exponent(const CoefficientTable& F,
                                      const std::vector<double>& radii);

/// Default L-infinity grid for pilipovic_seminorm: 400 points on [-L, L],
/// L = sqrt(2*degree) + 6 (the classically allowed region plus margin).
Eigen::VectorXd pilipovic_default_grid(int degree);

/// Harmonic-oscillator seminorm sup_N ||H^N f||_inf / (r^N N!^{2s}),
/// with H h_alpha = (2|alpha| + d) h_alpha; the sup norm is taken on the
/// tensor grid. f is a Hermite-series table.
double pilipovic_seminorm(const CoefficientTable& f, double r, double s,
                          int n_max, const Eigen::VectorXd& grid);

/// Convenience: SampledFunction synthesized from a Hermite-series table.
RealSampledFunction hermite_sum_function(const CoefficientTable& f);

/// Convenience: SampledFunction on C^d from a power-series table.
ComplexSampledFunction power_series_function(const CoefficientTable& F);

}  // namespace pwcalc
