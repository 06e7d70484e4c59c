#pragma once

#include <Eigen/Dense>

#include "pwcalc/bargmann.hpp"
#include "pwcalc/coefficient_table.hpp"

namespace pwcalc {

/// Open polydisc D_r(0) in C^d, identified with
/// {(y, eta) in R^{2d} : y_j^2 + eta_j^2 < r_j^2}.
struct PolydiscDomain {
  int dim = 1;
  Eigen::VectorXd radii;

  PolydiscDomain(int d, Eigen::VectorXd r);
};

struct ThetaOptions {
  int radial = 48;   // Gauss-Legendre order per axis
  int angular = 64;  // trapezoid points per axis
  double tol = 1e-8;
  bool check_convergence = true;
};

/// Theta_{F,r}(x) = iint_{D_r(0)} F(y + i eta)
///   e^{-(|x-y|^2/2 + |y|^2 + |eta|^2)} e^{i(<y,eta>/2 - <x,eta>)} dy deta,
/// by per-axis polar quadrature (Gauss-Legendre radial, trapezoid angular).
QuadValue theta_eval(const CoefficientTable& F, const PolydiscDomain& D,
                     const Eigen::VectorXd& x, const ThetaOptions& opts = {});

struct BargmannSideData {
  // w -> (16 pi^5)^{d/4} e^{-3|w|^2/2} F(sqrt(2) w)
  ComplexSampledFunction density;
  PolydiscDomain support;  // radii r / sqrt(2)
};

/// Rescaled kernel-side density (16 pi^5)^{d/4} e^{-3|w|^2/2} F(sqrt2 w)
/// and its support polydisc under the sqrt2 substitution.
BargmannSideData scale_to_bargmann_side(const CoefficientTable& F,
                                        const PolydiscDomain& D);

struct GrochOptions {
  int theta_radial = 48;
  int theta_angular = 64;
  int hermite_order = 0;  // 0 = automatic (2 * degree + 20)
  int pia_radial = 32;
  int pia_angular = 48;
  int a2_radial = 64;
  int a2_angular = 48;
  double projection_radius = 8.0;

  GrochOptions doubled() const;
};

struct GrochReport {
  double discrepancy = 0.0;  // max |cA - cB| / max |cB| over |alpha| <= N
  bool converged = true;     // side-A Hermite quadrature flag
  Eigen::VectorXcd side_a;   // power-series coefficients from Theta
  Eigen::VectorXcd side_b;   // projection coefficients from the kernel side
};

/// Cross-oracle check: the power-series coefficients of the Bargmann
/// transform of x -> theta_eval(F, D, x) (side A) against the coefficient
/// projections of the kernel integral of the rescaled density over the
/// r/sqrt2 disc (side B), over |alpha| <= N. d = 1 only.
GrochReport groch_consistency_check(const CoefficientTable& F,
                                    const PolydiscDomain& D, int N,
                                    const GrochOptions& opts = {});

}  // namespace pwcalc
