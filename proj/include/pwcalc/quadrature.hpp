#pragma once

#include <Eigen/Dense>

namespace pwcalc {

enum class RuleKind { GaussHermite, GaussLegendre, Tensor };

/// One-dimensional quadrature rule. For Gauss-Hermite the weights integrate
/// against e^{-x^2}; log_weights carries log(w_k) so that integrands with an
/// e^{+x^2} factor can be absorbed without under/overflow.
struct QuadratureRule {
  RuleKind kind;
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  Eigen::VectorXd log_weights;
  int order = 0;
};

/// Gauss-Hermite rule of given order, weight e^{-x^2} on (-inf, inf).
/// Exact for polynomials of degree <= 2n-1.
QuadratureRule gauss_hermite(int order);

/// Gauss-Legendre rule of given order on [a, b].
QuadratureRule gauss_legendre(int order, double a, double b);

}  // namespace pwcalc
