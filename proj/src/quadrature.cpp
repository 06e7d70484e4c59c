#include "pwcalc/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace pwcalc {

namespace {

// Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
// matrix, weights are mu0 * (first eigenvector component)^2.
QuadratureRule golub_welsch(RuleKind kind, const Eigen::VectorXd& diag,
                            const Eigen::VectorXd& subdiag, double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag,
                                Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("golub_welsch: eigensolver failed");
  QuadratureRule rule;
  rule.kind = kind;
  rule.order = n;
  rule.nodes = solver.eigenvalues();
  rule.weights = mu0 * solver.eigenvectors().row(0).array().square();
  rule.log_weights = rule.weights.array().log();
  return rule;
}

}  // namespace

QuadratureRule gauss_hermite(int order) {
  if (order < 1) throw std::invalid_argument("gauss_hermite: order < 1");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1);
  for (int k = 1; k < order; ++k) sub(k - 1) = std::sqrt(k / 2.0);
  QuadratureRule rule = golub_welsch(RuleKind::GaussHermite, diag, sub,
                                     std::sqrt(std::numbers::pi));
  // Eigenvector-based weights bottom out near eps^2 in the tails, which is
  // fatal once an integrand carries an e^{+x^2/2} factor. Recompute from
  // the Christoffel identity 1/w_i = sum_k p_k(x_i)^2 using the bounded
  // Hermite functions h_k = p_k e^{-x^2/2}: log w_i = -x_i^2 - log sum h_k^2.
  for (int i = 0; i < order; ++i) {
    const double x = rule.nodes(i);
    double h0 = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    double sum = h0 * h0;
    double h1 = std::sqrt(2.0) * x * h0;
    for (int k = 1; k < order; ++k) {
      sum += h1 * h1;
      const double h2 = std::sqrt(2.0 / (k + 1)) * x * h1 -
                        std::sqrt(static_cast<double>(k) / (k + 1)) * h0;
      h0 = h1;
      h1 = h2;
    }
    rule.log_weights(i) = -x * x - std::log(sum);
    rule.weights(i) = std::exp(rule.log_weights(i));
  }
  return rule;
}

QuadratureRule gauss_legendre(int order, double a, double b) {
  if (order < 1) throw std::invalid_argument("gauss_legendre: order < 1");
  if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
  Eigen::VectorXd sub(order - 1);
  for (int k = 1; k < order; ++k)
    sub(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  QuadratureRule rule = golub_welsch(RuleKind::GaussLegendre, diag, sub, 2.0);
  // Affine map [-1,1] -> [a,b].
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  rule.nodes = (rule.nodes.array() * half + mid).matrix();
  rule.weights *= half;
  rule.log_weights = rule.weights.array().log();
  return rule;
}

}  // namespace pwcalc
