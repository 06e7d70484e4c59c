#pragma once

#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "pwcalc/multi_index.hpp"

namespace pwcalc {

/// One atom of a point-mass measure: polar radii t in R_+^d and a weight.
struct PointMass {
  Eigen::VectorXd radii;
  double weight = 0.0;
};

enum class DensityForm { DiscCharacteristic, AnnulusCharacteristic, PowerWeight };

/// Per-axis 1D radial density of nu_0 on [inner, outer]. The polar Jacobian
/// r is already inside nu_0, so a disc of radius R against Lebesgue measure
/// on C has d nu_0 = r dr on [0, R].
struct AxisDensity {
  DensityForm form = DensityForm::DiscCharacteristic;
  double inner = 0.0;
  double outer = 1.0;
  double exponent = 0.0;  // PowerWeight only: density r^p against r dr

  /// Radius of a torus guaranteed inside the support, used for the
  /// Estvarsigma-style lower bound. Strictly below outer so that the
  /// measure keeps positive mass above it.
  double torus_radius() const;
  /// log of the density of nu_0 against dr at radius r (Jacobian included).
  double log_density(double r) const;
};

/// Finite combination of derivatives of point masses on (0, inf); d = 1 only.
struct DistributionalTerm {
  double radius = 1.0;
  int order = 0;     // derivative order m, 0 <= m <= 6
  double coeff = 0.0;
};

/// Radial measure nu in R*_{t1,t2}(C^d), stored through its radial part
/// nu_0 (d nu = d theta d nu_0(r)). Immutable after construction.
class RadialMeasure {
 public:
  using PointMasses = std::vector<PointMass>;
  using ProductDensity = std::vector<AxisDensity>;
  using DistributionalPoint = std::vector<DistributionalTerm>;
  using Body = std::variant<PointMasses, ProductDensity, DistributionalPoint>;

  RadialMeasure(int dim, Body body);

  int dim() const { return dim_; }
  const Body& body() const { return body_; }
  bool is_distributional() const {
    return std::holds_alternative<DistributionalPoint>(body_);
  }

  /// Support radii per Def 2.1: torus at t1 inside, polydisc t2 outside.
  const Eigen::VectorXd& t1() const { return t1_; }
  const Eigen::VectorXd& t2() const { return t2_; }

  std::string to_json() const;
  static RadialMeasure from_json(const std::string& text);

 private:
  int dim_;
  Body body_;
  Eigen::VectorXd t1_, t2_;
};

/// log of the multiplier sequence varsigma_alpha =
/// 2^d int e^{-|r|^2} r^{2 alpha} d nu_0(r), exact for point masses and by
/// per-axis Gauss-Legendre quadrature for densities. Positive measures only.
double log_sigma(const RadialMeasure& nu, const MultiIndex& alpha);

inline double sigma(const RadialMeasure& nu, const MultiIndex& alpha) {
  return std::exp(log_sigma(nu, alpha));
}

/// Multiplier for distributional bodies (d = 1): 2 <nu_0, phi_alpha> with
/// phi_alpha(r) = e^{-r^2} r^{2 alpha + 1}, derivatives taken analytically.
/// May be negative or zero.
double sigma_distributional(const RadialMeasure& nu, const MultiIndex& alpha);

/// Best constants in C1 t1^{2 alpha} e^{-|t2|^2} <= varsigma_alpha
/// <= C2 t2^{2 alpha} over |alpha| <= alpha_max.
struct SigmaBoundsReport {
  double c_lower = 0.0;  // min over alpha of sigma / (t1^{2a} e^{-|t2|^2})
  double c_upper = 0.0;  // max over alpha of sigma / t2^{2a}
  bool ok = false;       // both finite and positive
};

SigmaBoundsReport sigma_bounds_check(const RadialMeasure& nu, int alpha_max);

}  // namespace pwcalc
