#include "pwcalc/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pwcalc/quadrature.hpp"
#include "pwcalc/radial_measure.hpp"

namespace pwcalc {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

bool advance(std::vector<int>& idx, int size) {
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (++idx[j] < size) return true;
    idx[j] = 0;
  }
  return false;
}

}  // namespace

PolydiscDomain::PolydiscDomain(int d, Eigen::VectorXd r)
    : dim(d), radii(std::move(r)) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("PolydiscDomain: dim must be in [1,4]");
  if (radii.size() != dim)
    throw std::invalid_argument("PolydiscDomain: radii size mismatch");
  if ((radii.array() <= 0.0).any())
    throw std::invalid_argument("PolydiscDomain: radii must be positive");
}

namespace {

// Per-axis polar node: (y, eta) on the disc of radius r with weight
// w_rho * rho * dtheta.
struct PolarNode {
  double y, eta, w;
};

std::vector<std::vector<PolarNode>> polydisc_nodes(const PolydiscDomain& D,
                                                   int radial, int angular) {
  std::vector<std::vector<PolarNode>> axes(static_cast<std::size_t>(D.dim));
  const double dtheta = 2.0 * kPi / angular;
  for (int j = 0; j < D.dim; ++j) {
    const QuadratureRule gl = gauss_legendre(radial, 0.0, D.radii(j));
    auto& list = axes[static_cast<std::size_t>(j)];
    list.reserve(static_cast<std::size_t>(radial * angular));
    for (int i = 0; i < radial; ++i) {
      const double rho = gl.nodes(i);
      const double w = gl.weights(i) * rho * dtheta;
      for (int m = 0; m < angular; ++m) {
        const double theta = dtheta * m;
        list.push_back({rho * std::cos(theta), rho * std::sin(theta), w});
      }
    }
  }
  return axes;
}

cd theta_once(const CoefficientTable& F, const PolydiscDomain& D,
              const Eigen::VectorXd& x, int radial, int angular) {
  const int d = D.dim;
  const auto axes = polydisc_nodes(D, radial, angular);
  const int per_axis = static_cast<int>(axes[0].size());

  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<cd> z(static_cast<std::size_t>(d));
  cd total = 0.0;
  do {
    double weight = 1.0;
    double re = 0.0, im = 0.0;
    for (int j = 0; j < d; ++j) {
      const PolarNode& n =
          axes[static_cast<std::size_t>(j)][static_cast<std::size_t>(
              idx[static_cast<std::size_t>(j)])];
      weight *= n.w;
      const double dy = x(j) - n.y;
      re += -0.5 * dy * dy - n.y * n.y - n.eta * n.eta;
      im += 0.5 * n.y * n.eta - x(j) * n.eta;
      z[static_cast<std::size_t>(j)] = cd(n.y, n.eta);
    }
    total += weight * series_eval(F, z).value() * std::exp(cd(re, im));
  } while (advance(idx, per_axis));
  return total;
}

}  // namespace

QuadValue theta_eval(const CoefficientTable& F, const PolydiscDomain& D,
                     const Eigen::VectorXd& x, const ThetaOptions& opts) {
  if (F.kind() != SeriesKind::PowerSeries)
    throw std::invalid_argument("theta_eval: power series expected");
  if (F.dim() != D.dim || x.size() != D.dim)
    throw std::invalid_argument("theta_eval: dimension mismatch");
  const cd value = theta_once(F, D, x, opts.radial, opts.angular);
  if (!opts.check_convergence) return {value, true};
  const cd fine = theta_once(F, D, x, 2 * opts.radial, 2 * opts.angular);
  const double scale = std::max(1.0, std::abs(fine));
  return {fine, std::abs(fine - value) / scale <= 10.0 * opts.tol};
}

BargmannSideData scale_to_bargmann_side(const CoefficientTable& F,
                                        const PolydiscDomain& D) {
  if (F.kind() != SeriesKind::PowerSeries)
    throw std::invalid_argument("scale_to_bargmann_side: power series expected");
  if (F.dim() != D.dim)
    throw std::invalid_argument("scale_to_bargmann_side: dimension mismatch");
  // Derived by completing the square in the Theta kernel against the
  // Bargmann kernel: the rescaled density carries the constant
  // (16 pi^5)^{d/4} and a residual Gaussian e^{-3|w|^2/2} on top of the
  // sqrt2 substitution. Validated end to end by groch_consistency_check.
  const double amp = std::pow(16.0 * std::pow(kPi, 5), 0.25 * D.dim);
  ComplexSampledFunction density;
  density.dim = D.dim;
  density.eval = [F, amp](const Eigen::VectorXcd& w) {
    std::vector<cd> z(static_cast<std::size_t>(w.size()));
    for (Eigen::Index j = 0; j < w.size(); ++j)
      z[static_cast<std::size_t>(j)] = std::sqrt(2.0) * w(j);
    return amp * std::exp(-1.5 * w.squaredNorm()) *
           series_eval(F, z).value();
  };
  return {std::move(density),
          PolydiscDomain(D.dim, (D.radii / std::sqrt(2.0)).eval())};
}

GrochOptions GrochOptions::doubled() const {
  GrochOptions out = *this;
  out.theta_radial *= 2;
  out.theta_angular *= 2;
  if (out.hermite_order > 0) out.hermite_order *= 2;
  out.pia_radial *= 2;
  out.pia_angular *= 2;
  out.a2_radial *= 2;
  out.a2_angular *= 2;
  return out;
}

GrochReport groch_consistency_check(const CoefficientTable& F,
                                    const PolydiscDomain& D, int N,
                                    const GrochOptions& opts) {
  if (D.dim != 1)
    throw std::invalid_argument("groch_consistency_check: d = 1 only");
  if (F.degree() > 12 || N > 20)
    throw std::invalid_argument(
        "groch_consistency_check: degree <= 12 and N <= 20 required");

  // Side A: Hermite coefficients of Theta_F, relabeled as a power series.
  ThetaOptions topts;
  topts.radial = opts.theta_radial;
  topts.angular = opts.theta_angular;
  topts.check_convergence = false;
  RealSampledFunction theta_fn;
  theta_fn.dim = 1;
  theta_fn.eval = [&F, &D, &topts](const Eigen::VectorXd& x) {
    return theta_eval(F, D, x, topts).value;
  };
  const HermiteCoefficients hc =
      hermite_coefficients(theta_fn, N, opts.hermite_order);
  const CoefficientTable side_a = bargmann_coeff_map(hc.table);

  // Side B: kernel-side values on the projection grid, then coefficient
  // extraction against e_alpha. The rescaled density is evaluated through
  // a plain Horner form of the degree <= 12 polynomial for speed.
  const BargmannSideData data = scale_to_bargmann_side(F, D);
  std::vector<cd> poly(static_cast<std::size_t>(F.degree()) + 1, cd(0.0, 0.0));
  for (const auto& [alpha, c] : F.entries())
    poly[static_cast<std::size_t>(alpha[0])] =
        c.to_complex() / std::sqrt(std::exp(log_factorial(alpha)));
  const double amp = std::pow(16.0 * std::pow(kPi, 5), 0.25);
  ComplexSampledFunction density;
  density.dim = 1;
  density.eval = [&poly, amp](const Eigen::VectorXcd& w) {
    const cd z = std::sqrt(2.0) * w(0);
    cd acc = 0.0;
    for (std::size_t k = poly.size(); k-- > 0;) acc = acc * z + poly[k];
    return amp * std::exp(-1.5 * std::norm(w(0))) * acc;
  };
  const RadialMeasure nu(
      1, RadialMeasure::ProductDensity{
             {DensityForm::DiscCharacteristic, 0.0, data.support.radii(0)}});

  PiaOptions popts;
  popts.radial = opts.pia_radial;
  popts.angular = opts.pia_angular;
  popts.check_convergence = false;

  const QuadratureRule gl =
      gauss_legendre(opts.a2_radial, 0.0, opts.projection_radius);
  const double dtheta = 2.0 * kPi / opts.a2_angular;
  Eigen::VectorXcd side_b = Eigen::VectorXcd::Zero(N + 1);
  Eigen::VectorXcd zvec(1);
  for (int i = 0; i < opts.a2_radial; ++i) {
    const double r = gl.nodes(i);
    const double wr = gl.weights(i) * r * std::exp(-r * r) * dtheta / kPi;
    for (int m = 0; m < opts.a2_angular; ++m) {
      const cd z = r * std::exp(cd(0.0, dtheta * m));
      zvec(0) = z;
      const cd g = wr * pia_quadrature(density, nu, zvec, popts).value;
      cd zbar_pow = 1.0;  // conj(z)^n
      for (int n = 0; n <= N; ++n) {
        side_b(n) += g * zbar_pow;
        zbar_pow *= std::conj(z);
      }
    }
  }
  for (int n = 0; n <= N; ++n)
    side_b(n) /= std::sqrt(std::exp(std::lgamma(n + 1.0)));

  GrochReport report;
  report.converged = hc.converged;
  report.side_a = Eigen::VectorXcd::Zero(N + 1);
  for (int n = 0; n <= N; ++n)
    report.side_a(n) = side_a.at(MultiIndex({n})).to_complex();
  report.side_b = side_b;
  const double scale = side_b.cwiseAbs().maxCoeff();
  const double diff = (report.side_a - side_b).cwiseAbs().maxCoeff();
  report.discrepancy = scale > 0.0 ? diff / scale : diff;
  return report;
}

}  // namespace pwcalc
