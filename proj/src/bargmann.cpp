#include "pwcalc/bargmann.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pwcalc/quadrature.hpp"

namespace pwcalc {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

// Hermite values h_0..h_deg at a scalar point, three-term recurrence.
void hermite_column(int deg, double x, double* out) {
  out[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (deg == 0) return;
  out[1] = std::sqrt(2.0) * x * out[0];
  for (int k = 1; k < deg; ++k)
    out[k + 1] = std::sqrt(2.0 / (k + 1)) * x * out[k] -
                 std::sqrt(static_cast<double>(k) / (k + 1)) * out[k - 1];
}

// Odometer over a tensor index set with per-axis sizes.
bool advance(std::vector<int>& idx, const std::vector<int>& sizes) {
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (++idx[j] < sizes[j]) return true;
    idx[j] = 0;
  }
  return false;
}

}  // namespace

double hermite_eval(const MultiIndex& alpha, const Eigen::VectorXd& x) {
  if (alpha.dim() != x.size())
    throw std::invalid_argument("hermite_eval: dimension mismatch");
  double prod = 1.0;
  std::vector<double> col;
  for (int j = 0; j < alpha.dim(); ++j) {
    col.resize(static_cast<std::size_t>(alpha[j]) + 1);
    hermite_column(alpha[j], x(j), col.data());
    prod *= col.back();
  }
  return prod;
}

namespace {

CoefficientTable hermite_coefficients_once(const RealSampledFunction& f,
                                           int degree, int order) {
  const int d = f.dim;
  const QuadratureRule gh = gauss_hermite(order);
  // Per-node Hermite values and e^{x^2}-compensated weights.
  Eigen::MatrixXd H(order, degree + 1);
  Eigen::VectorXd wmod(order);
  std::vector<double> col(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < order; ++i) {
    hermite_column(degree, gh.nodes(i), col.data());
    for (int k = 0; k <= degree; ++k) H(i, k) = col[static_cast<std::size_t>(k)];
    wmod(i) = gh.log_weights(i) + gh.nodes(i) * gh.nodes(i);
  }

  const std::vector<MultiIndex> indices = indices_up_to(d, degree);
  std::vector<cd> acc(indices.size(), cd(0.0, 0.0));

  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<int> sizes(static_cast<std::size_t>(d), order);
  Eigen::VectorXd x(d);
  do {
    double logw = 0.0;
    for (int j = 0; j < d; ++j) {
      x(j) = gh.nodes(idx[static_cast<std::size_t>(j)]);
      logw += wmod(idx[static_cast<std::size_t>(j)]);
    }
    const cd fw = f.eval(x) * std::exp(logw);
    if (fw == cd(0.0, 0.0)) continue;
    for (std::size_t a = 0; a < indices.size(); ++a) {
      double h = 1.0;
      for (int j = 0; j < d; ++j)
        h *= H(idx[static_cast<std::size_t>(j)], indices[a][j]);
      acc[a] += fw * h;
    }
  } while (advance(idx, sizes));

  CoefficientTable table(d, degree, SeriesKind::HermiteSeries);
  for (std::size_t a = 0; a < indices.size(); ++a) table.set(indices[a], acc[a]);
  return table;
}

}  // namespace

HermiteCoefficients hermite_coefficients(const RealSampledFunction& f,
                                         int degree, int order, double tol) {
  if (order <= 0) order = 2 * degree + 20;
  CoefficientTable coarse = hermite_coefficients_once(f, degree, order);
  CoefficientTable fine = hermite_coefficients_once(f, degree, 2 * order);
  double max_diff = 0.0;
  for (const MultiIndex& alpha : indices_up_to(f.dim, degree)) {
    const cd diff =
        fine.at(alpha).to_complex() - coarse.at(alpha).to_complex();
    max_diff = std::max(max_diff, std::abs(diff));
  }
  return {std::move(fine), max_diff <= 10.0 * tol};
}

namespace {

cd bargmann_once(const RealSampledFunction& f, const Eigen::VectorXcd& z,
                 int order) {
  const int d = f.dim;
  const QuadratureRule gh = gauss_hermite(order);
  // <z,z> is the bilinear (non-conjugated) form.
  cd zz = 0.0;
  for (int j = 0; j < d; ++j) zz += z(j) * z(j);

  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<int> sizes(static_cast<std::size_t>(d), order);
  Eigen::VectorXd y(d);
  cd total = 0.0;
  do {
    double logw = 0.0;
    for (int j = 0; j < d; ++j) {
      y(j) = gh.nodes(idx[static_cast<std::size_t>(j)]);
      logw += gh.log_weights(idx[static_cast<std::size_t>(j)]) +
              0.5 * y(j) * y(j);
    }
    cd expo = -0.5 * zz + cd(logw, 0.0);
    for (int j = 0; j < d; ++j) expo += std::sqrt(2.0) * z(j) * y(j);
    total += std::exp(expo) * f.eval(y);
  } while (advance(idx, sizes));
  return std::pow(kPi, -0.25 * d) * total;
}

}  // namespace

QuadValue bargmann_quadrature(const RealSampledFunction& f,
                              const Eigen::VectorXcd& z, int order,
                              double tol) {
  if (f.dim != z.size())
    throw std::invalid_argument("bargmann_quadrature: dimension mismatch");
  const cd coarse = bargmann_once(f, z, order);
  const cd fine = bargmann_once(f, z, 2 * order);
  const double scale = std::max(1.0, std::abs(fine));
  return {fine, std::abs(fine - coarse) / scale <= 10.0 * tol};
}

namespace {

// Radial node of the tensor polar grid: radii with log nu_0-weight.
struct RadialNode {
  Eigen::VectorXd r;
  double log_w;
};

std::vector<RadialNode> radial_nodes(const RadialMeasure& nu, int gl_order) {
  const int d = nu.dim();
  std::vector<RadialNode> nodes;
  if (const auto* atoms =
          std::get_if<RadialMeasure::PointMasses>(&nu.body())) {
    for (const PointMass& a : *atoms)
      nodes.push_back({a.radii, std::log(a.weight)});
    return nodes;
  }
  const auto& axes = std::get<RadialMeasure::ProductDensity>(nu.body());
  std::vector<QuadratureRule> rules;
  for (const AxisDensity& ax : axes)
    rules.push_back(gauss_legendre(gl_order, ax.inner, ax.outer));
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<int> sizes(static_cast<std::size_t>(d), gl_order);
  do {
    RadialNode node;
    node.r.resize(d);
    node.log_w = 0.0;
    for (int j = 0; j < d; ++j) {
      const int i = idx[static_cast<std::size_t>(j)];
      node.r(j) = rules[static_cast<std::size_t>(j)].nodes(i);
      node.log_w += rules[static_cast<std::size_t>(j)].log_weights(i) +
                    axes[static_cast<std::size_t>(j)].log_density(node.r(j));
    }
    nodes.push_back(std::move(node));
  } while (advance(idx, sizes));
  return nodes;
}

cd pia_once(const ComplexSampledFunction& F, const RadialMeasure& nu,
            const Eigen::VectorXcd& z, int angular, int radial) {
  const int d = nu.dim();
  const double dtheta = 2.0 * kPi / angular;
  const std::vector<RadialNode> rnodes = radial_nodes(nu, radial);

  cd total = 0.0;
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<int> sizes(static_cast<std::size_t>(d), angular);
  Eigen::VectorXcd w(d);
  for (const RadialNode& node : rnodes) {
    cd angular_sum = 0.0;
    std::fill(idx.begin(), idx.end(), 0);
    do {
      cd expo = 0.0;
      for (int j = 0; j < d; ++j) {
        const double theta = dtheta * idx[static_cast<std::size_t>(j)];
        w(j) = node.r(j) * std::exp(cd(0.0, theta));
        expo += z(j) * std::conj(w(j));  // (z,w) = <z, conj w>
      }
      angular_sum += F.eval(w) * std::exp(expo);
    } while (advance(idx, sizes));
    total += angular_sum *
             std::exp(node.log_w - node.r.squaredNorm()) *
             std::pow(dtheta, d);
  }
  return std::pow(kPi, -d) * total;
}

}  // namespace

QuadValue pia_quadrature(const ComplexSampledFunction& F,
                         const RadialMeasure& nu, const Eigen::VectorXcd& z,
                         const PiaOptions& opts) {
  if (nu.is_distributional())
    throw std::invalid_argument(
        "pia_quadrature: positive measure bodies only");
  if (z.size() != nu.dim())
    throw std::invalid_argument("pia_quadrature: dimension mismatch");
  const cd value = pia_once(F, nu, z, opts.angular, opts.radial);
  if (!opts.check_convergence) return {value, true};
  const cd fine = pia_once(F, nu, z, 2 * opts.angular, 2 * opts.radial);
  const double scale = std::max(1.0, std::abs(fine));
  return {fine, std::abs(fine - value) / scale <= 10.0 * opts.tol};
}

namespace {

cd a2_once(const ComplexSampledFunction& F, const ComplexSampledFunction& G,
           double R, int radial, int angular) {
  const int d = F.dim;
  const QuadratureRule gl = gauss_legendre(radial, 0.0, R);
  const double dtheta = 2.0 * kPi / angular;

  // Per-axis polar node list: z-value and weight w * r * e^{-r^2} * dtheta.
  std::vector<cd> zs;
  std::vector<double> ws;
  zs.reserve(static_cast<std::size_t>(radial * angular));
  for (int i = 0; i < radial; ++i) {
    const double r = gl.nodes(i);
    const double wr = gl.weights(i) * r * std::exp(-r * r) * dtheta;
    for (int m = 0; m < angular; ++m) {
      zs.push_back(r * std::exp(cd(0.0, dtheta * m)));
      ws.push_back(wr);
    }
  }

  const int per_axis = static_cast<int>(zs.size());
  std::vector<int> idx(static_cast<std::size_t>(d), 0);
  std::vector<int> sizes(static_cast<std::size_t>(d), per_axis);
  Eigen::VectorXcd z(d);
  cd total = 0.0;
  do {
    double weight = 1.0;
    for (int j = 0; j < d; ++j) {
      const int i = idx[static_cast<std::size_t>(j)];
      z(j) = zs[static_cast<std::size_t>(i)];
      weight *= ws[static_cast<std::size_t>(i)];
    }
    if (weight != 0.0) total += weight * F.eval(z) * std::conj(G.eval(z));
  } while (advance(idx, sizes));
  return std::pow(kPi, -d) * total;
}

}  // namespace

QuadValue a2_inner_quadrature(const ComplexSampledFunction& F,
                              const ComplexSampledFunction& G, double R,
                              const A2Options& opts) {
  if (F.dim != G.dim)
    throw std::invalid_argument("a2_inner_quadrature: dimension mismatch");
  if (R < 8.0)
    throw std::invalid_argument("a2_inner_quadrature: R must be >= 8");
  const cd value = a2_once(F, G, R, opts.radial, opts.angular);
  if (!opts.check_convergence) return {value, true};
  const cd fine = a2_once(F, G, R, 2 * opts.radial, 2 * opts.angular);
  const double scale = std::max(1.0, std::abs(fine));
  return {fine, std::abs(fine - value) / scale <= 10.0 * opts.tol};
}

GrowthExponent radial_growth_exponent(const CoefficientTable& F,
                                      const std::vector<double>& radii) {
  if (F.kind() != SeriesKind::PowerSeries)
    throw std::invalid_argument("radial_growth_exponent: power series only");
  if (radii.size() < 6)
    throw std::invalid_argument("radial_growth_exponent: need >= 6 radii");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 2.0)
      throw std::invalid_argument("radial_growth_exponent: radii must be >= 2");
    if (i > 0 && radii[i] <= radii[i - 1])
      throw std::invalid_argument("radial_growth_exponent: radii must increase");
  }

  constexpr int kAngles = 64;
  const int d = F.dim();
  std::vector<double> log_m(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    double best = -std::numeric_limits<double>::infinity();
    for (int m = 0; m < kAngles; ++m) {
      const double theta = 2.0 * kPi * m / kAngles;
      const cd dir = radii[i] * std::exp(cd(0.0, theta));
      std::vector<cd> z(static_cast<std::size_t>(d), dir);
      best = std::max(best, series_eval(F, z).log_value.log_mag);
    }
    log_m[i] = best;
  }

  GrowthExponent out;
  for (std::size_t i = 0; i < log_m.size(); ++i) {
    if (!(log_m[i] > 0.0)) {
      out.note = "max modulus not exponentially large; log-type growth";
      return out;
    }
    if (i > 0 && log_m[i] <= log_m[i - 1]) {
      out.note = "max modulus not monotone in R";
      return out;
    }
  }

  Eigen::MatrixXd X(static_cast<Eigen::Index>(radii.size()), 2);
  Eigen::VectorXd y(static_cast<Eigen::Index>(radii.size()));
  for (std::size_t i = 0; i < radii.size(); ++i) {
    X(static_cast<Eigen::Index>(i), 0) = 1.0;
    X(static_cast<Eigen::Index>(i), 1) = std::log(radii[i]);
    y(static_cast<Eigen::Index>(i)) = std::log(log_m[i]);
  }
  Eigen::Vector2d coef = X.colPivHouseholderQr().solve(y);
  out.beta = coef(1);
  out.ok = true;
  return out;
}

Eigen::VectorXd pilipovic_default_grid(int degree) {
  const double L = std::sqrt(2.0 * std::max(degree, 1)) + 6.0;
  // Odd count so x = 0 (the h_0 peak) is a grid point.
  return Eigen::VectorXd::LinSpaced(401, -L, L);
}

double pilipovic_seminorm(const CoefficientTable& f, double r, double s,
                          int n_max, const Eigen::VectorXd& grid) {
  if (f.kind() != SeriesKind::HermiteSeries)
    throw std::invalid_argument("pilipovic_seminorm: Hermite series only");
  if (!(r > 0.0)) throw std::invalid_argument("pilipovic_seminorm: r > 0");
  const int d = f.dim();
  if (f.empty()) return 0.0;

  // Hermite values per grid point and per axis order, shared across N.
  const int deg = f.degree();
  const int g = static_cast<int>(grid.size());
  Eigen::MatrixXd H(g, deg + 1);
  {
    std::vector<double> col(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i < g; ++i) {
      hermite_column(deg, grid(i), col.data());
      for (int k = 0; k <= deg; ++k) H(i, k) = col[static_cast<std::size_t>(k)];
    }
  }

  double best_log = -std::numeric_limits<double>::infinity();
  for (int N = 0; N <= n_max; ++N) {
    // sup over the tensor grid of |sum c(alpha) (2|alpha|+d)^N h_alpha(x)|,
    // evaluated relative to the largest scaled coefficient magnitude.
    double scale = -std::numeric_limits<double>::infinity();
    for (const auto& [alpha, c] : f.entries())
      scale = std::max(scale,
                       c.log_mag + N * std::log(2.0 * alpha.degree() + d));
    double sup = 0.0;
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    std::vector<int> sizes(static_cast<std::size_t>(d), g);
    do {
      cd val = 0.0;
      for (const auto& [alpha, c] : f.entries()) {
        const double lm =
            c.log_mag + N * std::log(2.0 * alpha.degree() + d) - scale;
        double h = 1.0;
        for (int j = 0; j < d; ++j)
          h *= H(idx[static_cast<std::size_t>(j)], alpha[j]);
        val += std::exp(cd(lm, c.phase)) * h;
      }
      sup = std::max(sup, std::abs(val));
    } while (advance(idx, sizes));
    if (sup <= 0.0) continue;
    const double log_term = scale + std::log(sup) - N * std::log(r) -
                            2.0 * s * std::lgamma(N + 1.0);
    best_log = std::max(best_log, log_term);
  }
  return std::exp(best_log);
}

RealSampledFunction hermite_sum_function(const CoefficientTable& f) {
  if (f.kind() != SeriesKind::HermiteSeries)
    throw std::invalid_argument("hermite_sum_function: Hermite series only");
  RealSampledFunction fn;
  fn.dim = f.dim();
  fn.eval = [f](const Eigen::VectorXd& x) {
    cd total = 0.0;
    for (const auto& [alpha, c] : f.entries())
      total += c.to_complex() * hermite_eval(alpha, x);
    return total;
  };
  return fn;
}

ComplexSampledFunction power_series_function(const CoefficientTable& F) {
  if (F.kind() != SeriesKind::PowerSeries)
    throw std::invalid_argument("power_series_function: power series only");
  ComplexSampledFunction fn;
  fn.dim = F.dim();
  fn.eval = [F](const Eigen::VectorXcd& z) {
    std::vector<cd> zv(z.data(), z.data() + z.size());
    return series_eval(F, zv).value();
  };
  return fn;
}

}  // namespace pwcalc
