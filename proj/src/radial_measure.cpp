#include "pwcalc/radial_measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "pwcalc/quadrature.hpp"

namespace pwcalc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double logsumexp(const std::vector<double>& xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (std::isinf(m) && m < 0) return kNegInf;
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

}  // namespace

double AxisDensity::torus_radius() const {
  if (inner > 0.0) return inner;
  return 0.5 * outer;
}

double AxisDensity::log_density(double r) const {
  if (r <= 0.0) return kNegInf;
  switch (form) {
    case DensityForm::DiscCharacteristic:
    case DensityForm::AnnulusCharacteristic:
      return std::log(r);
    case DensityForm::PowerWeight:
      return (exponent + 1.0) * std::log(r);
  }
  return kNegInf;
}

RadialMeasure::RadialMeasure(int dim, Body body)
    : dim_(dim), body_(std::move(body)) {
  if (dim < 1 || dim > kMaxDim)
    throw std::invalid_argument("RadialMeasure: dim must be in [1,4]");
  t1_ = Eigen::VectorXd::Zero(dim);
  t2_ = Eigen::VectorXd::Zero(dim);

  if (const auto* atoms = std::get_if<PointMasses>(&body_)) {
    if (atoms->empty())
      throw std::invalid_argument("RadialMeasure: no atoms");
    t1_.setConstant(std::numeric_limits<double>::infinity());
    for (const PointMass& a : *atoms) {
      if (a.radii.size() != dim)
        throw std::invalid_argument("RadialMeasure: atom dimension mismatch");
      if (!(a.weight > 0.0))
        throw std::invalid_argument("RadialMeasure: atom weight must be > 0");
      for (int j = 0; j < dim; ++j) {
        if (!(a.radii(j) > 0.0))
          throw std::invalid_argument("RadialMeasure: atom radii must be > 0");
        t1_(j) = std::min(t1_(j), a.radii(j));
        t2_(j) = std::max(t2_(j), a.radii(j));
      }
    }
  } else if (const auto* axes = std::get_if<ProductDensity>(&body_)) {
    if (static_cast<int>(axes->size()) != dim)
      throw std::invalid_argument("RadialMeasure: need one density per axis");
    for (int j = 0; j < dim; ++j) {
      const AxisDensity& ax = (*axes)[static_cast<std::size_t>(j)];
      if (!(ax.outer > 0.0) || ax.inner < 0.0 || !(ax.inner < ax.outer))
        throw std::invalid_argument("RadialMeasure: bad axis radii");
      if (ax.form == DensityForm::DiscCharacteristic && ax.inner != 0.0)
        throw std::invalid_argument("RadialMeasure: disc density starts at 0");
      t1_(j) = ax.torus_radius();
      t2_(j) = ax.outer;
    }
  } else {
    const auto& terms = std::get<DistributionalPoint>(body_);
    if (dim != 1)
      throw std::invalid_argument("RadialMeasure: distributional body is d=1 only");
    t1_.setConstant(std::numeric_limits<double>::infinity());
    for (const DistributionalTerm& t : terms) {
      if (!(t.radius > 0.0))
        throw std::invalid_argument("RadialMeasure: 0 must not be in the support");
      if (t.order < 0 || t.order > 6)
        throw std::invalid_argument("RadialMeasure: derivative order must be <= 6");
      t1_(0) = std::min(t1_(0), t.radius);
      t2_(0) = std::max(t2_(0), t.radius);
    }
    if (terms.empty()) {
      t1_.setConstant(1.0);
      t2_.setConstant(1.0);
    }
  }
}

double log_sigma(const RadialMeasure& nu, const MultiIndex& alpha) {
  if (alpha.dim() != nu.dim())
    throw std::invalid_argument("log_sigma: dimension mismatch");
  if (nu.is_distributional())
    throw std::invalid_argument(
        "log_sigma: use sigma_distributional for distributional bodies");

  const int d = nu.dim();
  if (const auto* atoms = std::get_if<RadialMeasure::PointMasses>(&nu.body())) {
    std::vector<double> terms;
    terms.reserve(atoms->size());
    for (const PointMass& a : *atoms) {
      double t = std::log(a.weight) - a.radii.squaredNorm();
      for (int j = 0; j < d; ++j)
        if (alpha[j] > 0) t += 2.0 * alpha[j] * std::log(a.radii(j));
      terms.push_back(t);
    }
    return d * std::log(2.0) + logsumexp(terms);
  }

  const auto& axes = std::get<RadialMeasure::ProductDensity>(nu.body());
  double total = 0.0;
  for (int j = 0; j < d; ++j) {
    const AxisDensity& ax = axes[static_cast<std::size_t>(j)];
    const int n_quad = std::max(64, alpha[j] + 24);
    const QuadratureRule gl = gauss_legendre(n_quad, ax.inner, ax.outer);
    std::vector<double> terms(static_cast<std::size_t>(gl.order));
    for (int i = 0; i < gl.order; ++i) {
      const double r = gl.nodes(i);
      double t = gl.log_weights(i) + ax.log_density(r) - r * r;
      if (alpha[j] > 0) t += 2.0 * alpha[j] * std::log(r);
      terms[static_cast<std::size_t>(i)] = t;
    }
    total += std::log(2.0) + logsumexp(terms);
  }
  return total;
}

namespace {

// phi(r) = p(r) e^{-r^2} with p a polynomial; returns the m-th derivative
// evaluated at t, via the recurrence p -> p' - 2 r p.
double gaussian_poly_derivative(std::vector<double> p, int m, double t) {
  for (int k = 0; k < m; ++k) {
    std::vector<double> q(p.size() + 1, 0.0);
    for (std::size_t i = 1; i < p.size(); ++i)
      q[i - 1] += static_cast<double>(i) * p[i];
    for (std::size_t i = 0; i < p.size(); ++i) q[i + 1] -= 2.0 * p[i];
    p = std::move(q);
  }
  double value = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) value = value * t + p[i];
  return value * std::exp(-t * t);
}

}  // namespace

double sigma_distributional(const RadialMeasure& nu, const MultiIndex& alpha) {
  if (!nu.is_distributional())
    throw std::invalid_argument("sigma_distributional: measure body required");
  if (alpha.dim() != 1)
    throw std::invalid_argument("sigma_distributional: d = 1 only");
  const auto& terms = std::get<RadialMeasure::DistributionalPoint>(nu.body());
  // phi_alpha(r) = e^{-r^2} r^{2 alpha + 1}
  const int power = 2 * alpha[0] + 1;
  double total = 0.0;
  for (const DistributionalTerm& term : terms) {
    std::vector<double> p(static_cast<std::size_t>(power) + 1, 0.0);
    p.back() = 1.0;
    const double deriv = gaussian_poly_derivative(p, term.order, term.radius);
    const double sign = term.order % 2 == 0 ? 1.0 : -1.0;
    total += term.coeff * sign * deriv;
  }
  return 2.0 * total;
}

SigmaBoundsReport sigma_bounds_check(const RadialMeasure& nu, int alpha_max) {
  if (nu.is_distributional())
    throw std::invalid_argument("sigma_bounds_check: positive measures only");
  const int d = nu.dim();
  const double log_e_t2 = -nu.t2().squaredNorm();
  double log_c_lower = std::numeric_limits<double>::infinity();
  double log_c_upper = kNegInf;
  for (const MultiIndex& alpha : indices_up_to(d, alpha_max)) {
    const double ls = log_sigma(nu, alpha);
    double lo_ref = log_e_t2, up_ref = 0.0;
    for (int j = 0; j < d; ++j) {
      if (alpha[j] > 0) {
        lo_ref += 2.0 * alpha[j] * std::log(nu.t1()(j));
        up_ref += 2.0 * alpha[j] * std::log(nu.t2()(j));
      }
    }
    log_c_lower = std::min(log_c_lower, ls - lo_ref);
    log_c_upper = std::max(log_c_upper, ls - up_ref);
  }
  SigmaBoundsReport report;
  report.c_lower = std::exp(log_c_lower);
  report.c_upper = std::exp(log_c_upper);
  report.ok = std::isfinite(log_c_lower) && std::isfinite(log_c_upper);
  return report;
}

std::string RadialMeasure::to_json() const {
  nlohmann::json j;
  j["dim"] = dim_;
  if (const auto* atoms = std::get_if<PointMasses>(&body_)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const PointMass& a : *atoms) {
      std::vector<double> radii(a.radii.data(), a.radii.data() + a.radii.size());
      arr.push_back({{"radii", radii}, {"weight", a.weight}});
    }
    j["body"] = {{"type", "point-masses"}, {"atoms", arr}};
  } else if (const auto* axes = std::get_if<ProductDensity>(&body_)) {
    nlohmann::json arr = nlohmann::json::array();
    for (const AxisDensity& ax : *axes) {
      nlohmann::json a;
      switch (ax.form) {
        case DensityForm::DiscCharacteristic:
          a = {{"form", "disc-characteristic"}, {"radius", ax.outer}};
          break;
        case DensityForm::AnnulusCharacteristic:
          a = {{"form", "annulus-characteristic"},
               {"inner", ax.inner},
               {"outer", ax.outer}};
          break;
        case DensityForm::PowerWeight:
          a = {{"form", "power-weight"},
               {"inner", ax.inner},
               {"outer", ax.outer},
               {"exponent", ax.exponent}};
          break;
      }
      arr.push_back(a);
    }
    j["body"] = {{"type", "product-density"}, {"axes", arr}};
  } else {
    const auto& terms = std::get<DistributionalPoint>(body_);
    nlohmann::json arr = nlohmann::json::array();
    for (const DistributionalTerm& t : terms)
      arr.push_back(
          {{"radius", t.radius}, {"order", t.order}, {"coeff", t.coeff}});
    j["body"] = {{"type", "distributional-point"}, {"terms", arr}};
  }
  return j.dump(2);
}

RadialMeasure RadialMeasure::from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  const int dim = j.at("dim").get<int>();
  const nlohmann::json& body = j.at("body");
  const std::string type = body.at("type").get<std::string>();
  if (type == "point-masses") {
    PointMasses atoms;
    for (const auto& a : body.at("atoms")) {
      PointMass pm;
      const auto radii = a.at("radii").get<std::vector<double>>();
      pm.radii = Eigen::Map<const Eigen::VectorXd>(
          radii.data(), static_cast<Eigen::Index>(radii.size()));
      pm.weight = a.at("weight").get<double>();
      atoms.push_back(std::move(pm));
    }
    return RadialMeasure(dim, std::move(atoms));
  }
  if (type == "product-density") {
    ProductDensity axes;
    for (const auto& a : body.at("axes")) {
      AxisDensity ax;
      const std::string form = a.at("form").get<std::string>();
      if (form == "disc-characteristic") {
        ax.form = DensityForm::DiscCharacteristic;
        ax.inner = 0.0;
        ax.outer = a.at("radius").get<double>();
      } else if (form == "annulus-characteristic") {
        ax.form = DensityForm::AnnulusCharacteristic;
        ax.inner = a.at("inner").get<double>();
        ax.outer = a.at("outer").get<double>();
      } else if (form == "power-weight") {
        ax.form = DensityForm::PowerWeight;
        ax.inner = a.at("inner").get<double>();
        ax.outer = a.at("outer").get<double>();
        ax.exponent = a.at("exponent").get<double>();
      } else {
        throw std::runtime_error("RadialMeasure: unknown density form '" +
                                 form + "'");
      }
      axes.push_back(ax);
    }
    return RadialMeasure(dim, std::move(axes));
  }
  if (type == "distributional-point") {
    DistributionalPoint terms;
    for (const auto& t : body.at("terms")) {
      DistributionalTerm dt;
      dt.radius = t.at("radius").get<double>();
      dt.order = t.at("order").get<int>();
      dt.coeff = t.at("coeff").get<double>();
      terms.push_back(dt);
    }
    return RadialMeasure(dim, std::move(terms));
  }
  throw std::runtime_error("RadialMeasure: unknown body type '" + type + "'");
}

}  // namespace pwcalc
