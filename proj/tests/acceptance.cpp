// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "pwcalc/bargmann.hpp"
#include "pwcalc/paley_wiener.hpp"
#include "pwcalc/radial_measure.hpp"
#include "pwcalc/seq_spaces.hpp"
#include "pwcalc/theta.hpp"

#include "oracles.hpp"

using namespace pwcalc;
using cd = std::complex<double>;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s — %s\n", criterion, pass ? "pass" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

RadialMeasure unit_disc() {
  return RadialMeasure(
      1, RadialMeasure::ProductDensity{
             {DensityForm::DiscCharacteristic, 0.0, 1.0}});
}

RadialMeasure unit_atom() {
  return RadialMeasure(
      1, RadialMeasure::PointMasses{{Eigen::VectorXd::Ones(1), 1.0}});
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// 1. Diagonal identity: the coefficient rule against direct kernel
// quadrature on monomials, plus the multiplier sequence against the
// lower-incomplete-gamma oracle.
void criterion_1() {
  const RadialMeasure nu = unit_disc();
  double worst = 0.0;
  PiaOptions popts;
  popts.check_convergence = false;
  for (int n = 0; n <= 20; ++n) {
    CoefficientTable e(1, 20, SeriesKind::PowerSeries);
    e.set(MultiIndex{n}, cd(1.0, 0.0));
    const CoefficientTable image = apply_multiplier(e, nu);
    const ComplexSampledFunction fn = power_series_function(e);
    for (int k = 0; k < 25; ++k) {
      Eigen::VectorXcd z(1);
      z(0) = std::polar(2.0 * (k % 5 + 1) / 5.0, 0.251 * k);
      const cd lhs = series_eval(image, {z(0)}).value();
      const cd rhs = pia_quadrature(fn, nu, z, popts).value;
      worst = std::max(worst,
                       std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  }
  double worst_sigma = 0.0;
  for (int n = 0; n <= 40; ++n)
    worst_sigma = std::max(
        worst_sigma, std::abs(sigma(nu, MultiIndex{n}) -
                              oracles::lower_incomplete_gamma(n + 1.0, 1.0)));
  const bool pass = worst <= 1e-6 && worst_sigma <= 1e-10;
  report(1, pass,
         "diagonal identity max rel " + fmt(worst) + ", sigma vs gamma " +
             fmt(worst_sigma));
}

// 2. Two-sided multiplier bounds on random measures.
void criterion_2() {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uni(0.2, 2.0);
  std::uniform_int_distribution<int> dims(1, 2);
  bool pass = true;
  double worst_slack = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const int d = dims(rng);
    RadialMeasure::Body body;
    if (trial % 2 == 0) {
      RadialMeasure::PointMasses atoms;
      for (int a = 0; a <= trial % 3; ++a) {
        Eigen::VectorXd r(d);
        for (int j = 0; j < d; ++j) r(j) = uni(rng);
        atoms.push_back({r, uni(rng)});
      }
      body = std::move(atoms);
    } else {
      RadialMeasure::ProductDensity axes;
      for (int j = 0; j < d; ++j) {
        const double a = uni(rng);
        axes.push_back({DensityForm::AnnulusCharacteristic, a, a + uni(rng)});
      }
      body = std::move(axes);
    }
    const RadialMeasure nu(d, std::move(body));
    const SigmaBoundsReport rep = sigma_bounds_check(nu, 40);
    pass = pass && rep.ok && rep.c_lower > 0.0 && std::isfinite(rep.c_upper);
    for (const MultiIndex& alpha : indices_up_to(d, 40)) {
      double lo = std::log(rep.c_lower) - nu.t2().squaredNorm();
      double hi = std::log(rep.c_upper);
      for (int j = 0; j < d; ++j) {
        lo += 2.0 * alpha[j] * std::log(nu.t1()(j));
        hi += 2.0 * alpha[j] * std::log(nu.t2()(j));
      }
      const double ls = log_sigma(nu, alpha);
      worst_slack = std::max({worst_slack, lo - ls, ls - hi});
    }
  }
  pass = pass && worst_slack <= 1e-9;
  report(2, pass,
         "20 measures, worst bound violation " + fmt(worst_slack));
}

// 3. Bargmann exactness on Hermite functions plus the isometry check.
void criterion_3() {
  double worst = 0.0;
  bool converged = true;
  for (int n = 0; n <= 15; ++n) {
    RealSampledFunction hn;
    hn.dim = 1;
    hn.eval = [n](const Eigen::VectorXd& x) {
      return cd(hermite_eval(MultiIndex{n}, x), 0.0);
    };
    for (int k = 0; k < 5; ++k) {
      Eigen::VectorXcd z(1);
      z(0) = std::polar(0.4 * (k + 1), 0.9 * k + 0.1);
      const QuadValue v = bargmann_quadrature(hn, z);
      converged = converged && v.converged;
      const cd expect = monomial_eval(MultiIndex{n}, {z(0)}).to_complex();
      worst = std::max(worst, std::abs(v.value - expect) /
                                  std::max(1.0, std::abs(expect)));
    }
  }
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  double worst_iso = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    CoefficientTable f(1, 10, SeriesKind::HermiteSeries);
    CoefficientTable g(1, 10, SeriesKind::HermiteSeries);
    for (int n = 0; n <= 10; ++n) {
      f.set(MultiIndex{n}, cd(uni(rng), uni(rng)));
      g.set(MultiIndex{n}, cd(uni(rng), uni(rng)));
    }
    const QuadValue inner = a2_inner_quadrature(
        power_series_function(bargmann_coeff_map(f)),
        power_series_function(bargmann_coeff_map(g)), 8.0);
    worst_iso = std::max(worst_iso, std::abs(inner.value - pair(f, g)));
  }
  const bool pass = converged && worst <= 1e-7 && worst_iso <= 1e-6;
  report(3, pass,
         "transform max rel " + fmt(worst) + ", isometry max abs " +
             fmt(worst_iso));
}

// 4. Theorem exponent maps across the validity ranges, both measures.
void criterion_4() {
  const std::vector<RadialMeasure> measures{unit_disc(), unit_atom()};
  std::vector<std::pair<std::string, double>> cases;
  for (double s : {1.0 / 6.0, 1.0 / 3.0, 0.5, 1.0, 2.0})
    cases.emplace_back("T2-1", s);
  for (double s : {1.0, 2.0}) cases.emplace_back("T2-2", s);
  for (double s : {1.0 / 6.0, 1.0 / 3.0}) cases.emplace_back("T2-3", s);
  cases.emplace_back("T3-1", 0.5);
  cases.emplace_back("T3-2", 0.5);
  for (double s : {0.125, 0.25, 0.4}) cases.emplace_back("T1-s", s);
  int failures = 0;
  int total = 0;
  for (const auto& [id, order] : cases) {
    for (const RadialMeasure& nu : measures) {
      ++total;
      const VerificationReport rep = verify_theorem(id, order, nu, 60, 1);
      if (!(rep.conclusive && rep.pass)) {
        ++failures;
        std::printf("  %s order=%g: %s\n", id.c_str(), order,
                    rep.details.c_str());
      }
    }
  }
  report(4, failures == 0,
         std::to_string(total - failures) + "/" + std::to_string(total) +
             " mapping cases verified");
}

// 5. Sandwich: normalized log-ratio window maximum non-increasing in N.
void criterion_5() {
  const RadialMeasure nu = unit_disc();
  auto window_max = [&](int N) {
    double m = 0.0;
    for (int n = 20; n <= N; ++n)
      m = std::max(m, std::abs(log_sigma(nu, MultiIndex{n}) -
                               log_factorial(MultiIndex{n})) /
                          (static_cast<double>(n) * n));
    return m;
  };
  const double m40 = window_max(40), m80 = window_max(80),
               m120 = window_max(120);
  const bool pass = m80 <= m40 + 1e-12 && m120 <= m80 + 1e-12;
  report(5, pass,
         "window maxima " + fmt(m40) + " >= " + fmt(m80) + " >= " + fmt(m120));
}

// 6. Theta-chain consistency between the two synthesis routes.
void criterion_6() {
  const PolydiscDomain D(1, Eigen::VectorXd::Ones(1));
  double worst = 0.0;
  bool converged = true;
  for (int a = 0; a <= 2; ++a) {
    CoefficientTable ea(1, a, SeriesKind::PowerSeries);
    ea.set(MultiIndex{a}, cd(1.0, 0.0));
    const GrochReport rep = groch_consistency_check(ea, D, 10);
    converged = converged && rep.converged;
    worst = std::max(worst, rep.discrepancy);
  }
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
  const double lo = groch_consistency_check(e1, D, 8, coarse).discrepancy;
  const double hi =
      groch_consistency_check(e1, D, 8, coarse.doubled()).discrepancy;
  const bool pass = converged && worst <= 1e-4 && hi < lo;
  report(6, pass,
         "max discrepancy " + fmt(worst) + ", refinement " + fmt(lo) +
             " -> " + fmt(hi));
}

// 7. Growth-order identification from radial maxima.
void criterion_7() {
  std::vector<double> radii;
  for (int i = 0; i < 8; ++i) radii.push_back(4.0 + 2.5 * i);
  bool pass = true;
  std::string detail;
  for (double sigma : {1.0, 2.0}) {
    GrowthLaw law{LawFamily::Factorial, LawSide::Decay, sigma, 1.0};
    const GrowthExponent g =
        radial_growth_exponent(generate_synthetic(law, 120, 1, 17), radii);
    const double expect = 2.0 * sigma / (sigma + 1.0);
    pass = pass && g.ok && std::abs(g.beta - expect) <= 0.1 * expect;
    detail += "sigma=" + fmt(sigma) + " beta=" + fmt(g.beta) + " ";
  }
  report(7, pass, detail + "(expected 1 and 4/3)");
}

// 8. Seminorm sanity on Hermite functions.
void criterion_8() {
  CoefficientTable h0(1, 0, SeriesKind::HermiteSeries);
  h0.set(MultiIndex{0}, cd(1.0, 0.0));
  const double v = pilipovic_seminorm(h0, 1.0, 0.5, 10,
                                      pilipovic_default_grid(0));
  const double err = std::abs(v - std::pow(std::numbers::pi, -0.25));
  bool attained = true;
  for (int a : {1, 2, 3}) {
    CoefficientTable ha(1, a, SeriesKind::HermiteSeries);
    ha.set(MultiIndex{a}, cd(1.0, 0.0));
    const Eigen::VectorXd grid = pilipovic_default_grid(a);
    const double r = 2.0 * a + 2.0;  // r > 2 alpha + 1
    const double n0 = pilipovic_seminorm(ha, r, 0.5, 0, grid);
    const double n12 = pilipovic_seminorm(ha, r, 0.5, 12, grid);
    attained = attained && std::abs(n12 - n0) <= 1e-12 * n0;
  }
  const bool pass = err <= 1e-9 && attained;
  report(8, pass,
         "h_0 error " + fmt(err) + ", N=0 attainment " +
             (attained ? "holds" : "fails"));
}

// 9. Round trips: multiplier inversion, classifier recovery and
// byte-identical CLI reruns.
void criterion_9() {
  std::mt19937_64 rng(100);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  const RadialMeasure nu = unit_disc();
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 2;
    CoefficientTable F(d, d == 1 ? 40 : 12, SeriesKind::PowerSeries);
    for (const MultiIndex& alpha : indices_up_to(d, F.degree()))
      F.set(alpha, LogComplex::from_log(uni(rng), std::abs(uni(rng))));
    const RadialMeasure nud =
        d == 1 ? nu
               : RadialMeasure(2, RadialMeasure::ProductDensity{
                                      {DensityForm::DiscCharacteristic, 0.0,
                                       1.0},
                                      {DensityForm::DiscCharacteristic, 0.0,
                                       1.0}});
    const CoefficientTable back =
        invert_multiplier(apply_multiplier(F, nud), nud);
    for (const auto& [alpha, c] : F.entries())
      worst = std::max(worst, std::abs(back.at(alpha).log_mag - c.log_mag));
  }

  bool classify_ok = true;
  for (double order : {0.25, 1.0}) {
    for (LawFamily fam : {LawFamily::Stretched, LawFamily::Factorial}) {
      if (fam == LawFamily::Stretched && order > 0.5) continue;
      GrowthLaw law{fam, LawSide::Decay, order, 1.0};
      const GrowthReport rep = classify(generate_synthetic(law, 60, 1, 23));
      classify_ok = classify_ok && rep.verdict &&
                    rep.verdict->family == fam &&
                    std::abs(rep.verdict->s_or_sigma - order) <= 0.05 * order;
    }
  }

  bool cli_ok = false;
  const fs::path dir =
      fs::temp_directory_path() / ("pwcalc_acc_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::string out = (dir / "law.csv").string();
  const std::string cmd = std::string(CLI_BIN_PATH) +
                          " synth --family factorial --sigma 1.0 --degree 40 "
                          "--seed 77 --out " +
                          out + " >/dev/null 2>&1";
  auto slurp = [](const std::string& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
  };
  if (WEXITSTATUS(std::system(cmd.c_str())) == 0) {
    const std::string first = slurp(out);
    cli_ok = WEXITSTATUS(std::system(cmd.c_str())) == 0 &&
             !first.empty() && slurp(out) == first;
  }
  fs::remove_all(dir);

  const bool pass = worst <= 1e-12 && classify_ok && cli_ok;
  report(9, pass,
         "inversion max log error " + fmt(worst) + ", classifier " +
             (classify_ok ? "ok" : "FAIL") + ", CLI determinism " +
             (cli_ok ? "ok" : "FAIL"));
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 9 criteria passed\n");
  return 0;
}
