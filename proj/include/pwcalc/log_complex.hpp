#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

namespace pwcalc {

/// Complex scalar stored as (log-magnitude, phase). Survives the
/// alpha!^{+-1/(2*sigma)} dynamic range that overflows plain doubles
/// near |alpha| ~ 170.
///
/// Invariant: log_mag == -inf represents exact zero with phase 0.
struct LogComplex {
  double log_mag = -std::numeric_limits<double>::infinity();
  double phase = 0.0;  // radians in [0, 2*pi)

  static constexpr double kTwoPi = 2.0 * std::numbers::pi;

  static double wrap_phase(double p) {
    double w = std::fmod(p, kTwoPi);
    if (w < 0.0) w += kTwoPi;
    // fmod can return kTwoPi after the correction when p is a tiny negative.
    if (w >= kTwoPi) w = 0.0;
    return w;
  }

  static LogComplex zero() { return LogComplex{}; }

  static LogComplex from_log(double log_mag, double phase) {
    if (std::isinf(log_mag) && log_mag < 0) return zero();
    return LogComplex{log_mag, wrap_phase(phase)};
  }

  static LogComplex from_complex(std::complex<double> v) {
    const double m = std::abs(v);
    if (m == 0.0) return zero();
    return from_log(std::log(m), std::arg(v));
  }

  static LogComplex from_real(double x) {
    if (x == 0.0) return zero();
    return from_log(std::log(std::abs(x)), x < 0 ? std::numbers::pi : 0.0);
  }

  bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

  std::complex<double> to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    const double m = std::exp(log_mag);
    return {m * std::cos(phase), m * std::sin(phase)};
  }

  LogComplex operator*(const LogComplex& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return from_log(log_mag + o.log_mag, phase + o.phase);
  }

  /// Multiply by exp(t) for real t (pure magnitude scaling).
  LogComplex scaled_by_log(double t) const {
    if (is_zero()) return zero();
    return from_log(log_mag + t, phase);
  }

  LogComplex conj() const {
    if (is_zero()) return zero();
    return from_log(log_mag, -phase);
  }

  LogComplex negated() const {
    if (is_zero()) return zero();
    return from_log(log_mag, phase + std::numbers::pi);
  }

  LogComplex reciprocal() const {
    if (is_zero()) return from_log(std::numeric_limits<double>::infinity(), 0.0);
    return from_log(-log_mag, -phase);
  }
};

}  // namespace pwcalc
