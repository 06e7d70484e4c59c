#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "pwcalc/coefficient_table.hpp"

namespace pwcalc {

enum class LawFamily { Stretched, Factorial };
enum class LawSide { Decay, Growth };

std::string to_string(LawFamily f);
std::string to_string(LawSide s);

/// Coefficient growth law:
///   stretched:  |c(alpha)| = e^{±rate * |alpha|^{1/(2 s)}}
///   factorial:  |c(alpha)| = rate^{|alpha|} * alpha!^{∓... see sign}
/// where the sign of the exponent is tied to side (decay = shrinking).
struct GrowthLaw {
  LawFamily family;
  LawSide side;
  double s_or_sigma;  // s for stretched, sigma for factorial
  double rate;        // r for stretched, h for factorial

  /// log |c(alpha)| prescribed by the law.
  double log_modulus(const MultiIndex& alpha) const;
};

struct GrowthReport {
  double fitted_tau = 0.0;          // coefficient of log(alpha!) in the fit
  double fitted_log_h = 0.0;        // coefficient of |alpha|
  double stretched_exponent = 0.0;  // estimate of 1/(2 s)
  double stretched_rate = 0.0;      // r
  double residual_factorial = 0.0;  // RMS, log-coefficient units
  double residual_stretched = 0.0;  // RMS, log-coefficient units
  std::optional<GrowthLaw> verdict; // nullopt = indeterminate

  std::string to_json() const;
};

/// Weight parameter for the Def-1.1-style sup norms: either the stretched
/// order s > 0 or the flat order sigma > 0.
struct NormOrder {
  bool flat = false;
  double value = 0.0;  // s when !flat, sigma when flat

  static NormOrder stretched(double s) { return {false, s}; }
  static NormOrder flat_sigma(double sigma) { return {true, sigma}; }
};

/// Log of the weighted sup norm sup_alpha |a(alpha)| w(alpha), where w is
///   e^{+-r |alpha|^{1/(2s)}}          (stretched decay/growth)
///   r^{-|alpha|} alpha!^{+-1/(2 sigma)}  (flat decay/growth).
/// Returns -inf on the all-zero table.
double weighted_sup_log_norm(const CoefficientTable& a, double r,
                             NormOrder order, LawSide variant);

/// Table whose moduli follow the law exactly, with deterministic
/// pseudo-random phases drawn from phase_seed.
CoefficientTable generate_synthetic(const GrowthLaw& law, int degree, int dim,
                                    std::uint64_t phase_seed);

/// Growth-law classifier: least-squares fits of log|c| against the factorial
/// model (1, |alpha|, log alpha!, log(1+|alpha|)) and, on shell maxima, the
/// stretched model log M_n = c0 + rho n^beta. Requires >= 12 nonzero shells.
GrowthReport classify(const CoefficientTable& a);

/// Family-selection threshold on |fitted_tau| (see classify()).
inline constexpr double kTauThreshold = 0.02;

}  // namespace pwcalc
