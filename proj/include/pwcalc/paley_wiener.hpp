#pragma once

#include <cstdint>
#include <string>

#include "pwcalc/coefficient_table.hpp"
#include "pwcalc/radial_measure.hpp"
#include "pwcalc/seq_spaces.hpp"

namespace pwcalc {

/// Diagonal multiplier F -> Pi_A(F nu): c'(alpha) = varsigma_alpha
/// alpha!^{-1} c(alpha), in log-domain. Distributional bodies are allowed;
/// a negative multiplier flips the phase by pi, a zero one drops the entry.
CoefficientTable apply_multiplier(const CoefficientTable& F,
                                  const RadialMeasure& nu);

/// Inverse of apply_multiplier. Positive measure bodies only (so that
/// varsigma_alpha > 0 throughout); distributional input is refused.
CoefficientTable invert_multiplier(const CoefficientTable& G,
                                   const RadialMeasure& nu);

/// One side of a theorem mapping statement: space kind (A, A0, A', A0'),
/// weight flavour (stretched order s or flat order sigma) and the order.
struct SpaceDescriptor {
  std::string kind;
  bool flat = false;
  double order = 0.0;

  std::string to_string() const;
};

/// Exponent bookkeeping for one mapping case of the multiplier operator.
/// The case tags cover the stretched-preserving range (T1-s), the three
/// flat-order maps (T2-1..3) and the two order-1/2 limit statements
/// (T3-1, T3-2).
struct TheoremCase {
  std::string id;
  SpaceDescriptor input_space;
  SpaceDescriptor output_space;
  double order_in = 0.0;   // order of the synthesized input (s or sigma_0)
  double order_out = 0.0;  // order expected after the multiplier
  LawFamily family_in = LawFamily::Factorial;
  LawSide side_in = LawSide::Growth;
  LawFamily family_out = LawFamily::Factorial;
  LawSide side_out = LawSide::Growth;
};

/// Populate the TheoremCase for a tag and its order parameter. The
/// parameter is s for T1-s, sigma (the output-side order) for T2-1..3,
/// and must equal 1/2 for T3-1 / T3-2. Throws std::domain_error when the
/// parameter violates the case's hypothesis.
TheoremCase theorem_map_table(const std::string& case_id, double order_in);

struct VerificationReport {
  std::string case_id;
  double order_in = 0.0;
  double expected_order_out = 0.0;
  double fitted_order_out = 0.0;
  std::string family;  // fitted family, empty when indeterminate
  std::string side;    // fitted side, empty when indeterminate
  bool pass = false;
  bool conclusive = true;  // false when the classifier is indeterminate
  std::string details;

  std::string to_json() const;
};

/// End-to-end check of one mapping case: synthesize the extremal input for
/// the case's input space, push it through apply_multiplier, classify the
/// output and compare against theorem_map_table at 5% relative tolerance
/// on the order (family and side must match exactly). rate <= 0 selects a
/// case-appropriate default.
VerificationReport verify_theorem(const std::string& case_id, double order_in,
                                  const RadialMeasure& nu, int degree, int dim,
                                  double rate = 0.0,
                                  std::uint64_t seed = 0x5eed);

/// Relative tolerance on recovered order parameters, fixed project-wide.
inline constexpr double kOrderTolerance = 0.05;

}  // namespace pwcalc
