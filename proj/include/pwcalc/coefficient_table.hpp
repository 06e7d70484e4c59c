#pragma once

#include <complex>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "pwcalc/log_complex.hpp"
#include "pwcalc/multi_index.hpp"

namespace pwcalc {

enum class SeriesKind { PowerSeries, HermiteSeries };

std::string to_string(SeriesKind kind);
std::optional<SeriesKind> series_kind_from_string(const std::string& s);

/// Truncated coefficient table alpha -> c(alpha) for |alpha| <= degree.
/// Missing indices denote exact zero. Carrier for both power series
/// c(F,alpha) and Hermite series c_h(f,alpha); immutable after construction.
class CoefficientTable {
 public:
  using Map = std::map<MultiIndex, LogComplex>;

  CoefficientTable(int dim, int degree, SeriesKind kind)
      : dim_(dim), degree_(degree), kind_(kind) {
    if (dim < 1 || dim > kMaxDim)
      throw std::invalid_argument("CoefficientTable: dim must be in [1,4]");
    if (degree < 0)
      throw std::invalid_argument("CoefficientTable: negative degree");
  }

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  SeriesKind kind() const { return kind_; }
  const Map& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  /// Exact zeros are dropped rather than stored.
  void set(const MultiIndex& alpha, LogComplex value) {
    if (alpha.dim() != dim_)
      throw std::invalid_argument("CoefficientTable: dimension mismatch");
    if (alpha.degree() > degree_)
      throw std::invalid_argument("CoefficientTable: index beyond truncation");
    if (value.is_zero())
      entries_.erase(alpha);
    else
      entries_[alpha] = value;
  }

  void set(const MultiIndex& alpha, std::complex<double> value) {
    set(alpha, LogComplex::from_complex(value));
  }

  LogComplex at(const MultiIndex& alpha) const {
    auto it = entries_.find(alpha);
    return it == entries_.end() ? LogComplex::zero() : it->second;
  }

  CoefficientTable with_kind(SeriesKind kind) const {
    CoefficientTable out(dim_, degree_, kind);
    out.entries_ = entries_;
    return out;
  }

 private:
  int dim_;
  int degree_;
  SeriesKind kind_;
  Map entries_;
};

/// Result of a log-domain partial sum. overflow is set when the value
/// exceeds representable magnitude; log_value stays meaningful either way.
struct SeriesValue {
  LogComplex log_value;
  bool overflow = false;

  std::complex<double> value() const { return log_value.to_complex(); }
};

/// e_alpha(z) = z^alpha / sqrt(alpha!) in log-domain; e_0 = 1 everywhere.
LogComplex monomial_eval(const MultiIndex& alpha,
                         const std::vector<std::complex<double>>& z);

/// Partial sum sum_{|alpha|<=N} c(F,alpha) e_alpha(z), accumulated in
/// descending magnitude order with compensated summation.
SeriesValue series_eval(const CoefficientTable& F,
                        const std::vector<std::complex<double>>& z);

/// (F,G) = sum c(F,alpha) conj(c(G,alpha)) over the common truncation.
std::complex<double> pair(const CoefficientTable& F, const CoefficientTable& G);

/// Coefficient-identity Bargmann transform: relabels a Hermite series as a
/// power series with bit-identical entries (V_d h_alpha = e_alpha).
CoefficientTable bargmann_coeff_map(const CoefficientTable& f);

/// CSV interchange: '#' comment lines, a literal "dim,degree,kind" header,
/// one metadata row, then rows alpha_1,...,alpha_d,log_mag,phase.
void write_series_csv(std::ostream& os, const CoefficientTable& table,
                      const std::string& provenance = {});
CoefficientTable read_series_csv(std::istream& is);

}  // namespace pwcalc
