#include "pwcalc/coefficient_table.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

namespace pwcalc {

namespace {

constexpr double kLogDblMax = 709.0;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Kahan-compensated accumulator for one real component.
struct Compensated {
  double sum = 0.0, c = 0.0;
  void add(double x) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

std::string to_string(SeriesKind kind) {
  return kind == SeriesKind::PowerSeries ? "power-series" : "hermite-series";
}

std::optional<SeriesKind> series_kind_from_string(const std::string& s) {
  if (s == "power-series") return SeriesKind::PowerSeries;
  if (s == "hermite-series") return SeriesKind::HermiteSeries;
  return std::nullopt;
}

LogComplex monomial_eval(const MultiIndex& alpha,
                         const std::vector<std::complex<double>>& z) {
  if (static_cast<int>(z.size()) != alpha.dim())
    throw std::invalid_argument("monomial_eval: dimension mismatch");
  double log_mag = -0.5 * log_factorial(alpha);
  double phase = 0.0;
  for (int j = 0; j < alpha.dim(); ++j) {
    if (alpha[j] == 0) continue;
    const double m = std::abs(z[static_cast<std::size_t>(j)]);
    if (m == 0.0) return LogComplex::zero();
    log_mag += alpha[j] * std::log(m);
    phase += alpha[j] * std::arg(z[static_cast<std::size_t>(j)]);
  }
  return LogComplex::from_log(log_mag, phase);
}

SeriesValue series_eval(const CoefficientTable& F,
                        const std::vector<std::complex<double>>& z) {
  if (F.kind() != SeriesKind::PowerSeries)
    throw std::invalid_argument("series_eval: expected a power series");
  if (static_cast<int>(z.size()) != F.dim())
    throw std::invalid_argument("series_eval: dimension mismatch");

  std::vector<LogComplex> terms;
  terms.reserve(F.entries().size());
  for (const auto& [alpha, c] : F.entries()) {
    const LogComplex t = c * monomial_eval(alpha, z);
    if (!t.is_zero()) terms.push_back(t);
  }
  if (terms.empty()) return {LogComplex::zero(), false};

  std::sort(terms.begin(), terms.end(),
            [](const LogComplex& a, const LogComplex& b) {
              return a.log_mag > b.log_mag;
            });
  const double scale = terms.front().log_mag;
  Compensated re, im;
  for (const LogComplex& t : terms) {
    const double m = std::exp(t.log_mag - scale);
    re.add(m * std::cos(t.phase));
    im.add(m * std::sin(t.phase));
  }
  const std::complex<double> s(re.sum, im.sum);
  SeriesValue out;
  out.log_value = LogComplex::from_complex(s).scaled_by_log(scale);
  out.overflow = out.log_value.log_mag > kLogDblMax;
  return out;
}

std::complex<double> pair(const CoefficientTable& F,
                          const CoefficientTable& G) {
  if (F.dim() != G.dim()) throw std::invalid_argument("pair: dim mismatch");
  if (F.kind() != G.kind()) throw std::invalid_argument("pair: kind mismatch");
  // Iterate the smaller table; missing entries contribute zero.
  const CoefficientTable& a = F.entries().size() <= G.entries().size() ? F : G;
  const CoefficientTable& b = &a == &F ? G : F;
  Compensated re, im;
  for (const auto& [alpha, ca] : a.entries()) {
    const LogComplex cb = b.at(alpha);
    if (cb.is_zero()) continue;
    const LogComplex prod =
        (&a == &F) ? ca * cb.conj() : cb * ca.conj();
    const std::complex<double> v = prod.to_complex();
    re.add(v.real());
    im.add(v.imag());
  }
  return {re.sum, im.sum};
}

CoefficientTable bargmann_coeff_map(const CoefficientTable& f) {
  if (f.kind() != SeriesKind::HermiteSeries)
    throw std::invalid_argument("bargmann_coeff_map: expected a Hermite series");
  return f.with_kind(SeriesKind::PowerSeries);
}

void write_series_csv(std::ostream& os, const CoefficientTable& table,
                      const std::string& provenance) {
  if (!provenance.empty()) os << "# " << provenance << "\n";
  os << "dim,degree,kind\n";
  os << table.dim() << ',' << table.degree() << ',' << to_string(table.kind())
     << "\n";
  for (const auto& [alpha, c] : table.entries()) {
    for (int j = 0; j < alpha.dim(); ++j) os << alpha[j] << ',';
    os << fmt17(c.log_mag) << ',' << fmt17(c.phase) << "\n";
  }
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  std::ostringstream msg;
  msg << "series CSV, line " << line_no << ": " << what;
  throw std::runtime_error(msg.str());
}

}  // namespace

CoefficientTable read_series_csv(std::istream& is) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      if (!line.empty() && line[0] == '#') continue;
      if (line.empty() || line == "\r") continue;
      return true;
    }
    return false;
  };

  if (!next_line()) parse_fail(line_no, "missing header");
  {
    auto fields = split_csv(line);
    if (fields != std::vector<std::string>{"dim", "degree", "kind"})
      parse_fail(line_no, "expected header 'dim,degree,kind'");
  }
  if (!next_line()) parse_fail(line_no, "missing metadata row");
  int dim = 0, degree = 0;
  SeriesKind kind{};
  {
    auto fields = split_csv(line);
    if (fields.size() != 3) parse_fail(line_no, "metadata row needs 3 fields");
    try {
      dim = std::stoi(fields[0]);
      degree = std::stoi(fields[1]);
    } catch (const std::exception&) {
      parse_fail(line_no, "non-integer dim/degree");
    }
    auto k = series_kind_from_string(fields[2]);
    if (!k) parse_fail(line_no, "unknown kind '" + fields[2] + "'");
    kind = *k;
    if (dim < 1 || dim > kMaxDim) parse_fail(line_no, "dim out of range");
    if (degree < 0) parse_fail(line_no, "negative degree");
  }

  CoefficientTable table(dim, degree, kind);
  while (next_line()) {
    auto fields = split_csv(line);
    if (static_cast<int>(fields.size()) != dim + 2)
      parse_fail(line_no, "row arity mismatch");
    std::vector<int> alpha(static_cast<std::size_t>(dim));
    double log_mag = 0, phase = 0;
    try {
      for (int j = 0; j < dim; ++j)
        alpha[static_cast<std::size_t>(j)] =
            std::stoi(fields[static_cast<std::size_t>(j)]);
      const std::string& lm = fields[static_cast<std::size_t>(dim)];
      log_mag = (lm == "-inf")
                    ? -std::numeric_limits<double>::infinity()
                    : std::stod(lm);
      phase = std::stod(fields[static_cast<std::size_t>(dim) + 1]);
    } catch (const std::exception&) {
      parse_fail(line_no, "malformed numeric field");
    }
    MultiIndex mi(alpha);
    if (mi.degree() > degree) parse_fail(line_no, "index beyond truncation");
    table.set(mi, LogComplex::from_log(log_mag, phase));
  }
  return table;
}

}  // namespace pwcalc
