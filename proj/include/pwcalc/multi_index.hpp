#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace pwcalc {

inline constexpr int kMaxDim = 4;

/// Multi-index alpha in N^d, 1 <= d <= 4. Indexes the monomials
/// e_alpha(z) = z^alpha / sqrt(alpha!) and the Hermite functions h_alpha.
class MultiIndex {
 public:
  MultiIndex() = default;

  explicit MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    validate();
  }

  MultiIndex(std::initializer_list<int> entries) : entries_(entries) {
    validate();
  }

  static MultiIndex zeros(int dim) {
    return MultiIndex(std::vector<int>(static_cast<std::size_t>(dim), 0));
  }

  int dim() const { return static_cast<int>(entries_.size()); }

  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }

  /// |alpha| = sum of entries.
  int degree() const {
    int n = 0;
    for (int e : entries_) n += e;
    return n;
  }

  const std::vector<int>& entries() const { return entries_; }

  bool operator==(const MultiIndex& other) const = default;

  // Graded ordering: by degree first, then lexicographic. Gives a stable,
  // shell-major iteration order over coefficient tables.
  bool operator<(const MultiIndex& other) const {
    const int da = degree(), db = other.degree();
    if (da != db) return da < db;
    return entries_ < other.entries_;
  }

 private:
  void validate() const {
    if (entries_.empty() || entries_.size() > kMaxDim)
      throw std::invalid_argument("MultiIndex: dim must be in [1,4]");
    for (int e : entries_)
      if (e < 0) throw std::invalid_argument("MultiIndex: negative entry");
  }

  std::vector<int> entries_;
};

/// log(alpha!) = sum_j log(alpha_j!) via lgamma.
inline double log_factorial(const MultiIndex& alpha) {
  double s = 0.0;
  for (int j = 0; j < alpha.dim(); ++j) s += std::lgamma(alpha[j] + 1.0);
  return s;
}

/// Enumerates all alpha in N^d with |alpha| <= max_degree, in graded order.
inline std::vector<MultiIndex> indices_up_to(int dim, int max_degree) {
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(dim), 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == dim - 1) {
      for (int k = 0; k <= remaining; ++k) {
        cur[static_cast<std::size_t>(pos)] = k;
        out.emplace_back(cur);
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      cur[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, remaining - k);
    }
  };
  rec(0, max_degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pwcalc
