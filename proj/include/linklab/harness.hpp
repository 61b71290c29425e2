#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace linklab {

// Single-pass central moments up to order 5.  add() and merge() use the same
// pairwise update, so merging per-worker summaries gives the same result as
// one sequential pass up to rounding.
class StatsSummary {
 public:
  void add(double x);
  void merge(const StatsSummary& other);

  std::size_t count() const noexcept { return n_; }
  double mean() const noexcept { return mean_; }
  double variance() const;         // unbiased, M2 / (n - 1)
  double skewness() const;         // g1 = m3 / m2^{3/2}; 0 when m2 = 0
  double standardized4() const;    // m4 / m2^2
  double standardized5() const;    // m5 / m2^{5/2}
  double min() const noexcept { return min_; }
  double max() const noexcept { return max_; }
  double standard_error() const;

 private:
  std::size_t n_ = 0;
  double mean_ = 0;
  std::array<double, 6> m_{};  // m_[k] = sum of (x - mean)^k, k = 2..5
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
};

struct HistogramBin {
  double lo, hi, density;
};
// Values standardized to mean 0 / variance 1, then binned over [min, max].
std::vector<HistogramBin> normalized_histogram(const std::vector<double>& values, std::size_t bins);

struct ChiSquareResult {
  double statistic = 0;
  std::size_t dof = 0;
  double p_value = 1;
};
ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& counts);
ChiSquareResult chi_square(const std::vector<std::uint64_t>& counts, const std::vector<double>& probabilities);

}  // namespace linklab
