#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "linklab/errors.hpp"
#include "linklab/harness.hpp"

namespace linklab {

namespace {

constexpr double kBinom[6][6] = {{1, 0, 0, 0, 0, 0},  {1, 1, 0, 0, 0, 0},  {1, 2, 1, 0, 0, 0},
                                 {1, 3, 3, 1, 0, 0},  {1, 4, 6, 4, 1, 0},  {1, 5, 10, 10, 5, 1}};

}  // namespace

void StatsSummary::add(double x) {
  StatsSummary one;
  one.n_ = 1;
  one.mean_ = x;
  one.min_ = one.max_ = x;
  merge(one);
}

// Pairwise update for central power sums of arbitrary order.
void StatsSummary::merge(const StatsSummary& o) {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_), n = na + nb;
  const double delta = o.mean_ - mean_;
  std::array<double, 6> out{};
  for (int p = 2; p <= 5; ++p) {
    double s = m_[static_cast<std::size_t>(p)] + o.m_[static_cast<std::size_t>(p)];
    for (int k = 1; k <= p - 2; ++k) {
      const double a = std::pow(-nb / n, k) * m_[static_cast<std::size_t>(p - k)];
      const double b = std::pow(na / n, k) * o.m_[static_cast<std::size_t>(p - k)];
      s += kBinom[p][k] * (a + b) * std::pow(delta, k);
    }
    s += std::pow(na * nb * delta / n, p) * (1.0 / std::pow(nb, p - 1) - std::pow(-1.0 / na, p - 1));
    out[static_cast<std::size_t>(p)] = s;
  }
  m_ = out;
  mean_ += delta * nb / n;
  n_ += o.n_;
  min_ = std::min(min_, o.min_);
  max_ = std::max(max_, o.max_);
}

double StatsSummary::variance() const {
  if (n_ < 2) return 0;
  return std::max(0.0, m_[2] / static_cast<double>(n_ - 1));
}

double StatsSummary::standard_error() const { return std::sqrt(variance() / static_cast<double>(n_)); }

double StatsSummary::skewness() const {
  const double n = static_cast<double>(n_);
  const double m2 = m_[2] / n;
  if (n_ == 0 || m2 <= 0) return 0;
  return (m_[3] / n) / std::pow(m2, 1.5);
}

double StatsSummary::standardized4() const {
  const double n = static_cast<double>(n_);
  const double m2 = m_[2] / n;
  if (n_ == 0 || m2 <= 0) return 0;
  return (m_[4] / n) / (m2 * m2);
}

double StatsSummary::standardized5() const {
  const double n = static_cast<double>(n_);
  const double m2 = m_[2] / n;
  if (n_ == 0 || m2 <= 0) return 0;
  return (m_[5] / n) / std::pow(m2, 2.5);
}

std::vector<HistogramBin> normalized_histogram(const std::vector<double>& values, std::size_t bins) {
  if (bins == 0) throw DomainError("histogram needs at least one bin");
  StatsSummary s;
  for (double v : values) s.add(v);
  std::vector<HistogramBin> out;
  if (values.empty()) return out;
  const double sd = std::sqrt(s.variance());
  const double scale = sd > 0 ? sd : 1.0;
  const double lo = (s.min() - s.mean()) / scale, hi = (s.max() - s.mean()) / scale;
  const double width = hi > lo ? (hi - lo) / static_cast<double>(bins) : 1.0;
  std::vector<std::size_t> counts(bins, 0);
  for (double v : values) {
    const double z = (v - s.mean()) / scale;
    auto b = static_cast<std::size_t>((z - lo) / width);
    ++counts[std::min(b, bins - 1)];
  }
  for (std::size_t b = 0; b < bins; ++b) {
    const double a = lo + width * static_cast<double>(b);
    out.push_back({a, a + width, static_cast<double>(counts[b]) / (static_cast<double>(values.size()) * width)});
  }
  return out;
}

}  // namespace linklab
