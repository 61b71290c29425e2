#include <boost/math/distributions/chi_squared.hpp>
#include <numeric>

#include "linklab/errors.hpp"
#include "linklab/harness.hpp"

namespace linklab {

ChiSquareResult chi_square(const std::vector<std::uint64_t>& counts, const std::vector<double>& probabilities) {
  if (counts.size() < 2 || counts.size() != probabilities.size())
    throw DomainError("chi-square needs matching count/probability vectors with >= 2 cells");
  const double total = static_cast<double>(std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  if (total <= 0) throw DomainError("chi-square needs observations");
  ChiSquareResult r;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double e = total * probabilities[i];
    if (e <= 0) throw DomainError("chi-square cell with zero expectation");
    const double diff = static_cast<double>(counts[i]) - e;
    r.statistic += diff * diff / e;
  }
  r.dof = counts.size() - 1;
  boost::math::chi_squared dist(static_cast<double>(r.dof));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  return chi_square(counts, std::vector<double>(counts.size(), 1.0 / static_cast<double>(counts.size())));
}

}  // namespace linklab
