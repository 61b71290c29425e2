#include <cmath>
#include <vector>

#include "doctest.h"
#include "linklab/harness.hpp"
#include "linklab/random_stream.hpp"

using namespace linklab;

namespace {

// Central moments of a weighted finite distribution, computed directly.
struct Exact {
  double mean = 0, m2 = 0, m3 = 0, m4 = 0, m5 = 0;
};
Exact exact_moments(const std::vector<double>& xs, const std::vector<double>& w) {
  Exact e;
  double tot = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    e.mean += xs[i] * w[i];
    tot += w[i];
  }
  e.mean /= tot;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double d = xs[i] - e.mean;
    e.m2 += w[i] * d * d / tot;
    e.m3 += w[i] * d * d * d / tot;
    e.m4 += w[i] * d * d * d * d / tot;
    e.m5 += w[i] * d * d * d * d * d / tot;
  }
  return e;
}

}  // namespace

TEST_CASE("moments of a known discrete population") {
  // values 0,1,2,5 repeated with multiplicities 3,1,2,4
  const std::vector<double> xs{0, 1, 2, 5}, w{3, 1, 2, 4};
  StatsSummary s;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int k = 0; k < static_cast<int>(w[i]); ++k) s.add(xs[i]);
  const Exact e = exact_moments(xs, w);
  CHECK(s.count() == 10);
  CHECK(s.mean() == doctest::Approx(e.mean).epsilon(1e-12));
  CHECK(s.variance() == doctest::Approx(e.m2 * 10 / 9).epsilon(1e-12));
  CHECK(s.skewness() == doctest::Approx(e.m3 / std::pow(e.m2, 1.5)).epsilon(1e-12));
  CHECK(s.standardized4() == doctest::Approx(e.m4 / (e.m2 * e.m2)).epsilon(1e-12));
  CHECK(s.standardized5() == doctest::Approx(e.m5 / std::pow(e.m2, 2.5)).epsilon(1e-12));
  CHECK(s.min() == 0);
  CHECK(s.max() == 5);
  CHECK(s.standard_error() == doctest::Approx(std::sqrt(s.variance() / 10)));
}

TEST_CASE("merge matches a sequential pass") {
  RandomStream rng(3, 0);
  std::vector<double> xs;
  for (int i = 0; i < 5000; ++i) xs.push_back(static_cast<double>(rng.below(1000)) / 37.0 + (i % 7));
  StatsSummary all;
  for (double x : xs) all.add(x);
  for (std::size_t parts : {2u, 3u, 8u}) {
    std::vector<StatsSummary> ps(parts);
    for (std::size_t i = 0; i < xs.size(); ++i) ps[i % parts].add(xs[i]);
    StatsSummary merged;
    for (const auto& p : ps) merged.merge(p);
    CHECK(merged.count() == all.count());
    CHECK(merged.mean() == doctest::Approx(all.mean()).epsilon(1e-12));
    CHECK(merged.variance() == doctest::Approx(all.variance()).epsilon(1e-10));
    CHECK(merged.skewness() == doctest::Approx(all.skewness()).epsilon(1e-9));
    CHECK(merged.standardized4() == doctest::Approx(all.standardized4()).epsilon(1e-9));
    CHECK(merged.standardized5() == doctest::Approx(all.standardized5()).epsilon(1e-8));
  }
  StatsSummary empty, copy = all;
  copy.merge(empty);
  CHECK(copy.mean() == all.mean());
  empty.merge(all);
  CHECK(empty.variance() == doctest::Approx(all.variance()));
}

TEST_CASE("constant samples") {
  StatsSummary s;
  for (int i = 0; i < 50; ++i) s.add(4.25);
  CHECK(s.variance() == 0);
  CHECK(s.skewness() == 0);
  CHECK(s.mean() == 4.25);
}

TEST_CASE("normalized histogram") {
  std::vector<double> xs;
  for (int i = 0; i < 1000; ++i) xs.push_back(i % 10);
  const auto h = normalized_histogram(xs, 10);
  REQUIRE(h.size() == 10);
  double mass = 0;
  for (const auto& b : h) mass += b.density * (b.hi - b.lo);
  CHECK(mass == doctest::Approx(1.0));
  for (const auto& b : h) CHECK(b.density == doctest::Approx(h[0].density));
  CHECK(h.front().lo < 0);
  CHECK(h.back().hi > 0);
}

TEST_CASE("chi-square") {
  const auto flat = chi_square_uniform({100, 100, 100, 100});
  CHECK(flat.statistic == 0);
  CHECK(flat.dof == 3);
  CHECK(flat.p_value == doctest::Approx(1.0));
  // statistic 8 with 1 dof: tail = erfc(2)
  const auto skew = chi_square({60, 40}, {0.5, 0.5});
  CHECK(skew.statistic == doctest::Approx(4.0));
  const auto big = chi_square({70, 30}, {0.5, 0.5});
  CHECK(big.statistic == doctest::Approx(16.0));
  CHECK(big.p_value == doctest::Approx(std::erfc(std::sqrt(8.0))).epsilon(1e-9));
  CHECK(skew.p_value == doctest::Approx(std::erfc(std::sqrt(2.0))).epsilon(1e-9));
}
