// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "linklab/census.hpp"
#include "linklab/diagram.hpp"
#include "linklab/harness.hpp"
#include "linklab/random_stream.hpp"
#include "linklab/sampler.hpp"
#include "linklab/tangle.hpp"

using namespace linklab;

namespace {

constexpr double kChiAlpha = 1e-3;  // AC5 significance
constexpr double kSigmas = 3.0;     // AC6, AC8
constexpr double kBoundTol = 5e-5;  // AC9: half a unit in the 4th decimal

int failures = 0;

void report(const char* id, bool pass, const std::string& detail, double seconds) {
  std::printf("%s %s  (%.1fs)  %s\n", id, pass ? "PASS" : "FAIL", seconds, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// Either standard rendering of x to `places` decimals (nearest or truncated)
// equals the quoted value.
bool matches_at(double x, double quoted, int places) {
  const double s = std::pow(10.0, places);
  const double q = std::round(quoted * s);
  return std::round(x * s) == q || std::floor(x * s) == q;
}

using Sig = std::vector<std::int32_t>;

void ac1() {
  Timer t;
  const long q_want[] = {2, 9, 54, 378}, sq_want[] = {1, 2, 6, 22};
  bool ok = true;
  std::ostringstream d;
  for (int n = 1; n <= 4; ++n) {
    const auto all = enumerate_all(n, true);
    std::set<Sig> distinct;
    for (const auto& m : all) distinct.insert(canonical_form(m).signature);
    const bool good = static_cast<long>(distinct.size()) == q_want[n - 1] && count_q(n).value == q_want[n - 1];
    ok &= good;
    d << "Q(" << n << ")=" << distinct.size() << ' ';
  }
  for (int n = 2; n <= 5; ++n) {
    std::size_t sq = 0;
    for (const auto& m : enumerate_all(n, true)) sq += edge_connectivity_at_least_3(m) ? 1 : 0;
    const bool good = static_cast<long>(sq) == sq_want[n - 2] && count_sq(n).value == sq_want[n - 2];
    ok &= good;
    d << "SQ(" << n << ")=" << sq << ' ';
  }
  ok &= t.seconds() < 60;
  report("AC1", ok, d.str() + "(brute force = closed form, exact)", t.seconds());
}

void ac2() {
  Timer t;
  const double quoted[] = {0.2964445, 0.2415913, 0.1643246, 0.1068911, 0.0686226, 0.0439052};
  bool ok = true, ok5000 = true;
  std::ostringstream d;
  d.precision(9);
  for (int m = 2; m <= 7; ++m) {
    const double v = mpq_class(expected_m_gons(1000, m) / 1000).get_d();
    const double v5000 = mpq_class(expected_m_gons(5000, m) / 5000).get_d();
    ok &= matches_at(v, quoted[m - 2], 7);
    ok5000 &= matches_at(v5000, quoted[m - 2], 7);
    d << "m=" << m << ':' << std::fixed << v << ' ';
  }
  ok &= t.seconds() < 10;
  d << "| quoted values " << (ok5000 ? "match" : "do not match") << " n=5000";
  report("AC2", ok, d.str(), t.seconds());
}

void ac3() {
  Timer t;
  bool exact = true;
  for (long n = 4; n <= 500; ++n) {
    mpq_class p = mpq_class(count_sq_m(n, 2).value) / count_sq(n).value;
    exact &= p == p_n2_closed_form(n);
  }
  // n^2 * |P(n,2) - 4/27 - 10/(27n)| from the counts themselves
  std::vector<double> scaled;
  for (long n = 50; n <= 5000; ++n) {
    mpq_class r = mpq_class(count_sq_m(n, 2).value) / count_sq(n).value - mpq_class(4, 27) - mpq_class(10, 27) / n;
    r = abs(r) * n * n;
    scaled.push_back(r.get_d());
  }
  const std::size_t half = scaled.size() / 2;
  const double first = *std::max_element(scaled.begin(), scaled.begin() + static_cast<long>(half));
  const double second = *std::max_element(scaled.begin() + static_cast<long>(half), scaled.end());
  const double bound = 1.0;  // pinned ceiling
  const bool bounded = first <= bound && second <= bound;
  const bool no_growth = second <= first && scaled.back() <= scaled[half] * (1 + 1e-3);
  report("AC3", exact && bounded && no_growth,
         std::string(exact ? "closed form exact for 4..500; " : "closed form MISMATCH; ") +
             fmt("n^2*residual max[50,2524]=%.6f max[2525,5000]=%.6f at 5000=%.6f", first, second, scaled.back()),
         t.seconds());
}

void ac4() {
  Timer t;
  const double got[] = {lower_slope(), tetrahedral_slope(), upper_slope()};
  const double quoted[] = {0.3571, 7.1422, 3.6638};
  bool ok = true;
  for (int i = 0; i < 3; ++i) ok &= matches_at(got[i], quoted[i], 4);
  ok &= std::abs(kV3 - 1.01494160640965) < 1e-13 && std::abs(kV8 - 3.66386237670887) < 1e-13;
  report("AC4", ok, fmt("19v3/54=%.6f 190v3/27=%.6f v8=%.6f", got[0], got[1], got[2]), t.seconds());
}

std::map<Sig, std::size_t> index_of(const std::vector<RootedMap>& maps) {
  std::map<Sig, std::size_t> idx;
  for (const auto& m : maps) idx.emplace(canonical_form(m).signature, idx.size());
  return idx;
}

void ac5() {
  Timer t;
  RandomStream rng(20250501, 0);
  const auto idx = index_of(enumerate_all(3, true));
  std::vector<std::uint64_t> counts(idx.size(), 0);
  for (int i = 0; i < 540000; ++i) ++counts[idx.at(canonical_form(dual(sample_quadrangulation(3, rng))).signature)];
  const auto q = chi_square_uniform(counts);

  std::vector<RootedMap> sq4;
  for (const auto& m : enumerate_all(4, true))
    if (edge_connectivity_at_least_3(m)) sq4.push_back(m);
  const auto sidx = index_of(sq4);
  std::vector<std::uint64_t> scounts(sidx.size(), 0);
  for (int i = 0; i < 60000; ++i) ++scounts[sidx.at(canonical_form(sample_sq(4, rng, 1ULL << 32)).signature)];
  const auto s = chi_square_uniform(scounts);
  const bool ok = idx.size() == 54 && sidx.size() == 6 && q.p_value > kChiAlpha && s.p_value > kChiAlpha && t.seconds() < 300;
  report("AC5", ok, fmt("Q(3): chi2=%.1f dof=%.0f p=%.4f; SQ(4): chi2=%.2f", q.statistic, static_cast<double>(q.dof), q.p_value, s.statistic) +
                        fmt(" p=%.4f (alpha=%g)", s.p_value, kChiAlpha), t.seconds());
}

// Exact mean bigon count over rooted SQ(n): all rootings of medials of
// nonseparable maps with n edges.
mpq_class exact_bigon_mean(int n, std::size_t& rooted) {
  std::set<Sig> seen;
  mpz_class total = 0;
  for_each_planar_map(n, [&](const RootedMap& m) {
    if (!is_nonseparable(m)) return;
    const RootedMap s = medial(m);
    const long f2 = static_cast<long>(face_type(s)[2]);
    for (std::size_t r = 0; r < s.dart_count(); ++r)
      if (seen.insert(canonical_signature(s, static_cast<Dart>(r))).second) total += f2;
  });
  rooted = seen.size();
  return mpq_class(total) / static_cast<long>(rooted);
}

void ac6() {
  Timer t;
  // correction E[F2] - 2n P(n,2), exact for n <= 8
  bool counts_ok = true;
  mpq_class corr, max_corr = 0;
  for (int n = 2; n <= 8; ++n) {
    std::size_t rooted = 0;
    const mpq_class mean = exact_bigon_mean(n, rooted);
    counts_ok &= count_sq(n).value == static_cast<long>(rooted);
    corr = mean - expected_m_gons(n, 2);
    max_corr = std::max(max_corr, mpq_class(abs(corr)));
  }
  const int n = 10;
  const double target = mpq_class(expected_m_gons(n, 2) + corr).get_d();  // correction measured at n = 8
  RandomStream rng(20250502, 0);
  StatsSummary s;
  for (int i = 0; i < 100000; ++i) s.add(static_cast<double>(face_type(sample_sq(n, rng, 1ULL << 32))[2]));
  const double z = (s.mean() - target) / s.standard_error();
  const bool ok = counts_ok && std::abs(z) < kSigmas;
  report("AC6", ok,
         fmt("SQ(10) mean F2=%.4f (se %.4f) vs 2nP(10,2)=%.4f, z=%.2f", s.mean(), s.standard_error(), target, z) +
             "; exact correction max over n<=8: " + max_corr.get_str() + (counts_ok ? "" : " (rooted count mismatch)"),
         t.seconds());
}

void ac7() {
  Timer t;
  std::vector<std::vector<RootedMap>> qs(5);
  for (int N = 1; N <= 4; ++N)
    for (const auto& m : enumerate_all(N, true)) qs[static_cast<std::size_t>(N)].push_back(dual(m));
  std::size_t cases = 0, bad = 0;
  for (int area = 0; area <= 2; ++area)
    for (int p = 1; p <= area + 1; ++p)
      for_each_bounded_quadrangulation(area, p, [&](const BoundedQuadrangulation& k) {
        Embedder e(k);
        for (int N = std::max(1, area); N <= 4; ++N) {
          long hits = 0;
          for (const auto& q : qs[static_cast<std::size_t>(N)]) hits += e.embeds(q, q.root()) ? 1 : 0;
          const long want = N - area >= p - 1 ? mpz_get_si(count_q_boundary(N - area, p).value.get_mpz_t()) : 0;
          ++cases;
          bad += hits == want ? 0 : 1;
        }
      });
  report("AC7", bad == 0 && cases > 0, std::to_string(cases) + " (k, N) cases, " + std::to_string(bad) + " mismatches",
         t.seconds());
}

void ac8() {
  Timer t;
  const auto sq = minimal_square_tangle();
  Embedder e(sq);
  RandomStream rng(20250503, 0);
  const long N = 50, samples = 100000;
  long hits = 0;
  for (long i = 0; i < samples; ++i) {
    const RootedMap q = sample_quadrangulation(static_cast<int>(N), rng);
    hits += e.embeds(q, q.root()) ? 1 : 0;
  }
  const double exact = tangle_prob(1, 2, N).float_view();
  const double freq = static_cast<double>(hits) / samples;
  const double z1 = (freq - exact) / std::sqrt(exact * (1 - exact) / samples);

  const long c = 200;
  const int draws = 2000;
  StatsSummary s;
  for (int i = 0; i < draws; ++i) {
    const LinkDiagram l = assign_crossings(sample_four_valent(static_cast<int>(c), rng), CrossingMode::uniform, rng);
    const RootedMap q = dual(l.shadow());
    std::size_t k = 0;
    for (std::size_t r = 0; r < q.dart_count(); ++r) k += e.embeds_with_crossings(l, q, static_cast<Dart>(r)) ? 1 : 0;
    s.add(static_cast<double>(k) / c);
  }
  const double expected = expected_rooting_count(1, 2, c) / c;
  const double z2 = (s.mean() - expected) / s.standard_error();
  const bool ok = std::abs(z1) < kSigmas && std::abs(z2) < kSigmas && t.seconds() < 600;
  report("AC8", ok,
         fmt("Q(50) freq=%.5f exact=%.5f z=%.2f; ", freq, exact, z1) +
             fmt("rooting/c at c=200: %.5f vs %.5f z=%.2f", s.mean(), expected, z2),
         t.seconds());
}

void ac9() {
  Timer t;
  const LinkDiagram d = seven_crossing_example();
  const auto b = volume_bounds(d);
  bool ok = twist_number(d) == 3 && std::abs(b.lower - 0.50747) < kBoundTol && std::abs(b.upper - 20.2988) < kBoundTol;
  for (int n = 2; n <= 30; ++n) {
    const LinkDiagram tn = torus_diagram(n);
    const auto tb = volume_bounds(tn);
    ok &= twist_number(tn) == 1 && tb.lower == 0 && tb.upper == 0;
  }
  cli::GlobalOptions g;
  cli::JoinOptions jo;
  jo.diagrams = std::string(LINKLAB_TEST_DATA) + "/diagrams.pd";
  jo.volumes = std::string(LINKLAB_TEST_DATA) + "/volumes.csv";
  std::ostringstream out, err;
  const int code = cli::cmd_join_volumes(g, jo, out, err);
  std::size_t alt = 0, inside = 0;
  std::istringstream in(out.str());
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("prime_alternating_candidate") == std::string::npos && line.find("torus_2n") == std::string::npos) continue;
    ++alt;
    inside += line.substr(line.rfind(',') + 1) == "1" ? 1 : 0;
  }
  ok &= code == 0 && alt > 0 && inside == alt;
  report("AC9", ok,
         fmt("twist=%.0f bounds=(%.5f, %.4f); T(2,n) n<=30 ok; ", static_cast<double>(twist_number(d)), b.lower, b.upper) +
             "join: " + std::to_string(inside) + "/" + std::to_string(alt) + " alternating records bracketed",
         t.seconds());
}

void ac10() {
  Timer t;
  std::ifstream readme(LINKLAB_README);
  std::stringstream text;
  text << readme.rdbuf();
  const std::string r = text.str();
  const bool stated = r.find("2216.46") != std::string::npos && r.find("not reproducible at desk scale") != std::string::npos;
  cli::GlobalOptions g;
  cli::JoinOptions jo;
  jo.diagrams = std::string(LINKLAB_TEST_DATA) + "/diagrams.pd";
  jo.volumes = std::string(LINKLAB_TEST_DATA) + "/volumes_empty.csv";
  std::ostringstream out, err;
  const bool pipeline = cli::cmd_join_volumes(g, jo, out, err) == 0 && err.str().find("warning") != std::string::npos;
  report("AC10", stated && pipeline,
         "large-n volume mean 2216.46, the skewness table and slope ~2.5 are out of scope (need external volumes and a "
         "large-n SQ sampler); README states it: " +
             std::string(stated ? "yes" : "no") + "; join pipeline: " + (pipeline ? "ok" : "broken"),
         t.seconds());
}

}  // namespace

int main() {
  ac1();
  ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8();
  ac9();
  ac10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
