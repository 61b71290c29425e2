#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "linklab/census.hpp"

namespace linklab {

namespace {

// Memo covers the small arguments that dominate repeated evaluation; larger
// factorials go through mpz_fac_ui (keeping a 10^5-entry table of 10^5-digit
// integers resident would cost gigabytes).
constexpr unsigned long kMemo = 4096;

std::vector<mpz_class> build_memo() {
  std::vector<mpz_class> t(kMemo + 1);
  t[0] = 1;
  for (unsigned long i = 1; i <= kMemo; ++i) t[i] = t[i - 1] * i;
  return t;
}

const std::vector<mpz_class>& memo() {
  static const std::vector<mpz_class> t = build_memo();
  return t;
}

mpz_class fac(long n) {
  if (n < 0) throw DomainError("negative factorial argument");
  return factorial(static_cast<unsigned long>(n));
}

mpz_class pow3(long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(e));
  return r;
}

mpz_class require_integer(const mpq_class& q, const char* what) {
  if (q.get_den() != 1) throw std::logic_error(std::string(what) + " is not integral");
  return q.get_num();
}

mpq_class q_boundary_rational(long n, long p) {
  // 3^{n-p} (3p)!/(p!(2p-1)!) (2n+p-1)!/((n-p+1)!(n+2p)!)
  mpq_class r(fac(3 * p) * fac(2 * n + p - 1), fac(p) * fac(2 * p - 1) * fac(n - p + 1) * fac(n + 2 * p));
  r.canonicalize();
  if (n - p >= 0) {
    r *= pow3(n - p);
  } else {
    r /= pow3(p - n);
  }
  return r;
}

}  // namespace

const mpz_class& factorial(unsigned long n) {
  if (n <= kMemo) return memo()[n];
  thread_local mpz_class scratch;
  mpz_fac_ui(scratch.get_mpz_t(), n);
  return scratch;
}

mpz_class factorial_ratio(unsigned long a, unsigned long b) {
  if (a < b) throw DomainError("factorial_ratio needs a >= b");
  if (a <= kMemo) return memo()[a] / memo()[b];
  // product tree over (b, a]
  std::vector<mpz_class> terms;
  for (unsigned long k = b + 1; k <= a; ++k) terms.emplace_back(k);
  if (terms.empty()) return 1;
  while (terms.size() > 1) {
    std::vector<mpz_class> next;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(terms[i] * terms[i + 1]);
    if (terms.size() % 2) next.push_back(terms.back());
    terms.swap(next);
  }
  return terms[0];
}

CountValue count_sq(long n) {
  if (n < 2) throw DomainError("count_sq needs n >= 2");
  mpz_class num = 2 * fac(3 * n - 3);
  mpz_class den = fac(n) * fac(2 * n - 1);
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("count_sq not integral");
  return {num / den};
}

CountValue count_sq_m(long n, long m) {
  if (!(n >= m && m >= 2)) throw DomainError("count_sq_m needs n >= m >= 2");
  mpq_class sum = 0;
  for (long j = m; j <= std::min(n, 2 * m); ++j) {
    mpz_class num = mpz_class((3 * m - 2 * j - 1) * (2 * j - m)) * fac(j - 2) * fac(3 * n - j - m - 1);
    mpz_class den = fac(n - j) * fac(j - m) * fac(j - m + 1) * fac(2 * m - j);
    sum += mpq_class(num, den);
  }
  sum.canonicalize();
  sum *= mpq_class(m);
  sum /= mpq_class(fac(2 * n - m));
  return {require_integer(sum, "count_sq_m")};
}

CountValue count_q(long n) {
  if (n < 1) throw DomainError("count_q needs n >= 1");
  mpz_class num = 2 * pow3(n) * fac(2 * n);
  mpz_class den = fac(n) * fac(n + 2);
  return {num / den};
}

CountValue count_q_boundary(long n, long p) {
  if (p < 1 || n < p - 1) throw DomainError("count_q_boundary needs p >= 1 and n >= p - 1");
  return {require_integer(q_boundary_rational(n, p), "count_q_boundary")};
}

ProbValue prob_root_face(long n, long m) {
  mpq_class q(count_sq_m(n, m).value, count_sq(n).value);
  q.canonicalize();
  return {q};
}

mpq_class expected_m_gons(long n, long m) {
  mpq_class q = prob_root_face(n, m).value * mpq_class(4 * n, m);
  q.canonicalize();
  return q;
}

mpq_class p_n2_closed_form(long n) {
  if (n <= 3) throw DomainError("closed form for P(n,2) needs n >= 4");
  mpz_class num = mpz_class(2 * n - 1) * n * (n - 1) * (n - 2) * (n - 3) * 6;
  mpz_class den = mpz_class(3 * n - 3) * (3 * n - 4) * (3 * n - 5) * (3 * n - 6) * (n - 3);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

PN2Expansion p_n2_expansion(long n) {
  PN2Expansion e;
  e.exact.value = p_n2_closed_form(n);
  e.asymptotic = 4.0 / 27.0 + 10.0 / (27.0 * static_cast<double>(n));
  // residual in exact arithmetic before rendering
  mpq_class asym(4 * n + 10, 27 * n);
  asym.canonicalize();
  mpq_class res = e.exact.value - asym;
  e.residual = res.get_d();
  return e;
}

ProbValue tangle_prob(long n, long p, long N) {
  if (!(N > n && n >= 0 && p >= 1)) throw DomainError("tangle_prob needs N > n >= 0 and p >= 1");
  const long M = N - n;
  if (M < p - 1) return {mpq_class(0)};  // the boundary cannot close up
  mpq_class q = q_boundary_rational(M, p) / mpq_class(count_q(N).value);
  q.canonicalize();
  return {q};
}

double tangle_prob_limit(long n, long p) {
  if (n < 0 || p < 1) throw DomainError("tangle_prob_limit needs n >= 0, p >= 1");
  // (3p)! / (9 p! (2p-1)!) (2/3)^{p-2} 12^{-n}, evaluated in logs
  const double lg = std::lgamma(3.0 * p + 1) - std::lgamma(p + 1.0) - std::lgamma(2.0 * p);
  return std::exp(lg - std::log(9.0) + (p - 2) * std::log(2.0 / 3.0) - n * std::log(12.0));
}

double diagram_prob_with_crossings(long n, long p, long N) {
  mpq_class q = tangle_prob(n, p, N).value;
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  q /= mpq_class(two_n);
  return q.get_d();
}

double expected_rooting_count(long n, long p, long c) {
  if (c <= n) throw DomainError("expected_rooting_count needs c > n");
  return 4.0 * static_cast<double>(c) * diagram_prob_with_crossings(n, p, c);
}

double expected_rooting_count_limit(long n, long p) {
  return 4.0 * std::ldexp(1.0, static_cast<int>(-n)) * tangle_prob_limit(n, p);
}

VolumeBounds volume_bounds_from_twist(long t, long n) {
  if (t < 1 || n < t) throw DomainError("volume bounds need 1 <= t <= n");
  VolumeBounds b;
  b.lower = std::max(0.0, kV3 * static_cast<double>(t - 2) / 2.0);
  b.upper = std::min(10.0 * kV3 * static_cast<double>(t - 1), kV8 * static_cast<double>(n));
  return b;
}

double lower_slope() { return 19.0 * kV3 / 54.0; }
double upper_slope() { return kV8; }
double tetrahedral_slope() { return 190.0 * kV3 / 27.0; }

VolumeBounds expected_volume_bounds(long n) {
  if (n < 2) throw DomainError("expected_volume_bounds needs n >= 2");
  VolumeBounds b;
  b.lower = lower_slope() * static_cast<double>(n) + (10.0 * kV3 / 27.0 - 2.0);
  b.upper = kV8 * static_cast<double>(n);
  return b;
}

double expected_twist(long n) {
  mpq_class t = mpq_class(n) - mpq_class(2 * n) * p_n2_closed_form(n);
  return t.get_d();
}

}  // namespace linklab
