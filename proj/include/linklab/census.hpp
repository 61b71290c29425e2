#pragma once

#include <string>

#include <gmpxx.h>

#include "linklab/errors.hpp"

namespace linklab {

struct CountValue {
  mpz_class value;
  std::string str() const { return value.get_str(); }
  friend bool operator==(const CountValue& a, const CountValue& b) { return a.value == b.value; }
};

struct ProbValue {
  mpq_class value;
  double float_view() const { return value.get_d(); }
  std::string numerator() const { return value.get_num().get_str(); }
  std::string denominator() const { return value.get_den().get_str(); }
  friend bool operator==(const ProbValue& a, const ProbValue& b) { return a.value == b.value; }
};

// Regular ideal hyperbolic tetrahedron and octahedron volumes.
inline constexpr double kV3 = 1.01494160640965362502;
inline constexpr double kV8 = 3.66386237670887606022;

struct VolumeBounds {
  double lower = 0;
  double upper = 0;
  static constexpr double v3 = kV3;
  static constexpr double v8 = kV8;
};

// n! as a big integer (memoised for small n).
const mpz_class& factorial(unsigned long n);
// a!/b! for a >= b.
mpz_class factorial_ratio(unsigned long a, unsigned long b);

// Nonseparable planar maps with n edges = 3-edge-connected 4-valent maps
// with n vertices.
CountValue count_sq(long n);
// Same, with root valence (root face size on the 4-valent side) m.
CountValue count_sq_m(long n, long m);
// Rooted quadrangulations with n faces (rooted 4-valent maps, n vertices).
CountValue count_q(long n);
// Rooted quadrangulations with n inner faces and one self-avoiding boundary
// face of degree 2p, rooted on the boundary.
CountValue count_q_boundary(long n, long p);

ProbValue prob_root_face(long n, long m);
// (4n/m) * P(n, m): the main term of the expected number of m-gons.
mpq_class expected_m_gons(long n, long m);

struct PN2Expansion {
  ProbValue exact;
  double asymptotic = 0;
  double residual = 0;
};
// Exact P(n,2) from its rational closed form, 4/27 + 10/(27n), and the gap.
PN2Expansion p_n2_expansion(long n);
mpq_class p_n2_closed_form(long n);

// |Q(N-n, p)| / |Q(N)|.
ProbValue tangle_prob(long n, long p, long N);
double tangle_prob_limit(long n, long p);
double diagram_prob_with_crossings(long n, long p, long N);
double expected_rooting_count(long n, long p, long c);
double expected_rooting_count_limit(long n, long p);

VolumeBounds volume_bounds_from_twist(long t, long n);
VolumeBounds expected_volume_bounds(long n);
double lower_slope();         // 19 v3 / 54
double upper_slope();         // v8
double tetrahedral_slope();   // 190 v3 / 27, the bound before the octahedral one
double expected_twist(long n);

}  // namespace linklab
