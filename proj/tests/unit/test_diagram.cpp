#include <array>
#include <cmath>
#include <cstdio>
#include <set>

#include "doctest.h"
#include "linklab/census.hpp"
#include "linklab/diagram.hpp"
#include "linklab/random_stream.hpp"
#include "linklab/sampler.hpp"
#include "oracles.hpp"

using namespace linklab;

namespace {

const char* kFig8 = "PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]";
const char* kHopf = "PD[X[4,1,3,2],X[2,3,1,4]]";

// Components by following arc labels through PD crossings: arc a enters at
// position i, leaves at i+2.
std::size_t pd_components(const std::vector<std::array<int, 4>>& xs) {
  std::set<int> arcs;
  for (const auto& x : xs)
    for (int a : x) arcs.insert(a);
  std::set<int> seen;
  std::size_t comps = 0;
  for (int start : arcs) {
    if (seen.count(start)) continue;
    ++comps;
    int a = start;
    while (!seen.count(a)) {
      seen.insert(a);
      // find a crossing slot holding a, move straight across
      int next = -1;
      for (const auto& x : xs)
        for (int i = 0; i < 4 && next < 0; ++i)
          if (x[static_cast<std::size_t>(i)] == a && !seen.count(x[static_cast<std::size_t>((i + 2) % 4)]))
            next = x[static_cast<std::size_t>((i + 2) % 4)];
      if (next < 0) break;
      a = next;
    }
  }
  return comps;
}

}  // namespace

TEST_CASE("face type vectors") {
  const LinkDiagram d7 = seven_crossing_example();
  CHECK(d7.crossing_count() == 7);
  CHECK(face_type(d7)[2] == 4);
  const auto t5 = face_type(torus_diagram(5));
  CHECK(t5[2] == 5);
  CHECK(t5[5] == 2);
  CHECK(t5.total() == 7);
  RandomStream rng(2, 0);
  for (int n : {3, 10, 40}) {
    const LinkDiagram d = assign_crossings(sample_four_valent(n, rng), CrossingMode::uniform, rng);
    const auto f = face_type(d);
    CHECK(f.total() == static_cast<std::size_t>(n + 2));
    CHECK(f.weighted() == static_cast<std::size_t>(4 * n));
    CHECK(f.from_two(static_cast<std::size_t>(n)).size() == static_cast<std::size_t>(3 * n - 1));
  }
}

TEST_CASE("twist number") {
  const LinkDiagram d7 = seven_crossing_example();
  CHECK(twist_number(d7) == 3);
  CHECK(twist_number(torus_diagram(12)) == 1);
  RandomStream rng(5, 0);
  int bigon_free = 0;
  for (int i = 0; i < 300 && bigon_free < 3; ++i) {
    const LinkDiagram d = alternating_diagram(sample_sq(12, rng, 1ULL << 32));
    if (face_type(d)[2] != 0) continue;
    ++bigon_free;
    CHECK(twist_number(d) == 12);
  }
  // twist regions need a 3-edge-connected shadow
  for (const auto& m : enumerate_all(3, true))
    if (!edge_connectivity_at_least_3(m)) {
      CHECK_THROWS_AS(twist_number(LinkDiagram(m, std::vector<std::uint8_t>(3, 0))), ClassificationError);
      break;
    }
}

TEST_CASE("torus shadows") {
  const RootedMap t6 = torus_shadow(6);
  CHECK(is_torus_2n(t6));
  for (std::size_t r = 0; r < t6.dart_count(); ++r) CHECK(is_torus_2n(t6.rerooted(static_cast<Dart>(r))));
  CHECK_FALSE(is_torus_2n(seven_crossing_example()));
  // n = 4: exactly two rooted 3-edge-connected shadows are T(2,4)
  std::size_t flagged = 0;
  for (const auto& m : enumerate_all(4, true))
    if (edge_connectivity_at_least_3(m) && is_torus_2n(m)) ++flagged;
  CHECK(flagged == 2);
  CHECK(oracle::rooting_orbit(t6).size() == 2);
}

TEST_CASE("components") {
  CHECK(component_count(parse_pd(kHopf)) == 2);
  for (int n = 2; n <= 9; ++n) CHECK(component_count(torus_diagram(n)) == (n % 2 == 0 ? 2u : 1u));
  CHECK(component_count(parse_pd(kFig8)) == 1);
  // strand tracing on PD labels agrees
  RandomStream rng(6, 0);
  for (int i = 0; i < 20; ++i) {
    const LinkDiagram d = assign_crossings(sample_four_valent(8, rng), CrossingMode::uniform, rng);
    std::vector<std::array<int, 4>> xs;
    const std::string pd = export_pd(d);
    const LinkDiagram back = parse_pd(pd);
    CHECK(component_count(back) == component_count(d));
    std::size_t pos = 0;
    while ((pos = pd.find("X[", pos)) != std::string::npos) {
      std::array<int, 4> x{};
      std::sscanf(pd.c_str() + pos, "X[%d,%d,%d,%d]", &x[0], &x[1], &x[2], &x[3]);
      xs.push_back(x);
      ++pos;
    }
    CHECK(pd_components(xs) == component_count(d));
  }
}

TEST_CASE("classification") {
  RandomStream rng(7, 0);
  for (int i = 0; i < 20; ++i) {
    const RootedMap s = sample_sq(7, rng, 1ULL << 32);
    const LinkDiagram d = alternating_diagram(s);
    CHECK(classify(d) == (is_torus_2n(s) ? DiagramClass::torus_2n : DiagramClass::prime_alternating_candidate));
  }
  CHECK(classify(torus_diagram(8)) == DiagramClass::torus_2n);
  for (const auto& m : enumerate_all(3, true))
    if (!edge_connectivity_at_least_3(m)) {
      CHECK(classify(assign_crossings(m, CrossingMode::uniform, rng)) == DiagramClass::general);
      CHECK_THROWS_AS(volume_bounds(LinkDiagram(m, std::vector<std::uint8_t>(3, 0))), ClassificationError);
    }
  CHECK(to_string(DiagramClass::torus_2n) == "torus_2n");
}

TEST_CASE("volume bounds") {
  const auto t9 = volume_bounds(torus_diagram(9));
  CHECK(t9.lower == 0);
  CHECK(t9.upper == 0);
  const auto b = volume_bounds(seven_crossing_example());
  CHECK(b.lower == doctest::Approx(0.50747).epsilon(1e-5));
  CHECK(b.upper == doctest::Approx(20.2988).epsilon(1e-5));
}

TEST_CASE("PD codes") {
  const LinkDiagram hopf = parse_pd(kHopf);
  CHECK(hopf.crossing_count() == 2);
  const std::string pd = export_pd(hopf);
  CHECK(export_pd(hopf) == pd);
  std::set<int> arcs;
  for (char c : pd)
    if (c >= '1' && c <= '9') arcs.insert(c - '0');
  CHECK(arcs.size() == 4);
  CHECK(export_pd(parse_pd(pd)) == pd);
  CHECK(is_alternating(hopf));

  RandomStream rng(9, 0);
  for (int i = 0; i < 30; ++i) {
    const LinkDiagram d = assign_crossings(sample_four_valent(1 + i % 9, rng), CrossingMode::uniform, rng);
    const std::string code = export_pd(d);
    const LinkDiagram back = parse_pd(code);
    CHECK(face_type(back).counts == face_type(d).counts);
    CHECK(export_pd(back) == code);
    CHECK(canonical_form(back.shadow()).signature.size() == canonical_form(d.shadow()).signature.size());
  }
  for (const char* code : {kFig8, "PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]"}) {
    const LinkDiagram d = parse_pd(code);
    CHECK(is_alternating(d));
    CHECK(edge_connectivity_at_least_3(d.shadow()));
  }
  CHECK(twist_number(parse_pd(kFig8)) == 2);
  CHECK(is_torus_2n(parse_pd("PD[X[1,4,2,5],X[3,6,4,1],X[5,2,6,3]]")));
  CHECK_THROWS_AS(parse_pd("PD[]"), FormatError);
  CHECK_THROWS_AS(parse_pd("PD[X[1,2,3,4]]"), FormatError);
}

TEST_CASE("standard constructions") {
  for (int n = 2; n <= 8; ++n) {
    const RootedMap t = torus_shadow(n);
    CHECK(t.vertex_count() == static_cast<std::size_t>(n));
    CHECK(t.is_four_valent());
    CHECK(oracle::euler_characteristic(t) == 2);
  }
  CHECK_THROWS_AS(torus_shadow(1), DomainError);
  const RootedMap p = pretzel_shadow({3, 2, 2});
  CHECK(p.vertex_count() == 7);
  CHECK(edge_connectivity_at_least_3(p));
  CHECK(is_alternating(seven_crossing_example()));
}
