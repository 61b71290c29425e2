#include <algorithm>

#include "linklab/diagram.hpp"
#include "linklab/tangle.hpp"

namespace linklab {

BoundedQuadrangulation BoundedQuadrangulation::from_map(RootedMap m,
                                                        std::optional<std::vector<std::uint8_t>> bits) {
  const FaceList fl = faces(m);
  BoundedQuadrangulation k{std::move(m), fl.root_face, fl.cycles.size() - 1,
                           fl.degree(static_cast<std::size_t>(fl.root_face)), std::move(bits)};
  return k;
}

ValidationReport validate(const BoundedQuadrangulation& k) {
  const FaceList fl = faces(k.map);
  auto fail = [](const char* what) { return ValidationReport{false, what}; };
  if (k.boundary_face < 0 || static_cast<std::size_t>(k.boundary_face) >= fl.cycles.size())
    return fail("boundary-face-index");
  if (fl.root_face != k.boundary_face) return fail("root-on-boundary");
  const auto& boundary = fl.cycles[static_cast<std::size_t>(k.boundary_face)];
  if (boundary.size() % 2 != 0) return fail("even-perimeter");
  if (boundary.size() != k.perimeter) return fail("perimeter");
  for (std::size_t f = 0; f < fl.cycles.size(); ++f)
    if (static_cast<std::int32_t>(f) != k.boundary_face && fl.degree(f) != 4) return fail("quadrilateral-faces");
  if (fl.cycles.size() - 1 != k.area) return fail("area");
  std::vector<char> seen(k.map.vertex_count(), 0);
  for (Dart d : boundary) {
    char& s = seen[static_cast<std::size_t>(k.map.vertex(d))];
    if (s) return fail("self-avoiding");
    s = 1;
  }
  if (k.crossing_bits) {
    if (k.crossing_bits->size() != k.area) return fail("crossing-bits-length");
    for (auto b : *k.crossing_bits)
      if (b > 1) return fail("crossing-bits-values");
  }
  return {};
}

BoundedQuadrangulation open_edge(const RootedMap& q, Dart x) {
  const std::size_t n = q.dart_count();
  const Dart ax = q.alpha(x);
  const auto y = static_cast<Dart>(n), z = static_cast<Dart>(n + 1);
  std::vector<Dart> alpha(q.alpha_perm().begin(), q.alpha_perm().end());
  std::vector<Dart> nu(q.nu_perm().begin(), q.nu_perm().end());
  alpha.resize(n + 2);
  nu.resize(n + 2);
  auto A = [&](Dart d) -> Dart& { return alpha[static_cast<std::size_t>(d)]; };
  auto N = [&](Dart d) -> Dart& { return nu[static_cast<std::size_t>(d)]; };
  A(x) = y;
  A(y) = x;
  A(z) = ax;
  A(ax) = z;
  // x keeps its vertex; z enters right after x, y right after alpha(x)
  N(z) = q.nu(x);
  N(x) = z;
  N(y) = q.nu(ax);
  N(ax) = y;
  return BoundedQuadrangulation::from_map(RootedMap(std::move(alpha), std::move(nu), x));
}

BoundedQuadrangulation split_quad(const BoundedQuadrangulation& k, Dart d0) {
  const RootedMap& m = k.map;
  const FaceList fl = faces(m);
  if (fl.face_of[static_cast<std::size_t>(d0)] == k.boundary_face) throw DomainError("cannot split the boundary");
  const Dart d1 = m.phi(d0), d2 = m.phi(d1), d3 = m.phi(d2);
  const std::size_t n = m.dart_count();
  const auto u1 = static_cast<Dart>(n), w1 = u1 + 1, u3 = u1 + 2, w3 = u1 + 3;
  std::vector<Dart> alpha(m.alpha_perm().begin(), m.alpha_perm().end());
  std::vector<Dart> nu(m.nu_perm().begin(), m.nu_perm().end());
  alpha.resize(n + 4);
  nu.resize(n + 4);
  auto A = [&](Dart d) -> Dart& { return alpha[static_cast<std::size_t>(d)]; };
  auto N = [&](Dart d) -> Dart& { return nu[static_cast<std::size_t>(d)]; };
  A(u1) = w1;
  A(w1) = u1;
  A(u3) = w3;
  A(w3) = u3;
  N(m.alpha(d0)) = u1;
  N(u1) = d1;
  N(m.alpha(d2)) = u3;
  N(u3) = d3;
  N(w1) = w3;
  N(w3) = w1;
  auto out = BoundedQuadrangulation::from_map(RootedMap(std::move(alpha), std::move(nu), m.root()));
  if (k.crossing_bits) out.crossing_bits = std::vector<std::uint8_t>(out.area, 0);
  return out;
}

BoundedQuadrangulation minimal_square_tangle(std::uint8_t bit) {
  // 4-cycle; the root runs along it with the outer face on its right
  RootedMap sq = from_rotation_system({{1, 3}, {2, 0}, {3, 1}, {0, 2}});
  auto k = BoundedQuadrangulation::from_map(sq, std::vector<std::uint8_t>{bit});
  return k;
}

BoundedQuadrangulation area13_perimeter8_example() {
  std::vector<std::vector<int>> adj(9);
  const int c = 8;
  for (int i = 0; i < 8; ++i) {
    const int next = (i + 1) % 8, prev = (i + 7) % 8;
    if (i % 2 == 0) adj[static_cast<std::size_t>(i)] = {next, c, prev};
    else adj[static_cast<std::size_t>(i)] = {next, prev};
  }
  adj[c] = {0, 2, 4, 6};
  RootedMap wheel = from_rotation_system(adj);
  const FaceList fl = faces(wheel);
  Dart root = -1;
  for (std::size_t d = 0; d < wheel.dart_count() && root < 0; ++d)
    if (fl.degree(static_cast<std::size_t>(fl.face_of[static_cast<std::size_t>(wheel.alpha(static_cast<Dart>(d)))])) == 8)
      root = static_cast<Dart>(d);
  auto k = BoundedQuadrangulation::from_map(wheel.rerooted(root));
  // refine: split the quadrilateral holding the newest dart, then the one
  // holding the root's neighbour, alternating around the wheel
  for (int step = 0; step < 9; ++step) {
    const FaceList f = faces(k.map);
    std::size_t target = 0;
    for (std::size_t face = 0, seen = 0; face < f.cycles.size(); ++face) {
      if (static_cast<std::int32_t>(face) == k.boundary_face) continue;
      if (seen++ == static_cast<std::size_t>(step) % k.area) {
        target = face;
        break;
      }
    }
    k = split_quad(k, f.cycles[target][0]);
  }
  return k;
}

namespace {

BoundedQuadrangulation opened_with_bits(const LinkDiagram& d, Dart x) {
  // faces of dual(shadow) are the crossings, with the same darts
  BoundedQuadrangulation k = open_edge(dual(d.shadow()), x);
  const FaceList fl = faces(k.map);
  std::vector<std::uint8_t> bits;
  for (std::size_t f = 0; f < fl.cycles.size(); ++f) {
    if (static_cast<std::int32_t>(f) == k.boundary_face) continue;
    bits.push_back(d.is_over(fl.cycles[f][0]) ? 1 : 0);
  }
  k.crossing_bits = std::move(bits);
  return k;
}

}  // namespace

std::vector<NamedTangle> forbidden_tangle_library() {
  std::vector<NamedTangle> lib;
  const LinkDiagram hopf = torus_diagram(2);
  lib.push_back({"hopf_clasp", opened_with_bits(hopf, 0)});
  lib.push_back({"hopf_clasp_split", opened_with_bits(hopf.with_bit_flipped(0), 0)});
  lib.push_back({"trefoil_summand", opened_with_bits(torus_diagram(3), 0)});
  const LinkDiagram fig8 = parse_pd("PD[X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]]");
  lib.push_back({"figure_eight_summand", opened_with_bits(fig8, fig8.shadow().root())});
  return lib;
}

void for_each_bounded_quadrangulation(int area, int half_perimeter,
                                      const std::function<void(const BoundedQuadrangulation&)>& visit) {
  if (area < 0 || half_perimeter < 1) throw DomainError("need area >= 0 and p >= 1");
  // dual side: boundary face -> root vertex of degree 2p, quads -> 4-valent
  for_each_rooted_with_root_degree(2 * half_perimeter, area, [&](const RootedMap& d) {
    RootedMap k = dual(d).rerooted(d.alpha(d.root()));
    auto bq = BoundedQuadrangulation::from_map(std::move(k));
    if (validate(bq)) visit(bq);
  });
}

nlohmann::ordered_json to_json(const BoundedQuadrangulation& k) {
  auto j = to_json(k.map);
  j["boundary_face"] = k.boundary_face;
  if (k.crossing_bits) j["crossing_bits"] = std::vector<int>(k.crossing_bits->begin(), k.crossing_bits->end());
  return j;
}

BoundedQuadrangulation tangle_from_json(const nlohmann::ordered_json& j) {
  RootedMap m = map_from_json(j);
  std::optional<std::vector<std::uint8_t>> bits;
  try {
    if (j.contains("crossing_bits")) {
      const auto v = j.at("crossing_bits").get<std::vector<int>>();
      bits = std::vector<std::uint8_t>(v.begin(), v.end());
    }
    auto k = BoundedQuadrangulation::from_map(std::move(m), std::move(bits));
    if (j.contains("boundary_face")) k.boundary_face = j.at("boundary_face").get<std::int32_t>();
    return k;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad tangle json: ") + e.what());
  }
}

}  // namespace linklab
