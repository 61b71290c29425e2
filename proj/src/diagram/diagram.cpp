#include <unordered_set>

#include "linklab/diagram.hpp"

namespace linklab {

std::size_t FaceTypeVector::total() const {
  std::size_t s = 0;
  for (std::size_t c : counts) s += c;
  return s;
}

std::size_t FaceTypeVector::weighted() const {
  std::size_t s = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) s += i * counts[i];
  return s;
}

std::vector<std::size_t> FaceTypeVector::from_two(std::size_t n) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 2; i <= std::max<std::size_t>(3 * n, 2); ++i) out.push_back((*this)[i]);
  return out;
}

FaceTypeVector face_type(const RootedMap& shadow) {
  FaceTypeVector f;
  f.counts.assign(3 * shadow.vertex_count() + 1, 0);
  std::vector<char> seen(shadow.dart_count(), 0);
  for (std::size_t d = 0; d < shadow.dart_count(); ++d) {
    if (seen[d]) continue;
    std::size_t k = 0;
    Dart x = static_cast<Dart>(d);
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      ++k;
      x = shadow.phi(x);
    } while (x != static_cast<Dart>(d));
    if (k >= f.counts.size()) f.counts.resize(k + 1, 0);
    ++f.counts[k];
  }
  return f;
}

FaceTypeVector face_type(const LinkDiagram& d) { return face_type(d.shadow()); }

std::size_t component_count(const RootedMap& m) {
  // strand step: cross the edge, continue straight through the crossing
  std::vector<char> seen(m.dart_count(), 0);
  std::size_t cycles = 0;
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    if (seen[d]) continue;
    ++cycles;
    Dart x = static_cast<Dart>(d);
    do {
      seen[static_cast<std::size_t>(x)] = 1;
      x = m.nu(m.nu(m.alpha(x)));
    } while (x != static_cast<Dart>(d));
  }
  return cycles / 2;
}

std::size_t component_count(const LinkDiagram& d) { return component_count(d.shadow()); }

bool is_alternating(const LinkDiagram& d) {
  const RootedMap& m = d.shadow();
  for (std::size_t x = 0; x < m.dart_count(); ++x)
    if (d.is_over(static_cast<Dart>(x)) == d.is_over(m.alpha(static_cast<Dart>(x)))) return false;
  return true;
}

bool is_torus_2n(const RootedMap& shadow) {
  const std::size_t n = shadow.vertex_count();
  if (n < 2 || !shadow.is_four_valent()) return false;
  if (face_type(shadow)[2] != (n == 2 ? 4 : n)) return false;
  const RootedMap ring = torus_shadow(static_cast<int>(n));
  const auto target = canonical_form(shadow).signature;
  for (std::size_t r = 0; r < ring.dart_count(); ++r)
    if (canonical_signature(ring, static_cast<Dart>(r)) == target) return true;
  return false;
}

bool is_torus_2n(const LinkDiagram& d) { return is_torus_2n(d.shadow()); }

long twist_number(const LinkDiagram& d) {
  if (is_torus_2n(d)) return 1;
  if (!edge_connectivity_at_least_3(d.shadow()))
    throw ClassificationError("twist number needs a 3-edge-connected shadow");
  return static_cast<long>(d.crossing_count()) - static_cast<long>(face_type(d)[2]);
}

DiagramClass classify(const LinkDiagram& d) {
  if (is_torus_2n(d)) return DiagramClass::torus_2n;
  if (is_alternating(d) && edge_connectivity_at_least_3(d.shadow()))
    return DiagramClass::prime_alternating_candidate;
  return DiagramClass::general;
}

std::string to_string(DiagramClass c) {
  switch (c) {
    case DiagramClass::prime_alternating_candidate: return "prime_alternating_candidate";
    case DiagramClass::torus_2n: return "torus_2n";
    case DiagramClass::general: return "general";
  }
  return "general";
}

VolumeBounds volume_bounds(const LinkDiagram& d) {
  switch (classify(d)) {
    case DiagramClass::torus_2n: return VolumeBounds{};
    case DiagramClass::prime_alternating_candidate:
      return volume_bounds_from_twist(twist_number(d), static_cast<long>(d.crossing_count()));
    case DiagramClass::general: break;
  }
  throw ClassificationError("volume bounds are only defined for prime alternating or torus diagrams");
}

}  // namespace linklab
