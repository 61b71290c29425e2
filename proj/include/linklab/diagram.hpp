#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linklab/census.hpp"
#include "linklab/link_diagram.hpp"

namespace linklab {

// counts[i] = number of faces of degree i (index 0 unused); sized 3n+1 so
// that F_2..F_3n are addressable, larger degrees (only possible with loops)
// extend the vector.
struct FaceTypeVector {
  std::vector<std::size_t> counts;

  std::size_t operator[](std::size_t i) const { return i < counts.size() ? counts[i] : 0; }
  std::size_t total() const;
  std::size_t weighted() const;  // sum of i * F_i
  // (F_2, F_3, ..., F_3n) as a flat list for lexicographic ordering.
  std::vector<std::size_t> from_two(std::size_t n) const;
};

FaceTypeVector face_type(const LinkDiagram& d);
FaceTypeVector face_type(const RootedMap& shadow);

std::size_t component_count(const LinkDiagram& d);
std::size_t component_count(const RootedMap& shadow);

bool is_alternating(const LinkDiagram& d);
bool is_torus_2n(const LinkDiagram& d);
bool is_torus_2n(const RootedMap& shadow);
long twist_number(const LinkDiagram& d);

enum class DiagramClass { prime_alternating_candidate, torus_2n, general };
DiagramClass classify(const LinkDiagram& d);
std::string to_string(DiagramClass c);

VolumeBounds volume_bounds(const LinkDiagram& d);

// Standard constructions.  Vertex v owns darts 4v..4v+3, counterclockwise
// (up-right, up-left, down-left, down-right).
RootedMap torus_shadow(int n);       // T(2,n), n >= 2; n = 2 is the Hopf shadow
LinkDiagram torus_diagram(int n);    // alternating
RootedMap pretzel_shadow(const std::vector<int>& columns);
LinkDiagram pretzel_diagram(const std::vector<int>& columns);  // alternating
// The 7-crossing, 4-bigon, 3-twist-region example diagram: alternating P(3,2,2).
LinkDiagram seven_crossing_example();

// Planar diagram code, "PD[X[a,b,c,d],...]".  Each X starts at the incoming
// under-strand and runs counterclockwise; arcs are numbered along the
// strands starting with the root dart's edge.
std::string export_pd(const LinkDiagram& d);
LinkDiagram parse_pd(const std::string& text);

}  // namespace linklab
