#pragma once

#include <cstdint>
#include <vector>

#include "linklab/cmap.hpp"
#include "linklab/link_diagram.hpp"
#include "linklab/random_stream.hpp"

namespace linklab {

// Plane tree as a contour word (1 = step to a new child, 0 = step back to
// the parent) with labels per vertex in preorder and a sign.
struct LabeledTree {
  std::vector<std::uint8_t> contour;
  std::vector<int> labels;
  int epsilon = 1;

  std::size_t edge_count() const noexcept { return contour.size() / 2; }
  bool valid() const;
};

LabeledTree sample_plane_tree(int n, RandomStream& rng);
// Plane tree with uniform label increments in {-1,0,1} and a uniform sign.
LabeledTree sample_labeled_tree(int n, RandomStream& rng);

// Closure of a well-labeled tree: the rooted quadrangulation with n faces.
RootedMap closure(const LabeledTree& t);
// True when the closure has no multiple edges, i.e. its dual 4-valent map is
// 3-edge-connected (for n >= 2).  Cheaper than building the map.
bool closure_is_simple(const LabeledTree& t);

RootedMap sample_quadrangulation(int n, RandomStream& rng);
RootedMap sample_four_valent(int n, RandomStream& rng);

inline constexpr int kSqFeasibilityCap = 16;

struct SqDraw {
  RootedMap map;
  std::uint64_t tries;  // draws from Q(n) consumed, including the accepted one
};

// Uniform on SQ(n) by rejection from Q(n).
SqDraw sample_sq_counted(int n, RandomStream& rng, std::uint64_t max_tries,
                         int cap = kSqFeasibilityCap);
RootedMap sample_sq(int n, RandomStream& rng, std::uint64_t max_tries,
                    int cap = kSqFeasibilityCap);

enum class CrossingMode { uniform, alternating };

LinkDiagram assign_crossings(const RootedMap& m, CrossingMode mode, RandomStream& rng);
// Alternating assignment with the root dart on the over-strand.
LinkDiagram alternating_diagram(const RootedMap& m);

}  // namespace linklab
