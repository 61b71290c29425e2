#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "linklab/cmap.hpp"
#include "linklab/link_diagram.hpp"

namespace linklab {

// Quadrangulation with one boundary face of degree 2p, rooted so that the
// boundary lies on the right of the root (the face containing alpha(root)).
// crossing_bits, when present, carry one bit per quadrilateral face in
// faces() order (boundary skipped): bit 1 means the pair {d, phi^2(d)}, d
// the least dart of the face, is the over-strand.
struct BoundedQuadrangulation {
  RootedMap map;
  std::int32_t boundary_face = 0;
  std::size_t area = 0;
  std::size_t perimeter = 0;
  std::optional<std::vector<std::uint8_t>> crossing_bits;

  Dart root() const { return map.root(); }
  std::size_t half_perimeter() const { return perimeter / 2; }

  // Boundary = face of alpha(root); no validation beyond bookkeeping.
  static BoundedQuadrangulation from_map(RootedMap m,
                                         std::optional<std::vector<std::uint8_t>> bits = std::nullopt);
};

struct ValidationReport {
  bool ok = true;
  std::string violation;  // name of the first violated invariant
  explicit operator bool() const { return ok; }
};

ValidationReport validate(const BoundedQuadrangulation& k);

// Precomputed traversal plan for one tangle; checks embeddings at any root of
// any target quadrangulation in O(|k|).  Holds scratch space, so use one
// instance per thread.
class Embedder {
 public:
  explicit Embedder(const BoundedQuadrangulation& k);

  // Image of every k dart when the embedding exists.
  bool embeds(const RootedMap& q, Dart q_root, std::vector<Dart>* image = nullptr);
  // Shadow embedding in dual(l) rooted at r, plus crossing agreement.
  bool embeds_with_crossings(const LinkDiagram& l, const RootedMap& dual_l, Dart r);

  const BoundedQuadrangulation& tangle() const noexcept { return k_; }

 private:
  enum Move : std::uint8_t { kAlpha, kNu, kNuInv };
  struct Step {
    Dart from, to;
    Move move;
    bool assign;  // first visit of `to`; otherwise a consistency check
  };
  BoundedQuadrangulation k_;
  std::vector<Step> plan_;
  std::vector<Dart> image_;
  std::vector<std::uint32_t> dart_stamp_, vertex_stamp_;
  std::vector<std::int32_t> vertex_owner_, k_vertex_;
  std::vector<char> in_boundary_;
  std::uint32_t generation_ = 0;
  std::vector<Dart> face_min_;      // least dart of each quad face (bits order)
};

bool embeds_at_root(const BoundedQuadrangulation& k, const RootedMap& q);
bool embeds_with_crossings(const BoundedQuadrangulation& t, const LinkDiagram& l);
std::size_t rooting_count(const BoundedQuadrangulation& t, const LinkDiagram& l);

// Boundary dart with the smallest canonical label: the fixed point where a
// complement is attached.
Dart boundary_anchor(const BoundedQuadrangulation& k);
// Complement of k inside q (k must embed at q's root); rooted at the image of
// the anchor.  Needs area >= 1.
BoundedQuadrangulation cut_complement(const BoundedQuadrangulation& k, const RootedMap& q);
// Inverse of cut_complement: identify the boundaries, anchor on c's root.
RootedMap glue(const BoundedQuadrangulation& k, const BoundedQuadrangulation& c);

// Open the edge of dart x in a quadrangulation into a boundary digon; the
// result is rooted at x.
BoundedQuadrangulation open_edge(const RootedMap& q, Dart x);
// Split the quadrilateral face of d by a new vertex joined to two opposite
// corners (area + 1).
BoundedQuadrangulation split_quad(const BoundedQuadrangulation& k, Dart d);

BoundedQuadrangulation minimal_square_tangle(std::uint8_t bit = 1);
// Area 13, perimeter 8 example: a wheel inside an octagon, refined by splits.
BoundedQuadrangulation area13_perimeter8_example();

struct NamedTangle {
  std::string id;
  BoundedQuadrangulation tangle;
};
std::vector<NamedTangle> forbidden_tangle_library();

// Every rooted bounded quadrangulation of the given area and half-perimeter.
void for_each_bounded_quadrangulation(int area, int half_perimeter,
                                      const std::function<void(const BoundedQuadrangulation&)>& visit);

nlohmann::ordered_json to_json(const BoundedQuadrangulation& k);
BoundedQuadrangulation tangle_from_json(const nlohmann::ordered_json& j);

}  // namespace linklab
