#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "linklab/errors.hpp"

namespace linklab {

using Dart = std::int32_t;

// Rooted combinatorial planar map.  alpha pairs the two darts of an edge,
// nu rotates counterclockwise around a vertex, phi = nu o alpha walks a face.
// Construction validates: alpha fixed-point free involution, nu a
// permutation, connectivity and genus 0.  Immutable afterwards.
class RootedMap {
 public:
  RootedMap(std::vector<Dart> alpha, std::vector<Dart> nu, Dart root);

  // Same checks, but returns nullopt instead of throwing.
  static std::optional<RootedMap> try_make(std::vector<Dart> alpha, std::vector<Dart> nu,
                                           Dart root);

  std::size_t dart_count() const noexcept { return alpha_.size(); }
  std::size_t edge_count() const noexcept { return alpha_.size() / 2; }
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t face_count() const noexcept { return face_count_; }
  Dart root() const noexcept { return root_; }

  Dart alpha(Dart d) const { return alpha_[static_cast<std::size_t>(d)]; }
  Dart nu(Dart d) const { return nu_[static_cast<std::size_t>(d)]; }
  Dart nu_inv(Dart d) const { return nu_inv_[static_cast<std::size_t>(d)]; }
  Dart phi(Dart d) const { return nu(alpha(d)); }

  std::span<const Dart> alpha_perm() const noexcept { return alpha_; }
  std::span<const Dart> nu_perm() const noexcept { return nu_; }
  std::span<const Dart> nu_inv_perm() const noexcept { return nu_inv_; }

  // Vertex index of each dart; vertices are numbered by their least dart.
  std::span<const std::int32_t> vertex_of() const noexcept { return vertex_of_; }
  std::int32_t vertex(Dart d) const { return vertex_of_[static_cast<std::size_t>(d)]; }
  // Least dart of each vertex, in vertex order.
  std::span<const Dart> vertex_min_dart() const noexcept { return vertex_min_; }
  std::size_t degree(std::int32_t v) const;

  bool is_four_valent() const noexcept;
  RootedMap rerooted(Dart r) const;

  friend bool operator==(const RootedMap& a, const RootedMap& b) {
    return a.root_ == b.root_ && a.alpha_ == b.alpha_ && a.nu_ == b.nu_;
  }

 private:
  struct Unchecked {};
  RootedMap(Unchecked, std::vector<Dart> alpha, std::vector<Dart> nu, Dart root);
  std::string problem() const;  // empty when valid

  std::vector<Dart> alpha_;
  std::vector<Dart> nu_;
  std::vector<Dart> nu_inv_;
  std::vector<std::int32_t> vertex_of_;
  std::vector<Dart> vertex_min_;
  std::size_t vertex_count_ = 0;
  std::size_t face_count_ = 0;
  Dart root_ = 0;
};

struct FaceList {
  // Cycles of phi, ordered by least dart; each cycle starts at its least dart.
  std::vector<std::vector<Dart>> cycles;
  std::vector<std::int32_t> face_of;
  // The face containing alpha(root): the face on the right of the root.
  std::int32_t root_face = 0;

  std::size_t degree(std::size_t f) const { return cycles[f].size(); }
};

FaceList faces(const RootedMap& m);

RootedMap dual(const RootedMap& m);
RootedMap medial(const RootedMap& m);

struct CanonicalForm {
  std::vector<std::int32_t> labels;     // dart -> canonical index
  std::vector<std::int32_t> signature;  // n_darts, then (alpha, nu) per index
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.signature == b.signature;
  }
};

CanonicalForm canonical_form(const RootedMap& m);
// Signature of m re-rooted at r, without building the re-rooted map.
std::vector<std::int32_t> canonical_signature(const RootedMap& m, Dart r);
// Builds the map encoded by a signature (root = dart 0).
RootedMap from_signature(std::span<const std::int32_t> sig);

struct SignatureHash {
  std::size_t operator()(const std::vector<std::int32_t>& s) const noexcept;
};

// Number of darts r such that re-rooting at r gives the same rooted map.
std::size_t automorphism_count(const RootedMap& m);
bool is_asymmetric(const RootedMap& m);

bool edge_connectivity_at_least_3(const RootedMap& m);
bool has_loop(const RootedMap& m);
// Loopless without cut vertex; the two one-edge maps also count.
bool is_nonseparable(const RootedMap& m);

// Planar maps with one vertex per adjacency list; adj[v] lists neighbours of v
// counterclockwise.  Simple graphs only.  Root: first dart of vertex 0.
RootedMap from_rotation_system(const std::vector<std::vector<int>>& adj);

// Induced submap on the darts flagged in keep (alpha-closed); the rotation
// skips dropped darts.  Darts are renumbered in increasing order.
// Returns nullopt when the result is disconnected or not planar.
std::optional<RootedMap> restrict_to_darts(const RootedMap& m, const std::vector<bool>& keep,
                                           Dart root, std::vector<Dart>* old_to_new = nullptr);

// Exhaustive generation by incremental dart closure along the canonical
// breadth-first order.  four_valent: n = vertex count; otherwise n = edge
// count.  Throws SizeLimitError when n exceeds cap.
inline constexpr int kDefaultEnumerationCap = 5;
std::vector<RootedMap> enumerate_all(int n, bool four_valent, int cap = kDefaultEnumerationCap);

// Rooted planar maps whose root vertex has degree root_degree and whose
// other `others` vertices are 4-valent (duals of quadrangulations with one
// boundary face of that degree).
void for_each_rooted_with_root_degree(int root_degree, int others,
                                      const std::function<void(const RootedMap&)>& visit);

// Rooted planar maps with a given number of edges by root-edge deletion
// (bridge / non-bridge); streams the top level through visit.
void for_each_planar_map(int edges, const std::function<void(const RootedMap&)>& visit);

nlohmann::ordered_json to_json(const RootedMap& m);
RootedMap map_from_json(const nlohmann::ordered_json& j);

}  // namespace linklab
