#pragma once

#include <cstdint>
#include <vector>

#include "linklab/cmap.hpp"

namespace linklab {

// 4-valent shadow plus one bit per vertex (vertex order = order of least
// darts).  Bit 1 at v: the strand through {d, nu^2(d)}, d the least dart at
// v, is the over-strand.
class LinkDiagram {
 public:
  LinkDiagram(RootedMap shadow, std::vector<std::uint8_t> over_bits);

  const RootedMap& shadow() const noexcept { return shadow_; }
  const std::vector<std::uint8_t>& over_bits() const noexcept { return bits_; }
  std::size_t crossing_count() const noexcept { return shadow_.vertex_count(); }

  // True when dart d belongs to the over-strand at its vertex.
  bool is_over(Dart d) const;

  LinkDiagram rerooted(Dart r) const { return {shadow_.rerooted(r), bits_}; }
  LinkDiagram with_bit_flipped(std::size_t v) const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.shadow_ == b.shadow_ && a.bits_ == b.bits_;
  }

 private:
  RootedMap shadow_;
  std::vector<std::uint8_t> bits_;
};

nlohmann::ordered_json to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const nlohmann::ordered_json& j);

}  // namespace linklab
