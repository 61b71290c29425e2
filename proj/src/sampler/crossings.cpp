#include <stdexcept>

#include "linklab/sampler.hpp"

namespace linklab {

LinkDiagram::LinkDiagram(RootedMap shadow, std::vector<std::uint8_t> over_bits)
    : shadow_(std::move(shadow)), bits_(std::move(over_bits)) {
  if (!shadow_.is_four_valent()) throw InvalidMapError("a link diagram needs a 4-valent shadow");
  if (bits_.size() != shadow_.vertex_count()) throw InvalidMapError("one crossing bit per vertex required");
  for (auto& b : bits_)
    if (b > 1) throw InvalidMapError("crossing bits must be 0 or 1");
}

bool LinkDiagram::is_over(Dart d) const {
  const std::int32_t v = shadow_.vertex(d);
  const Dart dmin = shadow_.vertex_min_dart()[static_cast<std::size_t>(v)];
  const bool on_min_pair = d == dmin || d == shadow_.nu(shadow_.nu(dmin));
  return on_min_pair == (bits_[static_cast<std::size_t>(v)] == 1);
}

LinkDiagram LinkDiagram::with_bit_flipped(std::size_t v) const {
  auto bits = bits_;
  bits.at(v) ^= 1;
  return {shadow_, std::move(bits)};
}

nlohmann::ordered_json to_json(const LinkDiagram& d) {
  auto j = to_json(d.shadow());
  std::vector<int> bits(d.over_bits().begin(), d.over_bits().end());
  j["crossings"] = bits;
  return j;
}

LinkDiagram diagram_from_json(const nlohmann::ordered_json& j) {
  RootedMap m = map_from_json(j);
  try {
    const auto bits = j.at("crossings").get<std::vector<int>>();
    return {std::move(m), std::vector<std::uint8_t>(bits.begin(), bits.end())};
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad diagram json: ") + e.what());
  }
}

LinkDiagram alternating_diagram(const RootedMap& m) {
  if (!m.is_four_valent()) throw InvalidMapError("crossings need a 4-valent map");
  const std::size_t n = m.dart_count();
  // state[d] = 1 when d is on the over-strand at its vertex; crossing an
  // edge and turning by one step both flip it
  std::vector<signed char> state(n, -1);
  std::vector<Dart> queue{m.root()};
  state[static_cast<std::size_t>(m.root())] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Dart d = queue[head];
    const signed char want = static_cast<signed char>(1 - state[static_cast<std::size_t>(d)]);
    for (Dart e : {m.alpha(d), m.nu(d)}) {
      signed char& s = state[static_cast<std::size_t>(e)];
      if (s < 0) {
        s = want;
        queue.push_back(e);
      } else if (s != want) {
        throw std::logic_error("alternating assignment is inconsistent");
      }
    }
  }
  std::vector<std::uint8_t> bits(m.vertex_count());
  for (std::size_t v = 0; v < bits.size(); ++v)
    bits[v] = static_cast<std::uint8_t>(state[static_cast<std::size_t>(m.vertex_min_dart()[v])]);
  return {m, std::move(bits)};
}

LinkDiagram assign_crossings(const RootedMap& m, CrossingMode mode, RandomStream& rng) {
  if (mode == CrossingMode::alternating) return alternating_diagram(m);
  if (!m.is_four_valent()) throw InvalidMapError("crossings need a 4-valent map");
  std::vector<std::uint8_t> bits(m.vertex_count());
  for (auto& b : bits) b = rng.coin() ? 1 : 0;
  return {m, std::move(bits)};
}

}  // namespace linklab
