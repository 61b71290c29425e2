#include "linklab/cmap.hpp"

namespace linklab {

nlohmann::ordered_json to_json(const RootedMap& m) {
  nlohmann::ordered_json j;
  j["n_darts"] = m.dart_count();
  j["alpha"] = std::vector<Dart>(m.alpha_perm().begin(), m.alpha_perm().end());
  j["nu"] = std::vector<Dart>(m.nu_perm().begin(), m.nu_perm().end());
  j["root"] = m.root();
  return j;
}

RootedMap map_from_json(const nlohmann::ordered_json& j) {
  try {
    const auto n = j.at("n_darts").get<std::size_t>();
    auto alpha = j.at("alpha").get<std::vector<Dart>>();
    auto nu = j.at("nu").get<std::vector<Dart>>();
    if (alpha.size() != n || nu.size() != n) throw FormatError("permutation length differs from n_darts");
    return RootedMap(std::move(alpha), std::move(nu), j.at("root").get<Dart>());
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad map json: ") + e.what());
  }
}

}  // namespace linklab
