#include <array>
#include <map>
#include <regex>
#include <sstream>

#include "linklab/diagram.hpp"

namespace linklab {

std::string export_pd(const LinkDiagram& d) {
  const RootedMap& m = d.shadow();
  const std::size_t n = m.dart_count();
  std::vector<int> arc(n, 0);               // arc label per dart (both ends)
  std::vector<char> leaving(n, 0);          // traversal leaves through this dart
  std::vector<std::int32_t> visit_order;    // crossings by first visit
  std::vector<char> visited(m.vertex_count(), 0);
  auto touch = [&](Dart x) {
    const auto v = static_cast<std::size_t>(m.vertex(x));
    if (!visited[v]) {
      visited[v] = 1;
      visit_order.push_back(static_cast<std::int32_t>(v));
    }
  };
  int label = 0;
  auto walk = [&](Dart start) {
    Dart x = start;
    do {
      touch(x);
      ++label;
      arc[static_cast<std::size_t>(x)] = arc[static_cast<std::size_t>(m.alpha(x))] = label;
      leaving[static_cast<std::size_t>(x)] = 1;
      x = m.nu(m.nu(m.alpha(x)));
    } while (x != start);
  };
  walk(m.root());
  for (std::size_t i = 0; i < visit_order.size(); ++i) {
    const auto v = static_cast<std::size_t>(visit_order[i]);
    const Dart d0 = m.vertex_min_dart()[v];
    for (int k = 0; k < 4; ++k) {
      Dart x = d0;
      for (int s = 0; s < k; ++s) x = m.nu(x);
      // x arrives here along a labelled strand; its neighbour starts a new one
      if (arc[static_cast<std::size_t>(x)] == 0 || leaving[static_cast<std::size_t>(x)]) continue;
      const Dart y = m.nu(x);
      if (arc[static_cast<std::size_t>(y)] != 0) continue;
      walk(y);
    }
  }
  std::ostringstream out;
  out << "PD[";
  for (std::size_t i = 0; i < visit_order.size(); ++i) {
    const auto v = static_cast<std::size_t>(visit_order[i]);
    Dart x = m.vertex_min_dart()[v];
    for (int k = 0; k < 4 && !(!d.is_over(x) && !leaving[static_cast<std::size_t>(x)]); ++k) x = m.nu(x);
    if (i) out << ',';
    out << "X[";
    for (int k = 0; k < 4; ++k) {
      if (k) out << ',';
      out << arc[static_cast<std::size_t>(x)];
      x = m.nu(x);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

LinkDiagram parse_pd(const std::string& text) {
  static const std::regex x_re(R"(X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
  std::vector<std::array<int, 4>> xs;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), x_re); it != std::sregex_iterator(); ++it)
    xs.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
  if (xs.empty()) throw FormatError("no crossings in PD code");
  const std::size_t n = 4 * xs.size();
  std::vector<Dart> alpha(n, -1), nu(n);
  std::map<int, std::vector<Dart>> by_label;
  for (std::size_t v = 0; v < xs.size(); ++v)
    for (std::size_t k = 0; k < 4; ++k) {
      const Dart d = static_cast<Dart>(4 * v + k);
      nu[static_cast<std::size_t>(d)] = static_cast<Dart>(4 * v + (k + 1) % 4);
      by_label[xs[v][k]].push_back(d);
    }
  for (const auto& [lab, ds] : by_label) {
    if (ds.size() != 2) throw FormatError("arc " + std::to_string(lab) + " does not appear exactly twice");
    alpha[static_cast<std::size_t>(ds[0])] = ds[1];
    alpha[static_cast<std::size_t>(ds[1])] = ds[0];
  }
  // root: the dart through which arc 1 (or the smallest label) leaves
  const auto& first = by_label.begin()->second;
  const int lab0 = by_label.begin()->first;
  Dart root = first[0];
  auto pos = [](Dart d) { return d % 4; };
  auto opposite_label = [&](Dart d) { return xs[static_cast<std::size_t>(d / 4)][static_cast<std::size_t>((d % 4 + 2) % 4)]; };
  bool resolved = false;
  for (Dart d : first) {
    if (pos(d) == 2) { root = d; resolved = true; break; }     // outgoing under
  }
  if (!resolved)
    for (Dart d : first)
      if (pos(d) == 0) { root = alpha[static_cast<std::size_t>(d)]; resolved = true; break; }
  if (!resolved) {
    // over-strand both times: the arc is incoming where the straight-on arc
    // is its successor
    for (Dart d : first) {
      const int next = opposite_label(d);
      if (next == lab0 + 1) {
        root = alpha[static_cast<std::size_t>(d)];
        resolved = true;
        break;
      }
    }
    if (!resolved) root = first[0];
  }
  RootedMap shadow(std::move(alpha), std::move(nu), root);
  return {std::move(shadow), std::vector<std::uint8_t>(xs.size(), 0)};
}

}  // namespace linklab
