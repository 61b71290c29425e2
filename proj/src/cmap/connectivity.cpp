#include <algorithm>

#include "linklab/cmap.hpp"

namespace linklab {

namespace {

// Multigraph view: edge i joins ends[i].first and ends[i].second.
struct Multigraph {
  std::size_t V = 0;
  std::vector<std::pair<int, int>> ends;
  std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbour, edge id)
};

Multigraph graph_of(const RootedMap& m) {
  Multigraph g;
  g.V = m.vertex_count();
  g.adj.resize(g.V);
  for (std::size_t d = 0; d < m.dart_count(); ++d) {
    const Dart a = m.alpha(static_cast<Dart>(d));
    if (static_cast<std::size_t>(a) < d) continue;
    const int u = m.vertex(static_cast<Dart>(d)), v = m.vertex(a);
    const int id = static_cast<int>(g.ends.size());
    g.ends.emplace_back(u, v);
    if (u == v) continue;  // loops never separate anything
    g.adj[static_cast<std::size_t>(u)].emplace_back(v, id);
    g.adj[static_cast<std::size_t>(v)].emplace_back(u, id);
  }
  return g;
}

// Iterative Tarjan bridge search ignoring edge `skip`.  Returns true if the
// graph minus skip is connected and bridgeless.
bool connected_bridgeless(const Multigraph& g, int skip) {
  const std::size_t V = g.V;
  std::vector<int> disc(V, -1), low(V, 0);
  struct Frame {
    int v, parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  int timer = 0;
  disc[0] = low[0] = timer++;
  stack.push_back({0, -1, 0});
  while (!stack.empty()) {
    Frame& fr = stack.back();
    const auto& nbrs = g.adj[static_cast<std::size_t>(fr.v)];
    if (fr.next < nbrs.size()) {
      const auto [w, id] = nbrs[fr.next++];
      if (id == skip || id == fr.parent_edge) continue;
      const auto wi = static_cast<std::size_t>(w);
      if (disc[wi] < 0) {
        disc[wi] = low[wi] = timer++;
        stack.push_back({w, id, 0});
      } else {
        low[static_cast<std::size_t>(fr.v)] = std::min(low[static_cast<std::size_t>(fr.v)], disc[wi]);
      }
      continue;
    }
    const int v = fr.v;
    stack.pop_back();
    if (!stack.empty()) {
      const int p = stack.back().v;
      low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(p)]) return false;  // bridge
    }
  }
  return static_cast<std::size_t>(timer) == V;
}

}  // namespace

bool edge_connectivity_at_least_3(const RootedMap& m) {
  if (has_loop(m)) return false;
  const Multigraph g = graph_of(m);
  if (!connected_bridgeless(g, -1)) return false;
  for (std::size_t e = 0; e < g.ends.size(); ++e)
    if (!connected_bridgeless(g, static_cast<int>(e))) return false;
  return true;
}

}  // namespace linklab
