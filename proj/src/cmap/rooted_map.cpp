#include <algorithm>
#include <numeric>

#include "linklab/cmap.hpp"

namespace linklab {

RootedMap::RootedMap(Unchecked, std::vector<Dart> alpha, std::vector<Dart> nu, Dart root)
    : alpha_(std::move(alpha)), nu_(std::move(nu)), root_(root) {}

std::string RootedMap::problem() const {
  const std::size_t n = alpha_.size();
  if (n == 0 || n % 2 != 0) return "dart count must be positive and even";
  if (nu_.size() != n) return "alpha and nu sizes differ";
  if (root_ < 0 || static_cast<std::size_t>(root_) >= n) return "root out of range";
  for (std::size_t d = 0; d < n; ++d) {
    const Dart a = alpha_[d];
    if (a < 0 || static_cast<std::size_t>(a) >= n) return "alpha out of range";
    if (static_cast<std::size_t>(a) == d) return "alpha has a fixed point";
    if (static_cast<std::size_t>(alpha_[static_cast<std::size_t>(a)]) != d)
      return "alpha is not an involution";
  }
  std::vector<char> seen(n, 0);
  for (std::size_t d = 0; d < n; ++d) {
    const Dart x = nu_[d];
    if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)])
      return "nu is not a permutation";
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return {};
}

namespace {

std::size_t count_cycles(const std::vector<Dart>& perm, std::vector<std::int32_t>* ids,
                         std::vector<Dart>* mins) {
  const std::size_t n = perm.size();
  std::vector<std::int32_t> local;
  std::vector<std::int32_t>& id = ids ? *ids : local;
  id.assign(n, -1);
  std::int32_t c = 0;
  for (std::size_t d = 0; d < n; ++d) {
    if (id[d] >= 0) continue;
    if (mins) mins->push_back(static_cast<Dart>(d));
    std::size_t x = d;
    do {
      id[x] = c;
      x = static_cast<std::size_t>(perm[x]);
    } while (x != d);
    ++c;
  }
  return static_cast<std::size_t>(c);
}

}  // namespace

std::optional<RootedMap> RootedMap::try_make(std::vector<Dart> alpha, std::vector<Dart> nu,
                                             Dart root) {
  RootedMap m(Unchecked{}, std::move(alpha), std::move(nu), root);
  if (!m.problem().empty()) return std::nullopt;
  const std::size_t n = m.alpha_.size();
  m.nu_inv_.assign(n, 0);
  for (std::size_t d = 0; d < n; ++d) m.nu_inv_[static_cast<std::size_t>(m.nu_[d])] = static_cast<Dart>(d);
  m.vertex_count_ = count_cycles(m.nu_, &m.vertex_of_, &m.vertex_min_);

  // connectivity over <alpha, nu>
  std::vector<char> seen(n, 0);
  std::vector<Dart> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Dart d = stack.back();
    stack.pop_back();
    for (Dart e : {m.alpha(d), m.nu(d), m.nu_inv(d)}) {
      if (!seen[static_cast<std::size_t>(e)]) {
        seen[static_cast<std::size_t>(e)] = 1;
        ++reached;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) return std::nullopt;

  std::vector<Dart> phi(n);
  for (std::size_t d = 0; d < n; ++d) phi[d] = m.phi(static_cast<Dart>(d));
  m.face_count_ = count_cycles(phi, nullptr, nullptr);
  const long euler = static_cast<long>(m.vertex_count_) - static_cast<long>(n / 2) +
                     static_cast<long>(m.face_count_);
  if (euler != 2) return std::nullopt;
  return m;
}

RootedMap::RootedMap(std::vector<Dart> alpha, std::vector<Dart> nu, Dart root)
    : RootedMap(Unchecked{}, {}, {}, 0) {
  {
    RootedMap probe(Unchecked{}, alpha, nu, root);
    const std::string why = probe.problem();
    if (!why.empty()) throw InvalidMapError(why);
  }
  auto m = try_make(std::move(alpha), std::move(nu), root);
  if (!m) throw InvalidMapError("map is disconnected or not planar");
  *this = std::move(*m);
}

std::size_t RootedMap::degree(std::int32_t v) const {
  const Dart start = vertex_min_[static_cast<std::size_t>(v)];
  std::size_t k = 0;
  Dart x = start;
  do {
    ++k;
    x = nu(x);
  } while (x != start);
  return k;
}

bool RootedMap::is_four_valent() const noexcept {
  for (std::size_t v = 0; v < vertex_count_; ++v)
    if (degree(static_cast<std::int32_t>(v)) != 4) return false;
  return true;
}

RootedMap RootedMap::rerooted(Dart r) const {
  if (r < 0 || static_cast<std::size_t>(r) >= dart_count()) throw InvalidMapError("root out of range");
  RootedMap m = *this;
  m.root_ = r;
  return m;
}

FaceList faces(const RootedMap& m) {
  FaceList out;
  const std::size_t n = m.dart_count();
  out.face_of.assign(n, -1);
  for (std::size_t d = 0; d < n; ++d) {
    if (out.face_of[d] >= 0) continue;
    const auto f = static_cast<std::int32_t>(out.cycles.size());
    auto& cyc = out.cycles.emplace_back();
    Dart x = static_cast<Dart>(d);
    do {
      out.face_of[static_cast<std::size_t>(x)] = f;
      cyc.push_back(x);
      x = m.phi(x);
    } while (x != static_cast<Dart>(d));
  }
  out.root_face = out.face_of[static_cast<std::size_t>(m.alpha(m.root()))];
  return out;
}

RootedMap dual(const RootedMap& m) {
  const std::size_t n = m.dart_count();
  std::vector<Dart> alpha(m.alpha_perm().begin(), m.alpha_perm().end());
  std::vector<Dart> nu(n);
  for (std::size_t d = 0; d < n; ++d) nu[d] = m.nu(m.alpha(static_cast<Dart>(d)));
  return RootedMap(std::move(alpha), std::move(nu), m.root());
}

// Medial darts: a_d = 2d, b_d = 2d+1 for each dart d of m.  a_d and b_d form
// the medial edge across the corner (d, nu d): a_d sits at the midpoint of
// d's edge, b_d at the midpoint of nu(d)'s edge.  The root moves to the
// medial dart inside the root face, next to alpha(root).
RootedMap medial(const RootedMap& m) {
  const std::size_t n = m.dart_count();
  std::vector<Dart> alpha(2 * n), nu(2 * n);
  for (std::size_t d = 0; d < n; ++d) {
    const auto a = static_cast<Dart>(2 * d), b = static_cast<Dart>(2 * d + 1);
    const Dart dd = static_cast<Dart>(d);
    alpha[static_cast<std::size_t>(a)] = b;
    alpha[static_cast<std::size_t>(b)] = a;
    nu[static_cast<std::size_t>(a)] = 2 * m.nu_inv(dd) + 1;
    nu[static_cast<std::size_t>(b)] = 2 * m.alpha(m.nu(dd));
  }
  const Dart root = 2 * m.nu_inv(m.alpha(m.root())) + 1;
  return RootedMap(std::move(alpha), std::move(nu), root);
}

bool has_loop(const RootedMap& m) {
  for (std::size_t d = 0; d < m.dart_count(); ++d)
    if (m.vertex(static_cast<Dart>(d)) == m.vertex(m.alpha(static_cast<Dart>(d)))) return true;
  return false;
}

bool is_nonseparable(const RootedMap& m) {
  if (m.edge_count() == 1) return true;
  if (has_loop(m)) return false;
  const std::size_t V = m.vertex_count();
  if (V <= 2) return true;
  // cut vertex test: drop each vertex, check the rest stays connected
  std::vector<char> seen(V);
  std::vector<std::int32_t> stack;
  for (std::size_t cut = 0; cut < V; ++cut) {
    std::fill(seen.begin(), seen.end(), 0);
    seen[cut] = 1;
    const std::int32_t start = cut == 0 ? 1 : 0;
    seen[static_cast<std::size_t>(start)] = 1;
    stack.assign(1, start);
    std::size_t reached = 2;
    while (!stack.empty()) {
      const std::int32_t v = stack.back();
      stack.pop_back();
      const Dart d0 = m.vertex_min_dart()[static_cast<std::size_t>(v)];
      Dart d = d0;
      do {
        const auto w = static_cast<std::size_t>(m.vertex(m.alpha(d)));
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(static_cast<std::int32_t>(w));
        }
        d = m.nu(d);
      } while (d != d0);
    }
    if (reached != V) return false;
  }
  return true;
}

RootedMap from_rotation_system(const std::vector<std::vector<int>>& adj) {
  // dart ids: consecutive per vertex, in listed order
  std::vector<std::size_t> offset(adj.size() + 1, 0);
  for (std::size_t v = 0; v < adj.size(); ++v) offset[v + 1] = offset[v] + adj[v].size();
  const std::size_t n = offset.back();
  std::vector<Dart> alpha(n, -1), nu(n);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    const std::size_t k = adj[v].size();
    for (std::size_t i = 0; i < k; ++i) {
      nu[offset[v] + i] = static_cast<Dart>(offset[v] + (i + 1) % k);
      const auto w = static_cast<std::size_t>(adj[v][i]);
      if (w >= adj.size()) throw InvalidMapError("neighbour out of range");
      const auto it = std::find(adj[w].begin(), adj[w].end(), static_cast<int>(v));
      if (it == adj[w].end()) throw InvalidMapError("adjacency is not symmetric");
      alpha[offset[v] + i] = static_cast<Dart>(offset[w] + static_cast<std::size_t>(it - adj[w].begin()));
    }
  }
  return RootedMap(std::move(alpha), std::move(nu), 0);
}

std::optional<RootedMap> restrict_to_darts(const RootedMap& m, const std::vector<bool>& keep,
                                           Dart root, std::vector<Dart>* old_to_new) {
  const std::size_t n = m.dart_count();
  std::vector<Dart> idx(n, -1);
  Dart next = 0;
  for (std::size_t d = 0; d < n; ++d) {
    if (!keep[d]) continue;
    if (!keep[static_cast<std::size_t>(m.alpha(static_cast<Dart>(d)))]) return std::nullopt;
    idx[d] = next++;
  }
  if (next == 0 || !keep[static_cast<std::size_t>(root)]) return std::nullopt;
  std::vector<Dart> alpha(static_cast<std::size_t>(next)), nu(static_cast<std::size_t>(next));
  for (std::size_t d = 0; d < n; ++d) {
    if (!keep[d]) continue;
    const auto i = static_cast<std::size_t>(idx[d]);
    alpha[i] = idx[static_cast<std::size_t>(m.alpha(static_cast<Dart>(d)))];
    Dart x = m.nu(static_cast<Dart>(d));
    while (!keep[static_cast<std::size_t>(x)]) x = m.nu(x);
    nu[i] = idx[static_cast<std::size_t>(x)];
  }
  if (old_to_new) *old_to_new = idx;
  return RootedMap::try_make(std::move(alpha), std::move(nu), idx[static_cast<std::size_t>(root)]);
}

}  // namespace linklab
