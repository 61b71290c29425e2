#include <algorithm>
#include <deque>
#include <limits>

#include "linklab/tangle.hpp"

namespace linklab {

Embedder::Embedder(const BoundedQuadrangulation& k) : k_(k) {
  const RootedMap& m = k_.map;
  const std::size_t n = m.dart_count();
  const FaceList fl = faces(m);
  std::vector<char> in_b(n, 0);
  for (std::size_t d = 0; d < n; ++d) in_b[d] = fl.face_of[d] == k_.boundary_face;
  for (std::size_t f = 0; f < fl.cycles.size(); ++f)
    if (static_cast<std::int32_t>(f) != k_.boundary_face) face_min_.push_back(fl.cycles[f][0]);
  k_vertex_.resize(n);
  for (std::size_t d = 0; d < n; ++d) k_vertex_[d] = m.vertex(static_cast<Dart>(d));
  in_boundary_.assign(in_b.begin(), in_b.end());

  // The corner (x, nu x) lies in face(alpha x); boundary corners impose no
  // rotation constraint, which is what lets the boundary open up.
  std::vector<char> seen(n, 0);
  std::deque<Dart> queue{m.root()};
  seen[static_cast<std::size_t>(m.root())] = 1;
  while (!queue.empty()) {
    const Dart x = queue.front();
    queue.pop_front();
    auto step = [&](Dart y, Move mv) {
      const bool fresh = !seen[static_cast<std::size_t>(y)];
      plan_.push_back({x, y, mv, fresh});
      if (fresh) {
        seen[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    };
    step(m.alpha(x), kAlpha);
    if (!in_b[static_cast<std::size_t>(m.alpha(x))]) step(m.nu(x), kNu);
    const Dart p = m.nu_inv(x);
    if (!in_b[static_cast<std::size_t>(m.alpha(p))]) step(p, kNuInv);
  }
  image_.assign(n, -1);
}

bool Embedder::embeds(const RootedMap& q, Dart q_root, std::vector<Dart>* image) {
  if (dart_stamp_.size() < q.dart_count()) dart_stamp_.resize(q.dart_count(), 0);
  if (vertex_stamp_.size() < q.vertex_count()) {
    vertex_stamp_.resize(q.vertex_count(), 0);
    vertex_owner_.resize(q.vertex_count(), -1);
  }
  if (++generation_ == std::numeric_limits<std::uint32_t>::max()) {
    std::fill(dart_stamp_.begin(), dart_stamp_.end(), 0);
    std::fill(vertex_stamp_.begin(), vertex_stamp_.end(), 0);
    generation_ = 1;
  }
  const std::uint32_t g = generation_;
  // Boundary-face darts are images of their alpha-partners' twins and may
  // coincide: a digon boundary folds onto a single edge when the complement
  // is empty.  Every other dart must land injectively.
  auto claim = [&](Dart kd, Dart qd) {
    if (!in_boundary_[static_cast<std::size_t>(kd)]) {
      auto& ds = dart_stamp_[static_cast<std::size_t>(qd)];
      if (ds == g) return false;
      ds = g;
    }
    const auto qv = static_cast<std::size_t>(q.vertex(qd));
    const std::int32_t kv = k_vertex_[static_cast<std::size_t>(kd)];
    if (vertex_stamp_[qv] == g) {
      if (vertex_owner_[qv] != kv) return false;
    } else {
      vertex_stamp_[qv] = g;
      vertex_owner_[qv] = kv;
    }
    image_[static_cast<std::size_t>(kd)] = qd;
    return true;
  };
  if (!claim(k_.map.root(), q_root)) return false;
  for (const Step& s : plan_) {
    const Dart src = image_[static_cast<std::size_t>(s.from)];
    Dart t;
    switch (s.move) {
      case kAlpha: t = q.alpha(src); break;
      case kNu: t = q.nu(src); break;
      default: t = q.nu_inv(src); break;
    }
    if (s.assign) {
      if (!claim(s.to, t)) return false;
    } else if (image_[static_cast<std::size_t>(s.to)] != t) {
      return false;
    }
  }
  if (image) *image = image_;
  return true;
}

bool Embedder::embeds_with_crossings(const LinkDiagram& l, const RootedMap& dual_l, Dart r) {
  if (!embeds(dual_l, r)) return false;
  if (!k_.crossing_bits) return true;
  for (std::size_t i = 0; i < face_min_.size(); ++i) {
    const bool t_over = (*k_.crossing_bits)[i] == 1;
    if (t_over != l.is_over(image_[static_cast<std::size_t>(face_min_[i])])) return false;
  }
  return true;
}

bool embeds_at_root(const BoundedQuadrangulation& k, const RootedMap& q) {
  Embedder e(k);
  return e.embeds(q, q.root());
}

bool embeds_with_crossings(const BoundedQuadrangulation& t, const LinkDiagram& l) {
  Embedder e(t);
  return e.embeds_with_crossings(l, dual(l.shadow()), l.shadow().root());
}

std::size_t rooting_count(const BoundedQuadrangulation& t, const LinkDiagram& l) {
  Embedder e(t);
  const RootedMap q = dual(l.shadow());
  std::size_t count = 0;
  for (std::size_t r = 0; r < q.dart_count(); ++r)
    count += e.embeds_with_crossings(l, q, static_cast<Dart>(r)) ? 1 : 0;
  return count;
}

namespace {

std::vector<char> boundary_flags(const BoundedQuadrangulation& k) {
  const FaceList fl = faces(k.map);
  std::vector<char> in_b(k.map.dart_count(), 0);
  for (std::size_t d = 0; d < in_b.size(); ++d) in_b[d] = fl.face_of[d] == k.boundary_face;
  return in_b;
}

}  // namespace

Dart boundary_anchor(const BoundedQuadrangulation& k) {
  const auto labels = canonical_form(k.map).labels;
  const auto in_b = boundary_flags(k);
  Dart best = -1;
  for (std::size_t d = 0; d < in_b.size(); ++d)
    if (in_b[d] && (best < 0 || labels[d] < labels[static_cast<std::size_t>(best)])) best = static_cast<Dart>(d);
  return best;
}

BoundedQuadrangulation cut_complement(const BoundedQuadrangulation& k, const RootedMap& q) {
  if (k.area == 0) throw DomainError("cut needs a tangle with at least one face");
  Embedder e(k);
  std::vector<Dart> f;
  if (!e.embeds(q, q.root(), &f)) throw DomainError("tangle does not embed at the root");
  const auto in_b = boundary_flags(k);
  std::vector<bool> keep(q.dart_count(), true);
  for (std::size_t d = 0; d < in_b.size(); ++d)
    if (!in_b[d] && !in_b[static_cast<std::size_t>(k.map.alpha(static_cast<Dart>(d)))])
      keep[static_cast<std::size_t>(f[d])] = false;
  auto c = restrict_to_darts(q, keep, f[static_cast<std::size_t>(boundary_anchor(k))]);
  if (!c) throw InvalidMapError("complement is not a map");
  return BoundedQuadrangulation::from_map(std::move(*c));
}

RootedMap glue(const BoundedQuadrangulation& k, const BoundedQuadrangulation& c) {
  if (k.perimeter != c.perimeter) throw DomainError("perimeters differ");
  if (k.area == 0) throw DomainError("glue needs a tangle with at least one face");
  const RootedMap& km = k.map;
  const RootedMap& cm = c.map;
  const auto kb = boundary_flags(k);
  const auto cb = boundary_flags(c);
  const std::size_t p2 = k.perimeter;
  // a_i = alpha(b_i) along k's boundary from the anchor; c_i walks c's
  // boundary backwards from its root
  std::vector<Dart> a(p2), cc(p2);
  const bool empty_side = c.area == 0;  // single edge: the digon closes up
  Dart b = boundary_anchor(k);
  Dart y = cm.alpha(cm.root());
  for (std::size_t i = 0; i < p2; ++i) {
    a[i] = km.alpha(b);
    cc[i] = cm.alpha(y);
    b = km.phi(b);
    y = cm.alpha(cm.nu_inv(y));
  }
  const std::size_t nk = km.dart_count(), nc = cm.dart_count();
  std::vector<Dart> kid(nk, -1), cid(nc, -1);
  Dart next = 0;
  for (std::size_t d = 0; d < nk; ++d)
    if (!kb[d]) kid[d] = next++;
  for (std::size_t d = 0; d < nc && !empty_side; ++d)
    if (!cb[d]) cid[d] = next++;
  const auto total = static_cast<std::size_t>(next);
  std::vector<Dart> alpha(total, -1), phi(total, -1), nu(total);
  for (std::size_t d = 0; d < nk; ++d) {
    if (kb[d]) continue;
    alpha[static_cast<std::size_t>(kid[d])] = kid[static_cast<std::size_t>(km.alpha(static_cast<Dart>(d)))];
    phi[static_cast<std::size_t>(kid[d])] = kid[static_cast<std::size_t>(km.phi(static_cast<Dart>(d)))];
  }
  for (std::size_t d = 0; d < nc && !empty_side; ++d) {
    if (cb[d]) continue;
    alpha[static_cast<std::size_t>(cid[d])] = cid[static_cast<std::size_t>(cm.alpha(static_cast<Dart>(d)))];
    phi[static_cast<std::size_t>(cid[d])] = cid[static_cast<std::size_t>(cm.phi(static_cast<Dart>(d)))];
  }
  if (empty_side) {
    const Dart x = kid[static_cast<std::size_t>(a[0])], z = kid[static_cast<std::size_t>(a[1])];
    alpha[static_cast<std::size_t>(x)] = z;
    alpha[static_cast<std::size_t>(z)] = x;
  }
  for (std::size_t i = 0; i < p2 && !empty_side; ++i) {
    const Dart x = kid[static_cast<std::size_t>(a[i])], z = cid[static_cast<std::size_t>(cc[i])];
    if (x < 0 || z < 0) throw InvalidMapError("boundary edge with both sides on the boundary");
    alpha[static_cast<std::size_t>(x)] = z;
    alpha[static_cast<std::size_t>(z)] = x;
  }
  for (std::size_t d = 0; d < total; ++d) nu[d] = phi[static_cast<std::size_t>(alpha[d])];
  return RootedMap(std::move(alpha), std::move(nu), kid[static_cast<std::size_t>(km.root())]);
}

}  // namespace linklab
