#include "linklab/cmap.hpp"

namespace linklab {

namespace {

// Raw rooted planar map; the vertex map (no edges) has empty arrays.
struct Raw {
  std::vector<Dart> alpha, nu;
  Dart root = -1;
  std::size_t edges() const { return alpha.size() / 2; }
};

Dart inverse_nu(const Raw& m, Dart d) {
  Dart x = d;
  while (m.nu[static_cast<std::size_t>(x)] != d) x = m.nu[static_cast<std::size_t>(x)];
  return x;
}

// Root edge is a bridge: r is inserted before the root of a, alpha(r) before
// the root of b.
void bridge(const Raw& a, const Raw& b, Raw& out) {
  const auto na = static_cast<Dart>(a.alpha.size()), nb = static_cast<Dart>(b.alpha.size());
  const Dart r = na + nb, s = r + 1;
  out.alpha.resize(static_cast<std::size_t>(s + 1));
  out.nu.resize(static_cast<std::size_t>(s + 1));
  for (Dart d = 0; d < na; ++d) {
    out.alpha[static_cast<std::size_t>(d)] = a.alpha[static_cast<std::size_t>(d)];
    out.nu[static_cast<std::size_t>(d)] = a.nu[static_cast<std::size_t>(d)];
  }
  for (Dart d = 0; d < nb; ++d) {
    out.alpha[static_cast<std::size_t>(na + d)] = na + b.alpha[static_cast<std::size_t>(d)];
    out.nu[static_cast<std::size_t>(na + d)] = na + b.nu[static_cast<std::size_t>(d)];
  }
  out.alpha[static_cast<std::size_t>(r)] = s;
  out.alpha[static_cast<std::size_t>(s)] = r;
  if (na == 0) {
    out.nu[static_cast<std::size_t>(r)] = r;
  } else {
    out.nu[static_cast<std::size_t>(inverse_nu(a, a.root))] = r;
    out.nu[static_cast<std::size_t>(r)] = a.root;
  }
  if (nb == 0) {
    out.nu[static_cast<std::size_t>(s)] = s;
  } else {
    const Dart rb = na + b.root;
    out.nu[static_cast<std::size_t>(na + inverse_nu(b, b.root))] = s;
    out.nu[static_cast<std::size_t>(s)] = rb;
  }
  out.root = r;
}

// Root edge is not a bridge: r goes right before the old root r'; alpha(r)
// goes into one of the k+1 slots of the face whose corner r now splits.
template <class Emit>
void add_non_bridge(const Raw& m, Raw& out, Emit&& emit) {
  const auto n = static_cast<Dart>(m.alpha.size());
  const Dart r = n, s = n + 1;
  out.alpha = m.alpha;
  out.nu = m.nu;
  out.alpha.resize(static_cast<std::size_t>(n + 2));
  out.nu.resize(static_cast<std::size_t>(n + 2));
  out.alpha[static_cast<std::size_t>(r)] = s;
  out.alpha[static_cast<std::size_t>(s)] = r;
  out.root = r;
  if (n == 0) {
    out.nu[static_cast<std::size_t>(r)] = s;
    out.nu[static_cast<std::size_t>(s)] = r;
    emit(out);
    return;
  }
  const Dart rp = m.root, p = inverse_nu(m, rp);
  auto at = [&](Dart d) -> Dart& { return out.nu[static_cast<std::size_t>(d)]; };
  // slot between r and r'
  at(p) = r;
  at(r) = s;
  at(s) = rp;
  emit(out);
  // slots of the face through the corner (p, r')
  const Dart x0 = m.alpha[static_cast<std::size_t>(p)];
  Dart x = x0;
  do {
    const Dart ax = m.alpha[static_cast<std::size_t>(x)];
    const Dart next = m.nu[static_cast<std::size_t>(ax)];  // phi(x) in m
    out.nu = m.nu;
    out.nu.resize(static_cast<std::size_t>(n + 2));
    if (x == x0) {
      at(p) = s;
      at(s) = r;
      at(r) = rp;
    } else {
      at(p) = r;
      at(r) = rp;
      at(ax) = s;
      at(s) = next;
    }
    emit(out);
    x = next;
  } while (x != x0);
}

class TutteGenerator {
 public:
  explicit TutteGenerator(int edges) {
    memo_.resize(static_cast<std::size_t>(edges));
    if (edges > 0) memo_[0].push_back(Raw{});
    for (int e = 1; e < edges; ++e) {
      auto& bucket = memo_[static_cast<std::size_t>(e)];
      build(e, [&bucket](const Raw& m) { bucket.push_back(m); });
    }
  }

  template <class Emit>
  void build(int e, Emit&& emit) {
    Raw out;
    for (int e1 = 0; e1 < e; ++e1) {
      const int e2 = e - 1 - e1;
      for (const Raw& a : memo_[static_cast<std::size_t>(e1)])
        for (const Raw& b : memo_[static_cast<std::size_t>(e2)]) {
          bridge(a, b, out);
          emit(out);
        }
    }
    for (const Raw& m : memo_[static_cast<std::size_t>(e - 1)]) add_non_bridge(m, out, emit);
  }

 private:
  std::vector<std::vector<Raw>> memo_;
};

}  // namespace

void for_each_planar_map(int edges, const std::function<void(const RootedMap&)>& visit) {
  if (edges < 1) throw DomainError("need at least one edge");
  if (edges > 9) throw SizeLimitError(static_cast<std::uint64_t>(edges), 9);
  TutteGenerator gen(edges);
  gen.build(edges, [&visit](const Raw& m) { visit(RootedMap(m.alpha, m.nu, m.root)); });
}

}  // namespace linklab
