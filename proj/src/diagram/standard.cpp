#include "linklab/diagram.hpp"
#include "linklab/sampler.hpp"

namespace linklab {

namespace {

enum Slot { UR = 0, UL = 1, DL = 2, DR = 3 };

struct Builder {
  std::vector<Dart> alpha, nu;
  explicit Builder(int vertices) : alpha(static_cast<std::size_t>(4 * vertices), -1), nu(alpha.size()) {
    for (std::size_t d = 0; d < nu.size(); ++d) nu[d] = static_cast<Dart>((d & ~std::size_t{3}) | ((d + 1) & 3));
  }
  static Dart dart(int v, Slot s) { return 4 * v + s; }
  void join(int u, Slot a, int v, Slot b) {
    const Dart x = dart(u, a), y = dart(v, b);
    alpha[static_cast<std::size_t>(x)] = y;
    alpha[static_cast<std::size_t>(y)] = x;
  }
  RootedMap build() { return RootedMap(std::move(alpha), std::move(nu), 0); }
};

}  // namespace

RootedMap torus_shadow(int n) {
  if (n < 2) throw DomainError("T(2,n) shadow needs n >= 2");
  Builder b(n);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    b.join(i, UR, j, UL);
    b.join(i, DR, j, DL);
  }
  return b.build();
}

LinkDiagram torus_diagram(int n) { return alternating_diagram(torus_shadow(n)); }

RootedMap pretzel_shadow(const std::vector<int>& columns) {
  if (columns.size() < 2) throw DomainError("pretzel needs at least two columns");
  int total = 0;
  std::vector<int> first;
  for (int a : columns) {
    if (a < 1) throw DomainError("pretzel columns need at least one crossing");
    first.push_back(total);
    total += a;
  }
  Builder b(total);
  const int k = static_cast<int>(columns.size());
  for (int c = 0; c < k; ++c) {
    const int top = first[static_cast<std::size_t>(c)];
    const int bottom = top + columns[static_cast<std::size_t>(c)] - 1;
    for (int t = top; t < bottom; ++t) {
      b.join(t, DL, t + 1, UL);
      b.join(t, DR, t + 1, UR);
    }
    const int nc = (c + 1) % k;
    const int ntop = first[static_cast<std::size_t>(nc)];
    const int nbottom = ntop + columns[static_cast<std::size_t>(nc)] - 1;
    b.join(top, UR, ntop, UL);
    b.join(bottom, DR, nbottom, DL);
  }
  return b.build();
}

LinkDiagram pretzel_diagram(const std::vector<int>& columns) {
  return alternating_diagram(pretzel_shadow(columns));
}

LinkDiagram seven_crossing_example() { return pretzel_diagram({3, 2, 2}); }

}  // namespace linklab
