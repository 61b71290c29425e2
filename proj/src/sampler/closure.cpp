#include <algorithm>

#include "linklab/sampler.hpp"

namespace linklab {

bool LabeledTree::valid() const {
  if (contour.empty() || contour.size() % 2 != 0) return false;
  if (epsilon != 1 && epsilon != -1) return false;
  if (labels.size() != edge_count() + 1 || labels[0] != 0) return false;
  std::vector<std::size_t> path{0};
  std::size_t next = 1;
  for (std::uint8_t step : contour) {
    if (step) {
      if (std::abs(labels[next] - labels[path.back()]) > 1) return false;
      path.push_back(next++);
    } else {
      if (path.size() < 2) return false;
      path.pop_back();
    }
  }
  return path.size() == 1;
}

namespace {

// Binomials C(a, b) for a <= 66; entries that overflow are left at 0.
const std::vector<std::vector<std::uint64_t>>& pascal() {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> c(67, std::vector<std::uint64_t>(67, 0));
    for (std::size_t a = 0; a < 67; ++a) {
      c[a][0] = 1;
      for (std::size_t b = 1; b <= a; ++b) {
        const std::uint64_t x = c[a - 1][b - 1], y = c[a - 1][b];
        if ((b - 1 <= a - 1 && x == 0) || (b <= a - 1 && y == 0)) continue;
        if (x > ~std::uint64_t{0} - y) continue;
        c[a][b] = x + y;
      }
    }
    return c;
  }();
  return table;
}

// Reusable buffers for one tree draw.  The +1/-1 arrangement for the cycle
// lemma is the unranked image of one bounded draw when C(2n+1, n) fits in 64
// bits (Fisher-Yates otherwise); labels and sign come from one draw below
// 2*3^n when that fits.
struct TreeScratch {
  std::vector<std::uint8_t> word;
  std::vector<int> path;

  void arrangement(int n, RandomStream& rng) {
    const auto len = static_cast<std::size_t>(2 * n + 1);
    word.assign(len, 0);
    const auto& c = pascal();
    if (len < c.size() && c[len][static_cast<std::size_t>(n)] != 0) {
      std::uint64_t r = rng.below(c[len][static_cast<std::size_t>(n)]);
      std::size_t k = static_cast<std::size_t>(n);
      for (std::size_t i = 0; i < len && k > 0; ++i) {
        const std::uint64_t zeros = c[len - i - 1][k];  // completions with a 0 here
        if (r < zeros) continue;
        r -= zeros;
        word[i] = 1;
        --k;
      }
      return;
    }
    std::fill(word.begin(), word.begin() + n, 1);
    for (std::size_t i = len - 1; i > 0; --i) std::swap(word[i], word[rng.below(i + 1)]);
  }

  void draw(int n, RandomStream& rng, bool with_labels, std::vector<std::uint8_t>& contour,
            std::vector<int>& labels, int& epsilon) {
    arrangement(n, rng);
    const std::size_t len = word.size();
    // cycle lemma: rotate to start just after the first minimum of the walk
    long s = 0, best = 1;
    std::size_t at = 0;
    for (std::size_t i = 0; i < len; ++i) {
      s += word[i] ? 1 : -1;
      if (s < best) {
        best = s;
        at = i;
      }
    }
    contour.resize(len - 1);
    for (std::size_t j = 1; j < len; ++j) contour[j - 1] = word[(at + j) % len];
    labels.assign(static_cast<std::size_t>(n) + 1, 0);
    epsilon = 1;
    if (!with_labels) return;

    const bool packed = n <= 39;
    std::uint64_t x = 0;
    if (packed) {
      std::uint64_t bound = 2;
      for (int i = 0; i < n; ++i) bound *= 3;
      x = rng.below(bound);
      epsilon = (x & 1) ? -1 : 1;
      x >>= 1;
    }
    path.assign(1, 0);
    int next = 1;
    for (std::uint8_t step : contour) {
      if (step) {
        int inc;
        if (packed) {
          inc = static_cast<int>(x % 3) - 1;
          x /= 3;
        } else {
          inc = static_cast<int>(rng.below(3)) - 1;
        }
        labels[static_cast<std::size_t>(next)] = labels[static_cast<std::size_t>(path.back())] + inc;
        path.push_back(next++);
      } else {
        path.pop_back();
      }
    }
    if (!packed) epsilon = rng.coin() ? 1 : -1;
  }
};

}  // namespace

LabeledTree sample_plane_tree(int n, RandomStream& rng) {
  if (n < 1) throw EmptyTreeError();
  TreeScratch scratch;
  LabeledTree t;
  scratch.draw(n, rng, false, t.contour, t.labels, t.epsilon);
  return t;
}

LabeledTree sample_labeled_tree(int n, RandomStream& rng) {
  if (n < 1) throw EmptyTreeError();
  TreeScratch scratch;
  LabeledTree t;
  scratch.draw(n, rng, true, t.contour, t.labels, t.epsilon);
  return t;
}

namespace {

// Corner k of the contour sits at vertex at[k] with label lab[k]; chord k
// joins corner k to its successor succ[k] (or -1 for the extra vertex).
struct Corners {
  std::vector<int> at, lab, succ;
  std::vector<int> path, next_with;  // scratch
};

void build_corners(const std::vector<std::uint8_t>& contour, const std::vector<int>& labels,
                   Corners& c) {
  const std::size_t m = contour.size();
  c.at.resize(m);
  c.lab.resize(m);
  c.succ.assign(m, -1);
  c.path.assign(1, 0);
  int next = 1;
  for (std::size_t k = 0; k < m; ++k) {
    c.at[k] = c.path.back();
    if (contour[k]) c.path.push_back(next++);
    else c.path.pop_back();
  }
  int lo = 0, hi = 0;
  for (std::size_t k = 0; k < m; ++k) {
    c.lab[k] = labels[static_cast<std::size_t>(c.at[k])];
    lo = std::min(lo, c.lab[k]);
    hi = std::max(hi, c.lab[k]);
  }
  // next corner (cyclically) carrying each label, found by scanning the
  // doubled sequence backwards
  auto& next_with = c.next_with;
  next_with.assign(static_cast<std::size_t>(hi - lo + 1), -1);
  for (std::size_t j = 2 * m; j-- > 0;) {
    const std::size_t k = j % m;
    const int l = c.lab[k];
    if (j < m && l > lo) c.succ[k] = next_with[static_cast<std::size_t>(l - 1 - lo)];
    next_with[static_cast<std::size_t>(l - lo)] = static_cast<int>(k);
  }
}

// Multiple-edge test on the chord list.  Vertex count n+2 <= 64 uses one bit
// row per vertex; larger trees fall back to sorting.
bool chords_simple(const Corners& c, std::size_t n_edges, std::vector<std::uint64_t>& rows,
                   std::vector<long>& keys) {
  const std::size_t m = c.at.size();
  const auto extra = static_cast<long>(n_edges + 1);
  if (n_edges + 2 <= 64) {
    rows.assign(n_edges + 2, 0);
    for (std::size_t k = 0; k < m; ++k) {
      const long u = c.at[k];
      const long v = c.succ[k] < 0 ? extra : c.at[static_cast<std::size_t>(c.succ[k])];
      std::uint64_t& row = rows[static_cast<std::size_t>(u)];
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (row & bit) return false;
      row |= bit;
      rows[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return true;
  }
  keys.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const long u = c.at[k];
    const long v = c.succ[k] < 0 ? extra : c.at[static_cast<std::size_t>(c.succ[k])];
    keys[k] = std::min(u, v) * (extra + 1) + std::max(u, v);
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace

bool closure_is_simple(const LabeledTree& t) {
  Corners c;
  build_corners(t.contour, t.labels, c);
  std::vector<std::uint64_t> rows;
  std::vector<long> keys;
  return chords_simple(c, t.edge_count(), rows, keys);
}

RootedMap closure(const LabeledTree& t) {
  if (!t.valid()) throw DomainError("closure needs a valid labeled tree");
  Corners c;
  build_corners(t.contour, t.labels, c);
  const std::size_t m = c.at.size();  // 2n corners, 2n chords, 4n darts
  const int n_vertices = static_cast<int>(t.edge_count()) + 1;

  // darts at each corner as (key, dart); chord k owns darts 2k (at corner k)
  // and 2k+1 (at its target).  Keys order a corner counterclockwise.
  std::vector<std::vector<std::pair<std::size_t, Dart>>> at_corner(m);
  std::vector<Dart> extra_darts;  // chords into the extra vertex, by corner
  for (std::size_t k = 0; k < m; ++k) {
    const int s = c.succ[k];
    if (s < 0) {
      at_corner[k].emplace_back(m, static_cast<Dart>(2 * k));
      extra_darts.push_back(static_cast<Dart>(2 * k + 1));
    } else {
      const auto su = static_cast<std::size_t>(s);
      at_corner[k].emplace_back((k + m - su) % m, static_cast<Dart>(2 * k));
      at_corner[su].emplace_back((su + m - k) % m, static_cast<Dart>(2 * k + 1));
    }
  }
  std::vector<Dart> alpha(2 * m), nu(2 * m);
  for (std::size_t d = 0; d < 2 * m; ++d) alpha[d] = static_cast<Dart>(d ^ 1u);

  std::vector<std::vector<Dart>> rotation(static_cast<std::size_t>(n_vertices));
  for (std::size_t k = 0; k < m; ++k) {
    auto& list = at_corner[k];
    std::sort(list.begin(), list.end());
    auto& rot = rotation[static_cast<std::size_t>(c.at[k])];
    for (const auto& kd : list) rot.push_back(kd.second);
  }
  std::reverse(extra_darts.begin(), extra_darts.end());
  rotation.push_back(std::move(extra_darts));
  for (const auto& rot : rotation)
    for (std::size_t i = 0; i < rot.size(); ++i)
      nu[static_cast<std::size_t>(rot[i])] = rot[(i + 1) % rot.size()];
  return RootedMap(std::move(alpha), std::move(nu), t.epsilon > 0 ? 0 : 1);
}

RootedMap sample_quadrangulation(int n, RandomStream& rng) {
  return closure(sample_labeled_tree(n, rng));
}

RootedMap sample_four_valent(int n, RandomStream& rng) {
  return dual(sample_quadrangulation(n, rng));
}

namespace {

// One rejection trial for n <= 30 on fixed arrays.  Consumes the same two
// draws as TreeScratch::draw, so an accepted trial reproduces exactly the
// tree sample_labeled_tree would have returned.
constexpr int kFastMax = 30;

bool fast_trial(int n, std::uint64_t pow3x2, RandomStream& rng, LabeledTree& out) {
  const int len = 2 * n + 1, m = 2 * n;
  const auto& c = pascal();
  std::uint8_t word[2 * kFastMax + 1];
  std::uint64_t r = rng.below(c[static_cast<std::size_t>(len)][static_cast<std::size_t>(n)]);
  int k = n;
  for (int i = 0; i < len; ++i) {
    word[i] = 0;
    if (k == 0) continue;
    const std::uint64_t zeros = c[static_cast<std::size_t>(len - i - 1)][static_cast<std::size_t>(k)];
    if (r >= zeros) {
      r -= zeros;
      word[i] = 1;
      --k;
    }
  }
  int s = 0, best = 1, at0 = 0;
  for (int i = 0; i < len; ++i) {
    s += word[i] ? 1 : -1;
    if (s < best) {
      best = s;
      at0 = i;
    }
  }
  std::uint64_t x = rng.below(pow3x2);
  const int eps = (x & 1) ? -1 : 1;
  x >>= 1;

  std::uint8_t contour[2 * kFastMax];
  int at[2 * kFastMax], lab[2 * kFastMax], vlab[kFastMax + 1], stack[kFastMax + 1];
  int sp = 0, next = 1, lo = 0, hi = 0;
  stack[0] = 0;
  vlab[0] = 0;
  int w = at0;
  for (int j = 0; j < m; ++j) {
    if (++w == len) w = 0;
    const std::uint8_t step = word[w];
    contour[j] = step;
    at[j] = stack[sp];
    lab[j] = vlab[stack[sp]];
    if (step) {
      const int v = next++;
      vlab[v] = vlab[stack[sp]] + static_cast<int>(x % 3) - 1;
      x /= 3;
      lo = std::min(lo, vlab[v]);
      hi = std::max(hi, vlab[v]);
      stack[++sp] = v;
    } else {
      --sp;
    }
  }
  int next_with[2 * kFastMax + 2];
  for (int l = 0; l <= hi - lo; ++l) next_with[l] = -1;
  std::uint32_t rows[kFastMax + 2] = {};
  const int extra = n + 1;
  for (int j = 2 * m - 1; j >= 0; --j) {
    const int kk = j >= m ? j - m : j, l = lab[kk] - lo;
    if (j < m) {
      const int v = l > 0 ? at[next_with[l - 1]] : extra;
      const int u = at[kk];
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (rows[u] & bit) return false;
      rows[u] |= bit;
      rows[v] |= std::uint32_t{1} << u;
    }
    next_with[l] = kk;
  }
  out.contour.assign(contour, contour + m);
  out.labels.assign(vlab, vlab + n + 1);
  out.epsilon = eps;
  return true;
}

}  // namespace

SqDraw sample_sq_counted(int n, RandomStream& rng, std::uint64_t max_tries, int cap) {
  if (n < 2) throw DomainError("SQ(n) needs n >= 2");
  if (n > cap) throw SizeLimitError(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(cap));
  LabeledTree t;
  auto accept = [&](std::uint64_t tries) -> SqDraw {
    RootedMap m = dual(closure(t));
    if (!edge_connectivity_at_least_3(m))
      throw std::logic_error("simple closure produced a shadow with a small edge cut");
    return {std::move(m), tries};
  };
  if (n <= kFastMax) {
    std::uint64_t pow3x2 = 2;
    for (int i = 0; i < n; ++i) pow3x2 *= 3;
    for (std::uint64_t tries = 1; tries <= max_tries; ++tries)
      if (fast_trial(n, pow3x2, rng, t)) return accept(tries);
    throw RejectionBudgetError(max_tries, 0);
  }
  TreeScratch scratch;
  Corners c;
  std::vector<std::uint64_t> rows;
  std::vector<long> keys;
  for (std::uint64_t tries = 1; tries <= max_tries; ++tries) {
    scratch.draw(n, rng, true, t.contour, t.labels, t.epsilon);
    build_corners(t.contour, t.labels, c);
    if (chords_simple(c, t.edge_count(), rows, keys)) return accept(tries);
  }
  throw RejectionBudgetError(max_tries, 0);
}

RootedMap sample_sq(int n, RandomStream& rng, std::uint64_t max_tries, int cap) {
  return sample_sq_counted(n, rng, max_tries, cap).map;
}

}  // namespace linklab
