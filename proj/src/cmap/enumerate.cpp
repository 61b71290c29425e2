#include "linklab/cmap.hpp"

namespace linklab {

namespace {

// Generates rooted maps in canonical BFS order: dart i is processed by
// choosing alpha(i) then nu(i), each either an already-labelled open dart or
// the next fresh label.  Every rooted map arises exactly once because its
// canonical labelling is the unique branch that reproduces it.
//
// Partial nu is a set of chains; both endpoints of a chain store the other
// endpoint, the chain length and whether dart 0 lies on it.
class ClosureSearch {
 public:
  enum class Degrees { free, four, root_special };

  ClosureSearch(int total, Degrees mode, int root_degree,
                const std::function<void(const RootedMap&)>& visit)
      : total_(total), mode_(mode), root_degree_(root_degree), visit_(visit) {
    const auto n = static_cast<std::size_t>(total);
    alpha_.assign(n, -1);
    nu_.assign(n, -1);
    nu_inv_.assign(n, -1);
    other_.assign(n, -1);
    len_.assign(n, 0);
    has_root_.assign(n, 0);
  }

  void run() {
    fresh();  // dart 0
    step(0, 0);
  }

 private:
  int cap_for(bool root_chain) const {
    switch (mode_) {
      case Degrees::free: return total_;
      case Degrees::four: return 4;
      case Degrees::root_special: return root_chain ? root_degree_ : 4;
    }
    return total_;
  }

  Dart fresh() {
    const Dart f = next_++;
    const auto i = static_cast<std::size_t>(f);
    other_[i] = f;
    len_[i] = 1;
    has_root_[i] = f == 0;
    return f;
  }
  void unfresh() { --next_; }

  struct Saved {
    Dart head, tail;
    Dart other_head, other_tail;
    int len_head, len_tail;
    char root_head, root_tail;
  };

  // Link nu(i) = j where i ends a chain and j starts one.  Returns false if
  // the degree constraint fails (state untouched in that case).
  bool link(Dart i, Dart j, Saved& s) {
    const auto I = static_cast<std::size_t>(i), J = static_cast<std::size_t>(j);
    const Dart head_i = other_[I];  // start of i's chain
    const Dart tail_j = other_[J];  // end of j's chain
    if (head_i == j) {  // closes a cycle
      if (len_[I] != cap_for(has_root_[I]) && mode_ != Degrees::free) return false;
    } else {
      const int l = len_[I] + len_[J];
      const bool r = has_root_[I] || has_root_[J];
      if (l > cap_for(r) || (r && mode_ == Degrees::root_special && l > root_degree_)) return false;
    }
    const auto H = static_cast<std::size_t>(head_i), T = static_cast<std::size_t>(tail_j);
    s = {head_i, tail_j, other_[H], other_[T], len_[H], len_[T], has_root_[H], has_root_[T]};
    nu_[I] = j;
    nu_inv_[J] = i;
    if (head_i != j) {
      const int l = len_[I] + len_[J];
      const char r = static_cast<char>(has_root_[I] || has_root_[J]);
      other_[H] = tail_j;
      other_[T] = head_i;
      len_[H] = len_[T] = l;
      has_root_[H] = has_root_[T] = r;
    }
    return true;
  }
  void unlink(Dart i, Dart j, const Saved& s) {
    nu_[static_cast<std::size_t>(i)] = -1;
    nu_inv_[static_cast<std::size_t>(j)] = -1;
    const auto H = static_cast<std::size_t>(s.head), T = static_cast<std::size_t>(s.tail);
    other_[T] = s.other_tail;
    len_[T] = s.len_tail;
    has_root_[T] = s.root_tail;
    other_[H] = s.other_head;
    len_[H] = s.len_head;
    has_root_[H] = s.root_head;
  }

  void emit() {
    auto m = RootedMap::try_make(alpha_, nu_, 0);
    if (m) visit_(*m);
  }

  void step(Dart i, int phase) {
    if (i == next_) {
      if (next_ == total_) emit();
      return;
    }
    const auto I = static_cast<std::size_t>(i);
    if (phase == 0) {
      if (alpha_[I] >= 0) return step(i, 1);
      if (next_ < total_) {
        const Dart f = fresh();
        alpha_[I] = f;
        alpha_[static_cast<std::size_t>(f)] = i;
        step(i, 1);
        alpha_[I] = alpha_[static_cast<std::size_t>(f)] = -1;
        unfresh();
      }
      for (Dart j = i + 1; j < next_; ++j) {
        const auto J = static_cast<std::size_t>(j);
        if (alpha_[J] >= 0) continue;
        alpha_[I] = j;
        alpha_[J] = i;
        step(i, 1);
        alpha_[I] = alpha_[J] = -1;
      }
      return;
    }
    if (nu_[I] >= 0) return step(i + 1, 0);
    Saved s{};
    if (next_ < total_) {
      const Dart f = fresh();
      if (link(i, f, s)) {
        step(i + 1, 0);
        unlink(i, f, s);
      }
      unfresh();
    }
    for (Dart j = 0; j < next_; ++j) {
      if (nu_inv_[static_cast<std::size_t>(j)] >= 0) continue;
      if (!link(i, j, s)) continue;
      step(i + 1, 0);
      unlink(i, j, s);
    }
  }

  int total_;
  Degrees mode_;
  int root_degree_;
  const std::function<void(const RootedMap&)>& visit_;
  Dart next_ = 0;
  std::vector<Dart> alpha_, nu_, nu_inv_, other_;
  std::vector<int> len_;
  std::vector<char> has_root_;
};

}  // namespace

std::vector<RootedMap> enumerate_all(int n, bool four_valent, int cap) {
  if (n < 1) throw DomainError("enumerate_all needs n >= 1");
  if (n > cap) throw SizeLimitError(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(cap));
  std::vector<RootedMap> out;
  const std::function<void(const RootedMap&)> keep = [&out](const RootedMap& m) { out.push_back(m); };
  if (four_valent) {
    ClosureSearch(4 * n, ClosureSearch::Degrees::four, 4, keep).run();
  } else {
    ClosureSearch(2 * n, ClosureSearch::Degrees::free, 0, keep).run();
  }
  return out;
}

void for_each_rooted_with_root_degree(int root_degree, int others,
                                      const std::function<void(const RootedMap&)>& visit) {
  if (root_degree < 1 || others < 0) throw DomainError("bad degree specification");
  const int total = root_degree + 4 * others;
  if (total % 2 != 0) throw DomainError("odd dart count");
  ClosureSearch(total, ClosureSearch::Degrees::root_special, root_degree, visit).run();
}

}  // namespace linklab
