#include "cominrule/tableau.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace cominrule {

namespace {

int lowest(Mask m) { return std::countr_zero(m); }
int highest(Mask m) { return 63 - std::countl_zero(m); }

bool label_less(const StandardTableau& a, const StandardTableau& b) {
  if (a.inner != b.inner) return a.inner < b.inner;
  if (a.outer != b.outer) return a.outer < b.outer;
  return a.label < b.label;
}

StandardTableau blank(const BoxPoset& poset, Mask inner, Mask outer) {
  StandardTableau t;
  t.poset = &poset;
  t.inner = inner;
  t.outer = outer;
  return t;
}

void check_same_poset(const StandardTableau& a, const StandardTableau& b) {
  if (a.poset != b.poset) throw Error("tableaux live on different spaces");
}

}  // namespace

int StandardTableau::size() const { return std::popcount(cells()); }

int StandardTableau::box_of(int k) const {
  for (Mask m = cells(); m; m &= m - 1) {
    int b = lowest(m);
    if (label[b] == k) return b;
  }
  return -1;
}

bool is_standard(const StandardTableau& t) {
  if (!t.poset) return false;
  const BoxPoset& p = *t.poset;
  if (!p.is_ideal(t.inner) || !p.is_ideal(t.outer) || (t.inner & ~t.outer)) return false;
  const Mask cells = t.cells();
  Mask seen = 0;
  for (int b = 0; b < kMaxBoxes; ++b) {
    bool in = (cells >> b) & 1;
    if (!in) {
      if (t.label[b] != 0) return false;
      continue;
    }
    int l = t.label[b];
    if (l < 1 || l > t.size() || ((seen >> l) & 1)) return false;
    seen |= bit(l);
    for (Mask up = p.upper_covers(b) & cells; up; up &= up - 1)
      if (t.label[lowest(up)] <= l) return false;
  }
  return true;
}

StandardTableau make_tableau(const SkewShape& s, const std::array<std::uint8_t, kMaxBoxes>& label) {
  StandardTableau t = blank(s.outer.poset(), s.inner.mask(), s.outer.mask());
  t.label = label;
  if (!is_standard(t)) throw Error("labels do not form a standard tableau of " + print_skew(s));
  return t;
}

StandardTableau first_tableau(const SkewShape& s) {
  StandardTableau t = blank(s.outer.poset(), s.inner.mask(), s.outer.mask());
  int k = 0;
  for (Mask m = t.cells(); m; m &= m - 1) t.label[lowest(m)] = static_cast<std::uint8_t>(++k);
  return t;
}

namespace {

// Depth-first over "which cell gets the next label".
struct SytWalker {
  const BoxPoset& poset;
  Mask cells;
  StandardTableau cur;
  const std::function<void(const StandardTableau&)>& f;

  void go(Mask placed, int k) {
    if (placed == cells) {
      f(cur);
      return;
    }
    for (Mask avail = available(placed); avail; avail &= avail - 1) {
      int b = lowest(avail);
      cur.label[b] = static_cast<std::uint8_t>(k);
      go(placed | bit(b), k + 1);
      cur.label[b] = 0;
    }
  }

  Mask available(Mask placed) const {
    Mask out = 0;
    for (Mask m = cells & ~placed; m; m &= m - 1) {
      int b = lowest(m);
      if ((poset.lower_covers(b) & cells & ~placed) == 0) out |= bit(b);
    }
    return out;
  }
};

}  // namespace

void for_each_syt(const BoxPoset& poset, Mask inner, Mask outer, const std::function<void(const StandardTableau&)>& f) {
  SytWalker w{poset, outer & ~inner, blank(poset, inner, outer), f};
  w.go(0, 1);
}

std::vector<StandardTableau> enumerate_syt(const SkewShape& s) {
  std::vector<StandardTableau> out;
  for_each_syt(s.outer.poset(), s.inner.mask(), s.outer.mask(), [&](const StandardTableau& t) { out.push_back(t); });
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

std::vector<StandardTableau> enumerate_syt_parallel(const SkewShape& s) {
  const BoxPoset& poset = s.outer.poset();
  const Mask cells = s.cells();
  // split on the placement of the first two labels
  std::vector<std::pair<Mask, StandardTableau>> prefixes;
  {
    std::function<void(const StandardTableau&)> none = [](const StandardTableau&) {};
    SytWalker w{poset, cells, blank(poset, s.inner.mask(), s.outer.mask()), none};
    const int depth = std::min(2, std::popcount(cells));
    std::function<void(Mask, int)> expand = [&](Mask placed, int k) {
      if (k > depth) {
        prefixes.emplace_back(placed, w.cur);
        return;
      }
      for (Mask avail = w.available(placed); avail; avail &= avail - 1) {
        int b = lowest(avail);
        w.cur.label[b] = static_cast<std::uint8_t>(k);
        expand(placed | bit(b), k + 1);
        w.cur.label[b] = 0;
      }
    };
    expand(0, 1);
  }
  std::vector<std::vector<StandardTableau>> parts(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    std::function<void(const StandardTableau&)> sink = [&](const StandardTableau& t) { parts[i].push_back(t); };
    SytWalker w{poset, cells, prefixes[i].second, sink};
    w.go(prefixes[i].first, std::popcount(prefixes[i].first) + 1);
  }
  std::vector<StandardTableau> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

std::uint64_t count_syt(const SkewShape& s) {
  const BoxPoset& poset = s.outer.poset();
  const Mask cells = s.cells();
  std::unordered_map<Mask, std::uint64_t> memo;
  auto go = [&](auto&& self, Mask placed) -> std::uint64_t {
    if (placed == cells) return 1;
    auto it = memo.find(placed);
    if (it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (Mask m = cells & ~placed; m; m &= m - 1) {
      int b = lowest(m);
      if (poset.lower_covers(b) & cells & ~placed) continue;
      if (__builtin_add_overflow(total, self(self, placed | bit(b)), &total)) {
        throw Error("tableau count overflows 64 bits");
      }
    }
    memo.emplace(placed, total);
    return total;
  };
  return go(go, 0);
}

Mask inner_corners(const StandardTableau& t) { return t.poset->maximal(t.inner); }

Mask outer_corners(const StandardTableau& t) { return t.poset->minimal(t.poset->full() & ~t.outer); }

namespace detail {

SlideResult jdt_slide(const StandardTableau& t, int x, TieRule rule) {
  if (x < 0 || x >= t.poset->size() || !((inner_corners(t) >> x) & 1)) {
    throw Error("box " + std::to_string(x) + " is not an inner corner");
  }
  const BoxPoset& p = *t.poset;
  SlideResult r{t, x};
  StandardTableau& u = r.tableau;
  const Mask cells = t.cells();
  int hole = x;
  while (true) {
    Mask up = p.upper_covers(hole) & cells;
    if (!up) break;
    int pick = -1;
    for (; up; up &= up - 1) {
      int b = lowest(up);
      if (pick < 0 || (rule == TieRule::smallest ? u.label[b] < u.label[pick] : u.label[b] > u.label[pick])) pick = b;
    }
    u.label[hole] = u.label[pick];
    u.label[pick] = 0;
    hole = pick;
  }
  u.inner &= ~bit(x);
  u.outer &= ~bit(hole);
  r.vacated = hole;
  return r;
}

StandardTableau rectify(const StandardTableau& t, TieRule rule) {
  StandardTableau cur = t;
  while (cur.inner) cur = jdt_slide(cur, highest(inner_corners(cur)), rule).tableau;
  return cur;
}

StandardTableau rectify(const StandardTableau& t, const CornerChooser& choose, TieRule rule) {
  StandardTableau cur = t;
  while (cur.inner) cur = jdt_slide(cur, choose(inner_corners(cur)), rule).tableau;
  return cur;
}

std::pair<StandardTableau, StandardTableau> infusion(const StandardTableau& t, const StandardTableau& u, TieRule rule) {
  check_same_poset(t, u);
  if (!t.is_straight() || t.outer != u.inner) throw Error("infusion needs T straight on the inner shape of U");
  StandardTableau x = u;
  StandardTableau y = blank(*u.poset, 0, u.outer);
  for (int m = t.size(); m >= 1; --m) {
    auto r = jdt_slide(x, t.box_of(m), rule);
    x = r.tableau;
    y.label[r.vacated] = static_cast<std::uint8_t>(m);
  }
  y.inner = x.outer;
  return {x, y};
}

}  // namespace detail

SlideResult jdt_slide(const StandardTableau& t, int x) { return detail::jdt_slide(t, x, detail::TieRule::smallest); }

SlideResult rev_slide(const StandardTableau& t, int x) {
  if (x < 0 || x >= t.poset->size() || !((outer_corners(t) >> x) & 1)) {
    throw Error("box " + std::to_string(x) + " is not an outer corner");
  }
  const BoxPoset& p = *t.poset;
  SlideResult r{t, x};
  StandardTableau& u = r.tableau;
  const Mask cells = t.cells();
  int hole = x;
  while (true) {
    Mask down = p.lower_covers(hole) & cells;
    if (!down) break;
    int pick = -1;
    for (; down; down &= down - 1) {
      int b = lowest(down);
      if (pick < 0 || u.label[b] > u.label[pick]) pick = b;
    }
    u.label[hole] = u.label[pick];
    u.label[pick] = 0;
    hole = pick;
  }
  u.outer |= bit(x);
  u.inner |= bit(hole);
  r.vacated = hole;
  return r;
}

StandardTableau rectify(const StandardTableau& t) { return detail::rectify(t, detail::TieRule::smallest); }

StandardTableau rectify(const StandardTableau& t, const CornerChooser& choose) {
  return detail::rectify(t, choose, detail::TieRule::smallest);
}

StandardTableau revrectify(const StandardTableau& t) {
  StandardTableau cur = t;
  const Mask full = t.poset->full();
  while (cur.outer != full) cur = rev_slide(cur, lowest(outer_corners(cur))).tableau;
  return cur;
}

StandardTableau revrectify(const StandardTableau& t, const CornerChooser& choose) {
  StandardTableau cur = t;
  const Mask full = t.poset->full();
  while (cur.outer != full) cur = rev_slide(cur, choose(outer_corners(cur))).tableau;
  return cur;
}

std::pair<StandardTableau, StandardTableau> infusion(const StandardTableau& t, const StandardTableau& u) {
  return detail::infusion(t, u, detail::TieRule::smallest);
}

std::pair<StandardTableau, StandardTableau> revinfusion(const StandardTableau& t, const StandardTableau& u) {
  check_same_poset(t, u);
  if (!t.is_straight() || t.outer != u.inner) throw Error("revinfusion needs T straight on the inner shape of U");
  StandardTableau moving = t;
  StandardTableau x = blank(*t.poset, 0, 0);
  for (int s = 1; s <= u.size(); ++s) {
    int box = u.box_of(s);
    auto r = rev_slide(moving, box);
    moving = r.tableau;
    x.label[r.vacated] = static_cast<std::uint8_t>(s);
  }
  x.outer = moving.inner;
  return {x, moving};
}

}  // namespace cominrule
