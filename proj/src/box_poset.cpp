#include "cominrule/box_poset.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

namespace cominrule {

namespace {

std::vector<int> ones(int count) { return std::vector<int>(count, 1); }

// Full-poset and example shapes that must parse as ideals. They fix the
// orientation of the grid embedding, which is otherwise only determined up to
// the diagonal flip.
std::vector<std::vector<int>> orientation_witnesses(const SpaceSpec& s) {
  switch (s.family) {
    case Family::Gr: return {std::vector<int>(s.n - s.k, s.k)};
    case Family::QB:
    case Family::Pmin: return {ones(2 * s.n - 1)};
    case Family::LG:
    case Family::OG:
    case Family::OGmin: {
      int top = s.family == Family::LG || s.family == Family::OGmin ? s.n : s.n - 1;
      std::vector<int> stair;
      for (int h = top; h >= 1; --h) stair.push_back(h);
      return {stair};
    }
    case Family::QD: {
      std::vector<int> t = ones(s.n - 3);
      t.push_back(2);
      t.push_back(2);
      for (int i = 0; i < s.n - 3; ++i) t.push_back(1);
      return {t};
    }
    case Family::E6:
      return {{1, 1, 2, 1, 1},    {1, 1, 2, 2, 1}, {1, 1, 2, 4, 4, 1}, {1, 1, 2, 3, 1},
              {1, 1, 2, 3, 3, 1}, {1, 1, 2, 2},    {1, 1, 2, 3},       {1, 1, 2, 4}};
    case Family::E7:
      return {{1, 1, 1, 2, 5, 3},       {1, 1, 1, 2, 1},          {1, 1, 1, 2, 5, 5, 2, 1, 1},
              {1, 1, 1, 2, 3, 3, 1},    {1, 1, 1, 2, 5, 5},       {1, 1, 1, 2, 5, 5, 3, 3},
              ones(6),                  {1, 1, 1, 2, 4, 4, 1},    {1, 1, 1, 2, 4, 4, 2},
              {1, 1, 1, 2, 4, 4, 2, 1}, {1, 1, 1, 2, 4, 4, 2, 1, 1}, {1, 1, 1, 2, 4},
              {1, 1, 1, 2, 5, 4, 2, 1, 1}};
  }
  return {};
}

// Depth-first search for planar unit-step embeddings of a poset given by lower
// covers, boxes listed in a linear extension. Calls `accept` on each complete
// embedding; stops when it returns true.
class GridSearch {
 public:
  GridSearch(const std::vector<std::vector<int>>& lower, std::function<bool(const std::vector<GridPoint>&)> accept)
      : lower_(lower), accept_(std::move(accept)), pos_(lower.size()) {}

  bool run() {
    if (lower_.empty()) return accept_(pos_);
    pos_[0] = {0, 0};
    at_[pos_[0]] = 0;
    return place(1);
  }

 private:
  bool place(std::size_t b) {
    if (b == lower_.size()) return accept_(pos_);
    const auto& covers = lower_[b];
    if (covers.empty()) throw std::logic_error("box poset has two minimal elements");
    const GridPoint base = pos_[covers[0]];
    for (GridPoint p : {GridPoint{base.col + 1, base.row}, GridPoint{base.col, base.row + 1}}) {
      if (!fits(b, p)) continue;
      pos_[b] = p;
      at_[p] = static_cast<int>(b);
      if (place(b + 1)) return true;
      at_.erase(p);
    }
    return false;
  }

  bool fits(std::size_t b, GridPoint p) const {
    if (at_.count(p)) return false;
    const auto& covers = lower_[b];
    for (int a : covers) {
      GridPoint q = pos_[a];
      int dc = p.col - q.col, dr = p.row - q.row;
      if (!((dc == 1 && dr == 0) || (dc == 0 && dr == 1))) return false;
    }
    for (GridPoint q : {GridPoint{p.col - 1, p.row}, GridPoint{p.col, p.row - 1}}) {
      auto it = at_.find(q);
      if (it != at_.end() && std::find(covers.begin(), covers.end(), it->second) == covers.end()) return false;
    }
    // anything already placed right of or above p would have to cover it
    for (GridPoint q : {GridPoint{p.col + 1, p.row}, GridPoint{p.col, p.row + 1}}) {
      if (at_.count(q)) return false;
    }
    return true;
  }

  const std::vector<std::vector<int>>& lower_;
  std::function<bool(const std::vector<GridPoint>&)> accept_;
  std::vector<GridPoint> pos_;
  std::map<GridPoint, int> at_;
};

}  // namespace

BoxPoset::BoxPoset(const SpaceSpec& spec)
    : spec_(spec), rs_(spec.root_type(), spec.root_rank()), beta_(spec.node()) {}

BoxPoset build_box_poset(const SpaceSpec& spec) {
  BoxPoset p(spec);
  const RootSystem& rs = p.rs_;
  const int beta = p.beta_;

  // candidate boxes in root order, i.e. by height
  std::vector<int> cand;
  for (int r = 0; r < rs.num_positive(); ++r) {
    int c = rs.root(r).coeffs[beta];
    bool in = spec.family == Family::Pmin ? c != 0 : c == 1;
    if (in) cand.push_back(r);
  }
  const int m = static_cast<int>(cand.size());
  if (m > kMaxBoxes) throw Error("space " + spec.str() + " has more than 64 boxes");

  auto covered_by = [&](int a, int b) {
    const auto& x = rs.root(cand[a]).coeffs;
    const auto& y = rs.root(cand[b]).coeffs;
    int diff = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      int d = y[i] - x[i];
      if (d < 0 || d > 1) return false;
      diff += d;
    }
    return diff == 1;
  };
  std::vector<std::vector<int>> lower(m);
  for (int b = 0; b < m; ++b)
    for (int a = 0; a < b; ++a)
      if (covered_by(a, b)) lower[b].push_back(a);

  const auto witnesses = orientation_witnesses(spec);
  bool found = false;
  GridSearch search(lower, [&](const std::vector<GridPoint>& pos) {
    int min_col = 0, min_row = 0;
    for (auto q : pos) {
      min_col = std::min(min_col, q.col);
      min_row = std::min(min_row, q.row);
    }
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    std::vector<int> id_of(m);
    for (int i = 0; i < m; ++i) id_of[order[i]] = i;

    p.root_.assign(m, 0);
    p.grid_.assign(m, {});
    p.upper_.assign(m, 0);
    p.lower_.assign(m, 0);
    p.num_columns_ = p.num_rows_ = 0;
    for (int t = 0; t < m; ++t) {
      int id = id_of[t];
      p.root_[id] = cand[t];
      p.grid_[id] = {pos[t].col - min_col + 1, pos[t].row - min_row + 1};
      p.num_columns_ = std::max(p.num_columns_, p.grid_[id].col);
      p.num_rows_ = std::max(p.num_rows_, p.grid_[id].row);
      for (int a : lower[t]) {
        p.lower_[id] |= bit(id_of[a]);
        p.upper_[id_of[a]] |= bit(id);
      }
    }
    for (const auto& w : witnesses) {
      try {
        p.ideal_from_columns(w);
      } catch (const Error&) {
        return false;
      }
    }
    found = true;
    return true;
  });
  search.run();
  if (!found) throw std::logic_error("no grid embedding matches the column notation for " + spec.str());

  p.box_of_root_.assign(rs.num_roots(), -1);
  for (int b = 0; b < m; ++b) p.box_of_root_[p.root_[b]] = b;

  p.below_.assign(m, 0);
  for (int b = 0; b < m; ++b) {
    Mask lc = p.lower_[b];
    while (lc) {
      int a = std::countr_zero(lc);
      lc &= lc - 1;
      p.below_[b] |= bit(a) | p.below_[a];
    }
  }
  p.above_.assign(m, 0);
  for (int b = 0; b < m; ++b) {
    Mask bl = p.below_[b];
    while (bl) {
      int a = std::countr_zero(bl);
      bl &= bl - 1;
      p.above_[a] |= bit(b);
    }
  }

  if (spec.flavor() == Flavor::cominuscule) {
    for (int b = 0; b < m; ++b)
      if (rs.root(p.root_[b]).squared_length < rs.max_squared_length()) p.short_ |= bit(b);
  }

  p.rotate_.assign(m, -1);
  if (spec.family == Family::Pmin) {
    // the chain is not stable under W_P (2e_1 is fixed); reverse it instead
    for (int b = 0; b < m; ++b) p.rotate_[b] = m - 1 - b;
  } else {
    // u0 = longest element of W_P, as a permutation of the roots
    std::vector<int> perm(rs.num_roots());
    for (int r = 0; r < rs.num_roots(); ++r) perm[r] = r;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 0; i < rs.rank(); ++i) {
        if (i == beta || !rs.is_positive(perm[rs.simple(i)])) continue;
        std::vector<int> next(perm.size());
        for (int r = 0; r < rs.num_roots(); ++r) next[r] = perm[rs.reflect(i, r)];
        perm = std::move(next);
        grew = true;
      }
    }
    for (int b = 0; b < m; ++b) {
      auto img = p.box_of_root(perm[p.root_[b]]);
      if (!img) throw std::logic_error("u0 does not preserve the boxes");
      p.rotate_[b] = *img;
    }
  }
  for (int b = 0; b < m; ++b) {
    if (p.rotate_[p.rotate_[b]] != b) throw std::logic_error("rotate is not an involution");
    if (p.is_short(b) != p.is_short(p.rotate_[b])) throw std::logic_error("rotate changes a root length");
    Mask lc = p.lower_[b];
    while (lc) {
      int a = std::countr_zero(lc);
      lc &= lc - 1;
      if (!((p.upper_[p.rotate_[b]] >> p.rotate_[a]) & 1)) throw std::logic_error("rotate is not order reversing");
    }
  }
  return p;
}

std::optional<int> BoxPoset::box_of_root(int r) const {
  if (r < 0 || r >= static_cast<int>(box_of_root_.size()) || box_of_root_[r] < 0) return std::nullopt;
  return box_of_root_[r];
}

std::optional<int> BoxPoset::box_at(GridPoint q) const {
  for (int b = 0; b < size(); ++b)
    if (grid_[b] == q) return b;
  return std::nullopt;
}

Mask BoxPoset::rotate_mask(Mask m) const {
  Mask out = 0;
  while (m) {
    int b = std::countr_zero(m);
    m &= m - 1;
    out |= bit(rotate_[b]);
  }
  return out;
}

bool BoxPoset::is_ideal(Mask m) const {
  if (m & ~full()) return false;
  for (Mask t = m; t;) {
    int b = std::countr_zero(t);
    t &= t - 1;
    if (lower_[b] & ~m) return false;
  }
  return true;
}

bool BoxPoset::is_upper_set(Mask m) const {
  if (m & ~full()) return false;
  for (Mask t = m; t;) {
    int b = std::countr_zero(t);
    t &= t - 1;
    if (upper_[b] & ~m) return false;
  }
  return true;
}

Mask BoxPoset::maximal(Mask m) const {
  Mask out = 0;
  for (Mask t = m; t;) {
    int b = std::countr_zero(t);
    t &= t - 1;
    if (!(above_[b] & m)) out |= bit(b);
  }
  return out;
}

Mask BoxPoset::minimal(Mask m) const {
  Mask out = 0;
  for (Mask t = m; t;) {
    int b = std::countr_zero(t);
    t &= t - 1;
    if (!(below_[b] & m)) out |= bit(b);
  }
  return out;
}

std::vector<int> BoxPoset::column_counts(Mask m) const {
  std::vector<int> counts(num_columns_, 0);
  for (Mask t = m; t;) {
    int b = std::countr_zero(t);
    t &= t - 1;
    ++counts[grid_[b].col - 1];
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

Mask BoxPoset::ideal_from_columns(std::span<const int> counts) const {
  Mask m = 0;
  int id = 0;
  for (int c = 1; c <= static_cast<int>(counts.size()); ++c) {
    int want = counts[c - 1];
    int first = id;
    while (id < size() && grid_[id].col == c) ++id;
    int have = id - first;
    if (want < 0) throw Error("column " + std::to_string(c) + " has a negative count");
    if (want > have) {
      throw Error("column " + std::to_string(c) + " asks for " + std::to_string(want) + " boxes but has " +
                  std::to_string(have));
    }
    for (int j = 0; j < want; ++j) m |= bit(first + j);
  }
  for (int b = 0; b < size(); ++b) {
    if (((m >> b) & 1) && (lower_[b] & ~m)) {
      throw Error("column " + std::to_string(grid_[b].col) + " is not supported by the columns before it");
    }
  }
  return m;
}

Hasse hasse_of(const BoxPoset& poset) {
  Hasse h;
  h.up.resize(poset.size());
  for (int b = 0; b < poset.size(); ++b)
    for (Mask t = poset.upper_covers(b); t; t &= t - 1) h.up[b].push_back(std::countr_zero(t));
  return h;
}

std::optional<std::vector<int>> find_isomorphism(const Hasse& a, const Hasse& b) {
  const int n = a.size();
  if (b.size() != n) return std::nullopt;
  auto analyse = [](const Hasse& h, std::vector<std::vector<int>>& down, std::vector<int>& level) {
    const int n = h.size();
    down.assign(n, {});
    for (int x = 0; x < n; ++x)
      for (int y : h.up[x]) down[y].push_back(x);
    level.assign(n, 0);
    // longest chain from a minimal element, via Kahn order
    std::vector<int> indeg(n), queue;
    for (int x = 0; x < n; ++x) {
      indeg[x] = static_cast<int>(down[x].size());
      if (!indeg[x]) queue.push_back(x);
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int x = queue[i];
      for (int y : h.up[x]) {
        level[y] = std::max(level[y], level[x] + 1);
        if (--indeg[y] == 0) queue.push_back(y);
      }
    }
    return queue;
  };
  std::vector<std::vector<int>> da, db;
  std::vector<int> la, lb;
  auto order = analyse(a, da, la);
  analyse(b, db, lb);
  if (static_cast<int>(order.size()) != n) return std::nullopt;

  auto has = [](const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); };
  std::vector<int> phi(n, -1), used(n, 0);
  std::function<bool(int)> go = [&](int i) {
    if (i == n) return true;
    int x = order[i];
    for (int y = 0; y < n; ++y) {
      if (used[y] || lb[y] != la[x] || a.up[x].size() != b.up[y].size() || da[x].size() != db[y].size()) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        int z = order[j];
        if (has(a.up[z], x) != has(b.up[phi[z]], y)) ok = false;
        if (has(a.up[x], z) != has(b.up[y], phi[z])) ok = false;
      }
      if (!ok) continue;
      phi[x] = y;
      used[y] = 1;
      if (go(i + 1)) return true;
      used[y] = 0;
      phi[x] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return phi;
}

}  // namespace cominrule
