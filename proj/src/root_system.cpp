#include "cominrule/root_system.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cominrule {

namespace {

std::vector<std::vector<int>> make_gram(RootType type, int n) {
  std::vector<std::vector<int>> g(n, std::vector<int>(n, 0));
  auto link = [&](int i, int j, int v) { g[i][j] = g[j][i] = v; };
  for (int i = 0; i < n; ++i) g[i][i] = 2;
  switch (type) {
    case RootType::A:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
    case RootType::B:
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, -1);
      g[n - 1][n - 1] = 1;
      break;
    case RootType::C:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 2, n - 1, -2);
      g[n - 1][n - 1] = 4;
      break;
    case RootType::D:
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, -1);
      link(n - 3, n - 1, -1);
      break;
    case RootType::E:
      // Bourbaki: 1-3-4-5-6(-7), 2-4
      link(0, 2, -1);
      link(2, 3, -1);
      link(1, 3, -1);
      for (int i = 3; i + 1 < n; ++i) link(i, i + 1, -1);
      break;
  }
  return g;
}

void check_supported(RootType type, int rank) {
  bool ok = false;
  switch (type) {
    case RootType::A: ok = rank >= 1; break;
    case RootType::B: ok = rank >= 3; break;
    case RootType::C: ok = rank >= 2; break;
    case RootType::D: ok = rank >= 4; break;
    case RootType::E: ok = rank == 6 || rank == 7; break;
  }
  if (!ok) {
    throw Error(
        "unsupported root system; supported: A_n (n>=1), B_n (n>=3), C_n (n>=2), "
        "D_n (n>=4), E6, E7");
  }
}

char type_char(RootType t) {
  switch (t) {
    case RootType::A: return 'A';
    case RootType::B: return 'B';
    case RootType::C: return 'C';
    case RootType::D: return 'D';
    case RootType::E: return 'E';
  }
  return '?';
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace

RootSystem::RootSystem(RootType type, int rank) : type_(type), rank_(rank) {
  check_supported(type, rank);
  gram_ = make_gram(type, rank);

  // Phi = W . Delta
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  auto form = [&](const std::vector<int>& a, int i) {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += a[j] * gram_[j][i];
    return s;
  };
  while (!queue.empty()) {
    auto a = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank; ++i) {
      int c = 2 * form(a, i) / gram_[i][i];
      if (c == 0) continue;
      auto b = a;
      b[i] -= c;
      if (seen.insert(b).second) queue.push_back(b);
    }
  }

  std::vector<Root> pos;
  for (const auto& c : seen) {
    if (std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; })) {
      Root r;
      r.coeffs = c;
      r.height = std::accumulate(c.begin(), c.end(), 0);
      pos.push_back(std::move(r));
    }
  }
  std::sort(pos.begin(), pos.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs < b.coeffs;
  });
  int max_len = 0;
  for (int i = 0; i < rank; ++i) max_len = std::max(max_len, gram_[i][i]);
  num_positive_ = static_cast<int>(pos.size());
  roots_ = pos;
  for (const auto& p : pos) {
    Root n = p;
    for (auto& x : n.coeffs) x = -x;
    n.height = -p.height;
    roots_.push_back(std::move(n));
  }
  for (auto& r : roots_) {
    int sq = 0;
    for (int i = 0; i < rank; ++i) sq += r.coeffs[i] * form(r.coeffs, i);
    r.squared_length = 2 * sq / max_len;
  }

  simple_.assign(rank, -1);
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    simple_[i] = *find(e);
  }

  reflection_.assign(rank, std::vector<int>(roots_.size(), -1));
  for (int i = 0; i < rank; ++i) {
    for (int r = 0; r < num_roots(); ++r) {
      auto b = roots_[r].coeffs;
      b[i] -= coroot_pairing(r, i);
      auto idx = find(b);
      if (!idx) throw std::logic_error("root system not closed under reflections");
      reflection_[i][r] = *idx;
    }
  }
}

std::string RootSystem::label() const { return std::string(1, type_char(type_)) + std::to_string(rank_); }

std::optional<int> RootSystem::simple_index(int r) const {
  for (int i = 0; i < rank_; ++i)
    if (simple_[i] == r) return i;
  return std::nullopt;
}

std::optional<int> RootSystem::find(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) != rank_) return std::nullopt;
  bool positive = std::all_of(coeffs.begin(), coeffs.end(), [](int x) { return x >= 0; });
  int height = std::accumulate(coeffs.begin(), coeffs.end(), 0);
  // positive roots are sorted by (height, coeffs); negatives mirror them
  std::vector<int> key(coeffs.begin(), coeffs.end());
  if (!positive) {
    for (auto& x : key) x = -x;
    height = -height;
  }
  auto first = roots_.begin();
  auto last = roots_.begin() + num_positive_;
  auto it = std::lower_bound(first, last, key, [&](const Root& r, const std::vector<int>& k) {
    if (r.height != height) return r.height < height;
    return r.coeffs < k;
  });
  if (it == last || it->coeffs != key) return std::nullopt;
  int idx = static_cast<int>(it - first);
  return positive ? idx : idx + num_positive_;
}

int RootSystem::pairing(int r, int s) const {
  int v = 0;
  const auto& a = roots_[r].coeffs;
  const auto& b = roots_[s].coeffs;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) v += a[i] * gram_[i][j] * b[j];
  }
  return v;
}

int RootSystem::coroot_pairing(int r, int i) const {
  int s = 0;
  const auto& a = roots_[r].coeffs;
  for (int j = 0; j < rank_; ++j) s += a[j] * gram_[j][i];
  return 2 * s / gram_[i][i];
}

int RootSystem::apply(const WeylElement& w, int r) const {
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) r = reflection_[*it][r];
  return r;
}

std::vector<int> RootSystem::signature(const WeylElement& w) const {
  std::vector<int> sig(rank_);
  for (int i = 0; i < rank_; ++i) sig[i] = apply(w, simple_[i]);
  return sig;
}

bool RootSystem::same_element(const WeylElement& u, const WeylElement& v) const {
  return signature(u) == signature(v);
}

std::vector<int> RootSystem::inversion_set(const WeylElement& w) const {
  std::vector<int> inv;
  for (int r = 0; r < num_positive_; ++r)
    if (!is_positive(apply(w, r))) inv.push_back(r);
  return inv;
}

int RootSystem::length(const WeylElement& w) const { return static_cast<int>(inversion_set(w).size()); }

std::vector<int> RootSystem::right_descents(const WeylElement& w) const {
  std::vector<int> d;
  for (int i = 0; i < rank_; ++i)
    if (!is_positive(apply(w, simple_[i]))) d.push_back(i);
  return d;
}

bool RootSystem::bruhat_leq(const WeylElement& u, const WeylElement& v) const {
  const auto k = v.word.size();
  if (k > 24) throw Error("bruhat_leq: word too long for subword enumeration");
  if (length(v) != static_cast<int>(k)) throw Error("bruhat_leq: word of v is not reduced");
  const auto target = signature(u);
  const int lu = length(u);
  WeylElement sub;
  for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
    if (std::popcount(bits) < lu) continue;
    sub.word.clear();
    for (std::size_t j = 0; j < k; ++j)
      if (bits & (1u << j)) sub.word.push_back(v.word[j]);
    if (signature(sub) == target) return true;
  }
  return false;
}

RootSystem build_root_system(RootType type, int rank) { return RootSystem(type, rank); }

RootSystem build_root_system(std::string_view label) {
  if (label.size() < 2) throw Error("malformed root system label");
  RootType t;
  switch (label[0]) {
    case 'A': t = RootType::A; break;
    case 'B': t = RootType::B; break;
    case 'C': t = RootType::C; break;
    case 'D': t = RootType::D; break;
    case 'E': t = RootType::E; break;
    default: throw Error("malformed root system label");
  }
  int rank = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') throw Error("malformed root system label");
    rank = rank * 10 + (c - '0');
  }
  return RootSystem(t, rank);
}

std::vector<int> cominuscule_nodes(const RootSystem& rs) {
  std::vector<int> nodes;
  const auto& top = rs.root(rs.highest_root()).coeffs;
  for (int i = 0; i < rs.rank(); ++i)
    if (top[i] == 1) nodes.push_back(i);
  return nodes;
}

namespace {

// r = x a + y b with integer numerators over det; returns false if r is not in
// the span of a and b.
bool in_span(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& r) {
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      long det = static_cast<long>(a[i]) * b[j] - static_cast<long>(a[j]) * b[i];
      if (det == 0) continue;
      long x = static_cast<long>(r[i]) * b[j] - static_cast<long>(r[j]) * b[i];
      long y = static_cast<long>(a[i]) * r[j] - static_cast<long>(a[j]) * r[i];
      for (int k = 0; k < n; ++k)
        if (x * a[k] + y * b[k] != det * r[k]) return false;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> rank_two_orderings(const RootSystem& rs) {
  const int np = rs.num_positive();
  std::set<std::vector<int>> done;
  std::vector<std::vector<int>> out;
  for (int a = 0; a < np; ++a) {
    for (int b = a + 1; b < np; ++b) {
      std::vector<int> sub;
      for (int r = 0; r < np; ++r)
        if (in_span(rs.root(a).coeffs, rs.root(b).coeffs, rs.root(r).coeffs)) sub.push_back(r);
      if (sub.size() != 3 && sub.size() != 4) continue;  // A1 x A1 is reducible
      if (!done.insert(sub).second) continue;
      // simple roots of the subsystem: the positive roots that are not sums
      std::vector<int> simples;
      for (int r : sub) {
        bool decomposable = false;
        for (int s : sub) {
          for (int t : sub) {
            if (s >= t) continue;
            std::vector<int> sum = rs.root(s).coeffs;
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += rs.root(t).coeffs[k];
            if (sum == rs.root(r).coeffs) decomposable = true;
          }
        }
        if (!decomposable) simples.push_back(r);
      }
      if (simples.size() != 2) throw std::logic_error("rank-two subsystem without two simple roots");
      int eta = simples[0], gamma = simples[1];
      if (rs.root(eta).squared_length < rs.root(gamma).squared_length) std::swap(eta, gamma);
      auto plus = [&](int x, int y, int times) {
        std::vector<int> c = rs.root(x).coeffs;
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += times * rs.root(y).coeffs[k];
        return *rs.find(c);
      };
      if (sub.size() == 3) {
        out.push_back({eta, plus(eta, gamma, 1), gamma});
      } else {
        out.push_back({eta, plus(eta, gamma, 1), plus(eta, gamma, 2), gamma});
      }
    }
  }
  return out;
}

bool is_biconvex(std::span<const int> positive_roots, const RootSystem& rs) {
  return is_biconvex(positive_roots, rs, rank_two_orderings(rs));
}

bool is_biconvex(std::span<const int> positive_roots, const RootSystem& rs,
                 const std::vector<std::vector<int>>& orderings) {
  std::vector<char> in(rs.num_positive(), 0);
  for (int r : positive_roots) {
    if (!rs.is_positive(r)) throw Error("is_biconvex: expected positive roots");
    in[r] = 1;
  }
  for (const auto& order : orderings) {
    // pattern must be 1..10..0 or 0..01..1
    std::size_t ones = 0;
    for (int r : order) ones += in[r];
    bool prefix = true, suffix = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      bool want_prefix = i < ones;
      bool want_suffix = i >= order.size() - ones;
      if (static_cast<bool>(in[order[i]]) != want_prefix) prefix = false;
      if (static_cast<bool>(in[order[i]]) != want_suffix) suffix = false;
    }
    if (!prefix && !suffix) return false;
  }
  return true;
}

WeylElement element_with_inversions(const RootSystem& rs, std::span<const int> roots) {
  WeylElement w;
  for (int b : roots) {
    int image = rs.apply(w, b);
    auto i = rs.simple_index(image);
    if (!i) throw Error("root set is not an inversion set built by left multiplication");
    w.word.insert(w.word.begin(), *i);
  }
  return w;
}

std::uint64_t weyl_group_order(RootType type, int rank) {
  switch (type) {
    case RootType::A: return factorial(rank + 1);
    case RootType::B:
    case RootType::C: return (std::uint64_t{1} << rank) * factorial(rank);
    case RootType::D: return (std::uint64_t{1} << (rank - 1)) * factorial(rank);
    case RootType::E:
      if (rank == 6) return 51840;
      if (rank == 7) return 2903040;
      if (rank == 8) return 696729600;
      break;
  }
  throw Error("weyl_group_order: unsupported type");
}

std::uint64_t parabolic_quotient_size(const RootSystem& rs, int node) {
  const int n = rs.rank();
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (s == node || comp[s] >= 0) continue;
    std::deque<int> q{s};
    comp[s] = ncomp;
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (int u = 0; u < n; ++u) {
        if (u == node || comp[u] >= 0 || !rs.adjacent(u, v)) continue;
        comp[u] = ncomp;
        q.push_back(u);
      }
    }
    ++ncomp;
  }
  std::uint64_t sub = 1;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> nodes;
    for (int v = 0; v < n; ++v)
      if (comp[v] == c) nodes.push_back(v);
    const int m = static_cast<int>(nodes.size());
    bool two_lengths = false;
    for (int v : nodes)
      if (rs.gram(v, v) != rs.gram(nodes[0], nodes[0])) two_lengths = true;
    if (two_lengths) {
      sub *= weyl_group_order(RootType::B, m);
      continue;
    }
    int branch = -1;
    for (int v : nodes) {
      int deg = 0;
      for (int u : nodes) deg += rs.adjacent(u, v);
      if (deg >= 3) branch = v;
    }
    if (branch < 0) {
      sub *= weyl_group_order(RootType::A, m);
      continue;
    }
    std::vector<int> arms;
    for (int u : nodes) {
      if (!rs.adjacent(u, branch)) continue;
      int len = 0, prev = branch, cur = u;
      while (cur >= 0) {
        ++len;
        int next = -1;
        for (int x : nodes)
          if (x != prev && x != cur && rs.adjacent(x, cur)) next = x;
        prev = cur;
        cur = next;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) {
      sub *= weyl_group_order(RootType::D, m);
    } else {
      sub *= weyl_group_order(RootType::E, m);
    }
  }
  return weyl_group_order(rs.type(), n) / sub;
}

}  // namespace cominrule
