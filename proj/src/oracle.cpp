// Classical Littlewood-Richardson rule: c_{lambda,mu}^nu counts semistandard
// fillings of nu/lambda with content mu whose reverse reading word (rows top
// to bottom, each right to left) is a lattice word. Shares nothing with the
// jeu de taquin code.

#include <numeric>

#include "cominrule/verify.hpp"

namespace cominrule {

namespace {

bool fits(const std::vector<int>& p, int rows, int cols) {
  if (static_cast<int>(p.size()) > rows) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] > cols) return false;
    if (i && p[i] > p[i - 1]) return false;
  }
  return true;
}

int part(const std::vector<int>& p, std::size_t i) { return i < p.size() ? p[i] : 0; }

struct LatticeCounter {
  std::vector<int> lam, mu, nu;
  std::vector<std::vector<int>> fill;  // fill[r][c] for lam[r] <= c < nu[r]
  std::vector<int> used;               // how many of each value placed
  std::int64_t count = 0;

  void run() {
    fill.assign(nu.size(), {});
    for (std::size_t r = 0; r < nu.size(); ++r) fill[r].assign(nu[r], 0);
    used.assign(mu.size() + 1, 0);
    step(0, nu.empty() ? 0 : nu[0] - 1);
  }

  void step(std::size_t r, int c) {
    if (r == nu.size()) {
      ++count;
      return;
    }
    if (c < part(lam, r)) {
      std::size_t nr = r + 1;
      step(nr, nr < nu.size() ? nu[nr] - 1 : 0);
      return;
    }
    // weakly increasing along the row: at most the entry to the right
    int hi = static_cast<int>(mu.size());
    if (c + 1 < nu[r]) hi = std::min(hi, fill[r][c + 1]);
    // strictly increasing down the column
    int lo = 1;
    if (r > 0 && c < nu[r - 1] && c >= part(lam, r - 1)) lo = fill[r - 1][c] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= mu[v - 1]) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;  // lattice condition
      fill[r][c] = v;
      ++used[v];
      step(r, c - 1);
      --used[v];
    }
    fill[r][c] = 0;
  }
};

std::vector<int> trimmed(std::vector<int> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

std::int64_t lr_oracle_typeA(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu,
                             int k, int n) {
  auto l = trimmed(lambda), m = trimmed(mu), v = trimmed(nu);
  const int a = k, b = n - k;
  auto in_box = [&](const std::vector<int>& p) { return fits(p, a, b) || fits(p, b, a); };
  if (!in_box(l) || !in_box(m) || !in_box(v)) return 0;
  if (!(fits(l, a, b) && fits(m, a, b) && fits(v, a, b)) && !(fits(l, b, a) && fits(m, b, a) && fits(v, b, a))) {
    return 0;
  }
  const int sl = std::accumulate(l.begin(), l.end(), 0);
  const int sm = std::accumulate(m.begin(), m.end(), 0);
  const int sv = std::accumulate(v.begin(), v.end(), 0);
  if (sl + sm != sv || l.size() > v.size()) return 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] > v[i]) return 0;
  LatticeCounter counter{l, m, v, {}, {}, 0};
  counter.run();
  return counter.count;
}

}  // namespace cominrule
