#include "cominrule/kernels.hpp"

#include <bit>
#include <vector>

namespace cominrule {

bool is_first_tableau(const StandardTableau& t) {
  if (t.inner) return false;
  int k = 0;
  for (Mask m = t.outer; m; m &= m - 1)
    if (t.label[std::countr_zero(m)] != ++k) return false;
  return true;
}

namespace {

void tally(const StandardTableau& t, std::map<Mask, std::int64_t>& out) {
  StandardTableau r = rectify(t);
  if (is_first_tableau(r)) ++out[r.outer];
}

}  // namespace

std::map<Mask, std::int64_t> rectification_counts(const BoxPoset& poset, Mask inner, Mask outer, Exec exec) {
  std::map<Mask, std::int64_t> out;
  const Mask cells = outer & ~inner;
  if (exec == Exec::serial || cells == 0) {
    for_each_syt(poset, inner, outer, [&](const StandardTableau& t) { tally(t, out); });
    return out;
  }
  // label 1 sits on a minimal cell c; the rest is a filling of outer \ (inner + c)
  std::vector<int> firsts;
  for (Mask m = poset.minimal(cells); m; m &= m - 1) firsts.push_back(std::countr_zero(m));
  std::vector<std::map<Mask, std::int64_t>> parts(firsts.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < firsts.size(); ++i) {
    const int c = firsts[i];
    for_each_syt(poset, inner | bit(c), outer, [&](const StandardTableau& rest) {
      StandardTableau t = rest;
      t.inner = inner;
      for (Mask m = cells; m; m &= m - 1) {
        int b = std::countr_zero(m);
        if (b != c) ++t.label[b];
      }
      t.label[c] = 1;
      tally(t, parts[i]);
    });
  }
  for (const auto& p : parts)
    for (const auto& [mu, n] : p) out[mu] += n;
  return out;
}

}  // namespace cominrule
