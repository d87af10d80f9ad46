#include <algorithm>
#include <bit>
#include <chrono>

#include "cominrule/verify.hpp"

namespace cominrule {

namespace {

struct RecursionData {
  const char* big;
  const char* small;
  std::vector<int> node_map;
  int small_beta;
  std::vector<int> delta;
};

// Node identifications in 0-based Bourbaki numbering. The E7 rows already
// include the mirror between the usual E7 drawing with the long arm on the
// left and Bourbaki's labels.
RecursionData data_for(RecursionKind kind) {
  switch (kind) {
    case RecursionKind::E6:
      // D5 nodes 1..5 -> E6 nodes 6,5,4,3,2; the small beta is D5 node 4
      return {"E6", "OG:5", {5, 4, 3, 2, 1}, 3, {0}};
    case RecursionKind::E7a:
      // E6 nodes 1..6 -> E7 nodes 6,2,5,4,3,1
      return {"E7", "E6", {5, 1, 4, 3, 2, 0}, 0, {6}};
    case RecursionKind::E7b:
      // D6 nodes 1..6 -> E7 nodes 7,6,5,4,3,2; delta = s1 s3 s4 s5 s6 s7
      return {"E7", "OG:6", {6, 5, 4, 3, 2, 1}, 5, {0, 2, 3, 4, 5, 6}};
  }
  throw std::logic_error("unknown recursion");
}

[[noreturn]] void broken(const Recursion& rec, const std::string& what) {
  throw std::logic_error(rec.name() + ": " + what);
}

}  // namespace

Mask Recursion::hat(Mask small_shape) const {
  Mask out = L;
  for (Mask m = small_shape; m; m &= m - 1) out |= bit(theta[std::countr_zero(m)]);
  return out;
}

std::string Recursion::name() const {
  switch (kind) {
    case RecursionKind::E6: return "Theta_E6";
    case RecursionKind::E7a: return "Theta_E7(a)";
    case RecursionKind::E7b: return "Theta_E7(b)";
  }
  return "?";
}

Recursion build_recursion(RecursionKind kind) {
  const RecursionData d = data_for(kind);
  Recursion rec{kind, Space::make(d.small), Space::make(d.big), d.node_map, d.small_beta, WeylElement{d.delta}, {}, 0,
                0, 0};
  const BoxPoset& big = rec.big->poset();
  const BoxPoset& small = rec.small->poset();
  const RootSystem& rs = big.roots();

  // the small poset realized inside the big root system
  std::vector<char> in_h(rs.rank(), 0);
  for (int v : d.node_map) in_h[v] = 1;
  const int beta_h = d.node_map[d.small_beta];
  std::vector<int> h_roots;
  for (int r = 0; r < rs.num_positive(); ++r) {
    const auto& c = rs.root(r).coeffs;
    bool supported = true;
    for (int i = 0; i < rs.rank(); ++i)
      if (c[i] && !in_h[i]) supported = false;
    if (supported && c[beta_h] == 1) h_roots.push_back(r);
  }
  Hasse h;
  h.up.resize(h_roots.size());
  for (std::size_t a = 0; a < h_roots.size(); ++a) {
    for (std::size_t b = 0; b < h_roots.size(); ++b) {
      std::vector<int> diff = rs.root(h_roots[b]).coeffs;
      for (int i = 0; i < rs.rank(); ++i) diff[i] -= rs.root(h_roots[a]).coeffs[i];
      auto r = rs.find(diff);
      if (r && rs.simple_index(*r)) h.up[a].push_back(static_cast<int>(b));
    }
  }
  auto iso = find_isomorphism(hasse_of(small), h);
  if (!iso) broken(rec, "node map does not reproduce the small box poset");

  WeylElement delta_inv{std::vector<int>(d.delta.rbegin(), d.delta.rend())};
  rec.theta.resize(small.size());
  for (int b = 0; b < small.size(); ++b) {
    auto img = big.box_of_root(rs.apply(delta_inv, h_roots[(*iso)[b]]));
    if (!img) broken(rec, "Theta leaves the box poset");
    if ((rec.image >> *img) & 1) broken(rec, "Theta is not injective");
    rec.theta[b] = *img;
    rec.image |= bit(*img);
  }
  for (int a = 0; a < small.size(); ++a)
    for (int b = 0; b < small.size(); ++b)
      if (small.precedes(a, b) != big.precedes(rec.theta[a], rec.theta[b])) broken(rec, "Theta is not an order embedding");

  for (int r : rs.inversion_set(rec.delta)) {
    auto box = big.box_of_root(r);
    if (!box) broken(rec, "I(delta) is not inside the box poset");
    rec.L |= bit(*box);
  }
  if (!big.is_ideal(rec.L)) broken(rec, "L = I(delta) is not a shape");
  if (rec.L & rec.image) broken(rec, "L meets the image of Theta");
  rec.Gamma = big.full() & ~rec.L & ~rec.image;
  for (Mask m = rec.image; m; m &= m - 1) {
    int g = std::countr_zero(m);
    if (big.above(g) & rec.L) broken(rec, "an element of L lies above the image");
    if (big.below(g) & rec.Gamma) broken(rec, "an element of Gamma lies below the image");
  }

  const auto& order = *iso;
  WeylElement w_delta;
  for (const Shape& g : rec.small->shapes()) {
    Mask hat = rec.hat(g.mask());
    if (!big.is_ideal(hat)) broken(rec, "gamma-hat is not a shape for gamma = " + print_shape(g));
    std::vector<int> roots;
    for (Mask m = g.mask(); m; m &= m - 1) roots.push_back(h_roots[order[std::countr_zero(m)]]);
    WeylElement w = element_with_inversions(rs, roots);
    w_delta.word = w.word;
    w_delta.word.insert(w_delta.word.end(), d.delta.begin(), d.delta.end());
    Mask inv = 0;
    for (int r : rs.inversion_set(w_delta)) {
      auto box = big.box_of_root(r);
      if (!box) broken(rec, "I(w delta) leaves the box poset");
      inv |= bit(*box);
    }
    if (inv != hat) broken(rec, "I(w delta) differs from gamma-hat for gamma = " + print_shape(g));
  }
  return rec;
}

Report check_recursion(const Recursion& rec, const CoeffTable& big, const CoeffTable& small) {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "recursion";
  rep.space = rec.big->spec().str();
  const BoxPoset& bp = rec.big->poset();
  const auto& bshapes = rec.big->shapes();
  const int nb = rec.big->num_shapes();
  const int ns = rec.small->num_shapes();

  std::vector<int> back(bp.size(), -1);
  for (std::size_t b = 0; b < rec.theta.size(); ++b) back[rec.theta[b]] = static_cast<int>(b);
  auto pull = [&](Mask m) {
    Mask out = 0;
    for (Mask t = m & rec.image; t; t &= t - 1) out |= bit(back[std::countr_zero(t)]);
    return out;
  };
  std::vector<int> hat_index(ns);
  for (int g = 0; g < ns; ++g) hat_index[g] = rec.big->index(rec.hat(rec.small->shapes()[g].mask()));
  const int iL = rec.big->index(rec.L);

  Shape outer(rec.big->poset(), rec.hat(rec.small->poset().full()));
  rep.notes.push_back(rec.name() + ": image " + print_skew(SkewShape(Shape(bp, rec.L), outer)) + ", |image| = " +
                      std::to_string(std::popcount(rec.image)) + ", |L| = " + std::to_string(std::popcount(rec.L)) +
                      ", |Gamma| = " + std::to_string(std::popcount(rec.Gamma)));

  for (int l = 0; l < nb; ++l) {
    const Mask lam = bshapes[l].mask();
    if ((rec.L & ~lam) != 0) continue;
    for (int v = 0; v < nb; ++v) {
      const Mask nu = bshapes[v].mask();
      if ((lam & ~nu) != 0 || (nu & rec.Gamma) != 0) continue;
      const int lbar = rec.small->index(pull(lam));
      const int vbar = rec.small->index(pull(nu));
      std::vector<std::pair<int, std::int64_t>> terms;
      for (int g = 0; g < ns; ++g)
        if (auto c = small.at(lbar, g, vbar)) terms.emplace_back(g, c);
      for (int m = 0; m < nb; ++m) {
        std::int64_t rhs = 0;
        for (auto [g, c] : terms) rhs += c * big.at(iL, m, hat_index[g]);
        std::int64_t lhs = big.at(l, m, v);
        ++rep.trials;
        if (lhs != rhs) {
          rep.fail(rec.name() + ": lam=" + print_shape(bshapes[l]) + " mu=" + print_shape(bshapes[m]) + " nu=" +
                   print_shape(bshapes[v]) + " gives " + std::to_string(lhs) + " but the recursion gives " +
                   std::to_string(rhs));
        }
      }
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace cominrule
