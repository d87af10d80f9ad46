#include "cominrule/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <functional>
#include <array>
#include <sstream>

namespace cominrule {

void Report::fail(std::string what) {
  ++violation_count;
  if (violations.size() < 50) violations.push_back(std::move(what));
}

nlohmann::json report_to_json(const Report& r) {
  return {{"suite", r.suite},     {"space", r.space}, {"trials", r.trials}, {"violations", r.violations},
          {"seed", r.seed},       {"elapsed_ms", r.elapsed_ms}, {"notes", r.notes}};
}

std::string report_to_text(const Report& r) {
  std::ostringstream out;
  out << r.suite << " on " << r.space << ": " << (r.ok() ? "pass" : "FAIL") << ", " << r.trials << " checks, "
      << r.violation_count << " violations, seed " << r.seed << ", " << static_cast<long>(r.elapsed_ms) << " ms\n";
  for (const auto& n : r.notes) out << "  " << n << '\n';
  for (const auto& v : r.violations) out << "  violation: " << v << '\n';
  if (r.violation_count > static_cast<std::int64_t>(r.violations.size())) {
    out << "  ... " << r.violation_count - static_cast<std::int64_t>(r.violations.size()) << " more\n";
  }
  return out.str();
}

Fault parse_fault(std::string_view name) {
  if (name == "none") return Fault::none;
  if (name == "corrupt_entry") return Fault::corrupt_entry;
  if (name == "wrong_tie_rule") return Fault::wrong_tie_rule;
  throw Error("unknown fault '" + std::string(name) + "'; expected none, corrupt_entry or wrong_tie_rule");
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"confluence", "infusion",  "axioms", "duality",    "chevalley",
                                              "associativity", "recursion", "oracle", "isomorphism"};
  return names;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

int random_bit(Rng& rng, Mask m) {
  int k = uniform(rng, std::popcount(m));
  for (; k > 0; --k) m &= m - 1;
  return std::countr_zero(m);
}

StandardTableau random_filling(const BoxPoset& p, Mask inner, Mask outer, Rng& rng) {
  StandardTableau t;
  t.poset = &p;
  t.inner = inner;
  t.outer = outer;
  const Mask cells = outer & ~inner;
  Mask placed = 0;
  for (int k = 1; placed != cells; ++k) {
    Mask avail = 0;
    for (Mask m = cells & ~placed; m; m &= m - 1) {
      int b = std::countr_zero(m);
      if ((p.lower_covers(b) & cells & ~placed) == 0) avail |= bit(b);
    }
    int b = random_bit(rng, avail);
    t.label[b] = static_cast<std::uint8_t>(k);
    placed |= bit(b);
  }
  return t;
}

// Random lambda strictly inside nu, both shapes of the space.
std::pair<Shape, Shape> random_skew(const Space& s, Rng& rng) {
  const auto& shapes = s.shapes();
  while (true) {
    const Shape& nu = shapes[uniform(rng, s.num_shapes())];
    if (nu.size() == 0) continue;
    std::vector<const Shape*> inside;
    for (const auto& l : shapes)
      if (nu.contains(l) && !(l == nu)) inside.push_back(&l);
    return {*inside[uniform(rng, static_cast<int>(inside.size()))], nu};
  }
}

detail::TieRule rule_for(Fault f) {
  return f == Fault::wrong_tie_rule ? detail::TieRule::largest : detail::TieRule::smallest;
}

int short_count(const BoxPoset& p, Mask m) { return std::popcount(m & p.short_mask()); }

// Adds one to a nonzero entry among the candidates.
void corrupt(CoeffTable& t, Rng& rng, const std::function<bool(int, int, int)>& eligible, Report& rep) {
  std::vector<std::array<int, 3>> cand;
  for (int l = 0; l < t.n(); ++l)
    for (int m = 0; m < t.n(); ++m)
      for (int v = 0; v < t.n(); ++v)
        if (t.at(l, m, v) && eligible(l, m, v)) cand.push_back({l, m, v});
  if (cand.empty()) throw Error("no table entry available to corrupt");
  auto [l, m, v] = cand[uniform(rng, static_cast<int>(cand.size()))];
  ++t.at(l, m, v);
  const auto& sh = t.space().shapes();
  rep.notes.push_back("corrupted entry lam=" + print_shape(sh[l]) + " mu=" + print_shape(sh[m]) +
                      " nu=" + print_shape(sh[v]));
}

bool any_entry(int, int, int) { return true; }

std::string triple(const std::vector<Shape>& sh, int l, int m, int v) {
  return "lam=" + print_shape(sh[l]) + " mu=" + print_shape(sh[m]) + " nu=" + print_shape(sh[v]);
}

// ---------------------------------------------------------------- confluence

void suite_confluence(const Space& s, Rng& rng, Fault fault, Report& rep) {
  const BoxPoset& p = s.poset();
  const auto rule = rule_for(fault);
  auto random_corner = [&](Mask m) { return random_bit(rng, m); };
  auto careful_rectify = [&](StandardTableau t, bool& standard) {
    while (t.inner) {
      t = detail::jdt_slide(t, random_corner(inner_corners(t)), rule).tableau;
      if (!is_standard(t)) standard = false;
    }
    return t;
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto [lam, nu] = random_skew(s, rng);
    StandardTableau t = random_filling(p, lam.mask(), nu.mask(), rng);
    bool standard = true;
    StandardTableau a = careful_rectify(t, standard);
    StandardTableau b = careful_rectify(t, standard);
    rep.trials += 2;
    std::string where = "filling of " + print_skew(SkewShape(lam, nu));
    if (!standard) rep.fail(where + ": a slide produced a non-standard filling");
    if (!(a == b)) rep.fail(where + ": two slide orders rectify differently");
    if (!(a == rectify(t))) rep.fail(where + ": rectification differs from the reference order");
    StandardTableau c = revrectify(t, random_corner);
    StandardTableau d = revrectify(t, random_corner);
    ++rep.trials;
    if (!(c == d)) rep.fail(where + ": two reverse slide orders disagree");
  }
  // every tableau of mu is hit equally often (checked on small skew shapes)
  int checked = 0;
  for (int attempt = 0; attempt < 400 && checked < 20; ++attempt) {
    auto [lam, nu] = random_skew(s, rng);
    SkewShape skew(lam, nu);
    if (count_syt(skew) > 3000) continue;
    ++checked;
    std::map<std::vector<std::uint8_t>, std::int64_t> hits;
    std::map<Mask, std::set<std::vector<std::uint8_t>>> by_shape;
    for_each_syt(p, lam.mask(), nu.mask(), [&](const StandardTableau& t) {
      StandardTableau r = detail::rectify(t, rule);
      std::vector<std::uint8_t> key(r.label.begin(), r.label.end());
      ++hits[key];
      by_shape[r.outer].insert(key);
    });
    for (const auto& [mu, keys] : by_shape) {
      ++rep.trials;
      std::int64_t first = hits[*keys.begin()];
      bool equal = std::all_of(keys.begin(), keys.end(), [&](const auto& k) { return hits[k] == first; });
      auto all = count_syt(SkewShape(Shape::empty(p), Shape(p, mu)));
      if (!equal || keys.size() != all) {
        rep.fail(print_skew(skew) + ": fillings do not rectify equally often onto the tableaux of " +
                 print_shape(Shape(p, mu)));
      }
    }
  }
}

// ---------------------------------------------------------------- infusion

void suite_infusion(const Space& s, Rng& rng, Fault fault, Report& rep) {
  const BoxPoset& p = s.poset();
  const auto rule = rule_for(fault);
  for (int trial = 0; trial < 200; ++trial) {
    auto [lam, nu] = random_skew(s, rng);
    StandardTableau t = random_filling(p, 0, lam.mask(), rng);
    StandardTableau u = random_filling(p, lam.mask(), nu.mask(), rng);
    std::string where = "T on " + print_shape(lam) + ", U on " + print_skew(SkewShape(lam, nu));
    ++rep.trials;
    auto [x, y] = detail::infusion(t, u, rule);
    if (!is_standard(x) || !is_standard(y) || x.inner || y.outer != nu.mask() || x.size() != u.size()) {
      rep.fail(where + ": infusion output is not a straight/skew pair of standard tableaux");
      continue;
    }
    auto [t2, u2] = detail::infusion(x, y, rule);
    if (!(t2 == t) || !(u2 == u)) rep.fail(where + ": infusion is not an involution");
    auto [rx, ry] = revinfusion(t, u);
    if (!(rx == x) || !(ry == y)) rep.fail(where + ": revinfusion differs from infusion");
    auto [bt, bu] = revinfusion(x, y);
    if (!(bt == t) || !(bu == u)) rep.fail(where + ": revinfusion does not undo infusion");
  }
  if (s.num_shapes() > 30) return;
  for (const Shape& mu : s.shapes()) {
    const Mask rot = p.rotate_mask(mu.mask());
    const Mask inner = p.full() & ~rot;
    const auto straight = count_syt(SkewShape(Shape::empty(p), mu));
    std::uint64_t seen = 0;
    std::set<std::vector<std::uint8_t>> images;
    for_each_syt(p, inner, p.full(), [&](const StandardTableau& t) {
      ++seen;
      ++rep.trials;
      StandardTableau r = detail::rectify(t, rule);
      if (!is_standard(r) || r.outer != mu.mask()) {
        rep.fail("rotate" + print_shape(mu) + ": rectification leaves SYT(" + print_shape(mu) + ")");
        return;
      }
      images.insert(std::vector<std::uint8_t>(r.label.begin(), r.label.end()));
      if (!(revrectify(r) == t)) rep.fail("rotate" + print_shape(mu) + ": revrectify does not invert rectify");
    });
    if (seen != straight || images.size() != straight) {
      rep.fail("rotate" + print_shape(mu) + ": rectification is not a bijection onto SYT(" + print_shape(mu) + ")");
    }
  }
}

// ---------------------------------------------------------------- tables

std::vector<int> duals(const Space& s) {
  std::vector<int> d(s.num_shapes());
  for (int i = 0; i < s.num_shapes(); ++i) d[i] = s.index(rotate_complement(s.shapes()[i]));
  return d;
}

void suite_axioms(const Space& s, const CoeffTable& t, Report& rep) {
  const auto& sh = s.shapes();
  const BoxPoset& p = s.poset();
  const int n = s.num_shapes();
  const auto dual = duals(s);
  const bool comin = p.flavor() == Flavor::cominuscule;
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        const std::int64_t e = t.at(l, m, v);
        const std::int64_t others[5] = {t.at(m, l, v), t.at(dual[v], m, dual[l]), t.at(m, dual[v], dual[l]),
                                        t.at(l, dual[v], dual[m]), t.at(dual[v], l, dual[m])};
        rep.trials += 3;
        for (auto o : others)
          if (o != e) {
            rep.fail("(I) " + triple(sh, l, m, v) + ": six-fold symmetry broken");
            break;
          }
        if (sh[l].size() + sh[m].size() != sh[v].size() && e) rep.fail("(II) " + triple(sh, l, m, v) + " nonzero");
        if (!sh[v].contains(sh[l]) && e) rep.fail("(III) " + triple(sh, l, m, v) + " nonzero");
      }
  std::vector<std::int64_t> f(n);
  for (int g = 0; g < n; ++g) f[g] = static_cast<std::int64_t>(count_syt(SkewShape(Shape::empty(p), sh[g])));
  for (int l = 0; l < n; ++l)
    for (int v = 0; v < n; ++v) {
      if (!sh[v].contains(sh[l])) continue;
      ++rep.trials;
      const int size = sh[v].size() - sh[l].size();
      const Mask skew = sh[v].mask() & ~sh[l].mask();
      std::int64_t lhs = 0;
      for (int g = 0; g < n; ++g)
        if (sh[g].size() == size) lhs += f[g] * t.at(l, g, v) * (comin ? std::int64_t{1} << short_count(p, sh[g].mask()) : 1);
      auto fs = static_cast<std::int64_t>(count_syt(SkewShape(sh[l], sh[v])));
      std::int64_t rhs = fs * (comin ? std::int64_t{1} << short_count(p, skew) : 1);
      if (lhs != rhs) {
        rep.fail("(IV) " + print_skew(SkewShape(sh[l], sh[v])) + ": sum is " + std::to_string(lhs) + ", expected " +
                 std::to_string(rhs));
      }
    }
}

void suite_duality(const Space& s, const CoeffTable& t, Report& rep) {
  const auto& sh = s.shapes();
  const BoxPoset& p = s.poset();
  const int n = s.num_shapes();
  const int top = n - 1;
  const auto dual = duals(s);
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m) {
      if (sh[l].size() + sh[m].size() == p.size()) {
        ++rep.trials;
        std::int64_t want = dual[m] == l ? 1 : 0;
        if (t.at(l, m, top) != want) {
          rep.fail(triple(sh, l, m, top) + ": top coefficient " + std::to_string(t.at(l, m, top)) + ", expected " +
                   std::to_string(want));
        }
      }
      if (sh[l].mask() & p.rotate_mask(sh[m].mask())) {
        for (int v = 0; v < n; ++v) {
          ++rep.trials;
          if (t.at(l, m, v)) rep.fail(triple(sh, l, m, v) + ": lam meets rotate(mu) but the coefficient is nonzero");
        }
      }
    }
}

std::map<Shape, std::int64_t> row(const Space& s, const CoeffTable& t, int l, int m) {
  std::map<Shape, std::int64_t> out;
  for (int v = 0; v < s.num_shapes(); ++v)
    if (t.at(l, m, v)) out.emplace(s.shapes()[v], t.at(l, m, v));
  return out;
}

std::map<Shape, std::int64_t> expected_quadric_power(const Space& s, int k) {
  const BoxPoset& p = s.poset();
  const int n = s.spec().n;
  auto sh = [&](std::vector<int> cols) { return Shape(p, p.ideal_from_columns(cols)); };
  auto ones = [](int c) { return std::vector<int>(c, 1); };
  auto cat = [](std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  if (s.spec().family == Family::QB) return {{sh(ones(k)), k < n ? 1 : 2}};
  if (k <= n - 2) return {{sh(ones(k)), 1}};
  if (k == n - 1) return {{sh(cat(ones(n - 3), {2})), 1}, {sh(ones(n - 1)), 1}};
  if (k == n) return {{sh(cat(ones(n - 3), {2, 1})), 2}};
  return {{sh(cat(cat(ones(n - 3), {2, 2}), ones(k - n - 1))), 2}};
}

void suite_chevalley(const Space& s, const CoeffTable& t, Report& rep) {
  const auto& sh = s.shapes();
  const BoxPoset& p = s.poset();
  const int box = s.index(Shape(p, bit(0)));
  for (int l = 0; l < s.num_shapes(); ++l) {
    auto want = chevalley_product(sh[l], s);
    rep.trials += 2;
    if (row(s, t, l, box) != want || row(s, t, box, l) != want) {
      rep.fail("sigma_box * sigma" + print_shape(sh[l]) + " disagrees with the Chevalley formula");
    }
  }
  for (int i = 0; i <= p.size(); ++i) {
    ++rep.trials;
    auto iterated = box_power(i, s);
    if (iterated != box_power_closed_form(i, s)) rep.fail("box power " + std::to_string(i) + " disagrees with f^gamma form");
    // sigma_box^i through the table: sum over shapes of the previous power
    if (i > 0) {
      std::map<Shape, std::int64_t> via_table;
      for (const auto& [g, c] : box_power(i - 1, s)) {
        for (auto [nu, d] : row(s, t, box, s.index(g))) via_table[nu] += c * d;
      }
      if (via_table != iterated) rep.fail("box power " + std::to_string(i) + " disagrees with the table");
    }
    const Family fam = s.spec().family;
    if ((fam == Family::QB || fam == Family::QD) && i >= 1) {
      ++rep.trials;
      if (iterated != expected_quadric_power(s, i)) rep.fail("box power " + std::to_string(i) + " breaks the quadric formula");
    }
  }
  if (s.spec().family == Family::QD) {
    const int n = s.spec().n;
    std::vector<int> a(n - 3, 1), b(n - 1, 1), c(n - 3, 1);
    a.push_back(2);
    c.push_back(2);
    c.push_back(1);
    std::map<Shape, std::int64_t> want{{Shape(p, p.ideal_from_columns(c)), 1}};
    rep.trials += 2;
    if (row(s, t, box, s.index(Shape(p, p.ideal_from_columns(a)))) != want ||
        row(s, t, box, s.index(Shape(p, p.ideal_from_columns(b)))) != want) {
      rep.fail("sigma_box times a middle class is not the class above both");
    }
  }
}

void suite_associativity(const Space& s, const CoeffTable& t, Rng& rng, Report& rep) {
  const auto& sh = s.shapes();
  const int n = s.num_shapes();
  auto check = [&](int a, int b, int c) {
    ++rep.trials;
    for (int r = 0; r < n; ++r) {
      std::int64_t lhs = 0, rhs = 0;
      for (int k = 0; k < n; ++k) {
        lhs += t.at(a, b, k) * t.at(k, c, r);
        rhs += t.at(b, c, k) * t.at(a, k, r);
      }
      if (lhs != rhs) {
        rep.fail("(" + print_shape(sh[a]) + " * " + print_shape(sh[b]) + ") * " + print_shape(sh[c]) +
                 " differs at " + print_shape(sh[r]));
        return;
      }
    }
  };
  if (n <= 30) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check(a, b, c);
  } else {
    // (box, a, b) reaches every entry c_{lam,mu}^nu with lam nonempty through
    // a = lam minus a corner; then random triples
    const int box = s.index(Shape(s.poset(), bit(0)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        check(box, a, b);
        check(a, b, box);
      }
    for (int i = 0; i < 500; ++i) check(uniform(rng, n), uniform(rng, n), uniform(rng, n));
  }
}

void suite_oracle(const Space& s, const CoeffTable& t, Report& rep) {
  const auto& sh = s.shapes();
  const BoxPoset& p = s.poset();
  const int n = s.num_shapes();
  const int k = s.spec().k, nn = s.spec().n;
  std::vector<std::vector<int>> parts(n);
  for (int i = 0; i < n; ++i) parts[i] = p.column_counts(sh[i].mask());
  for (int l = 0; l < n; ++l)
    for (int m = 0; m < n; ++m)
      for (int v = 0; v < n; ++v) {
        ++rep.trials;
        auto want = lr_oracle_typeA(parts[l], parts[m], parts[v], k, nn);
        if (t.at(l, m, v) != want) {
          rep.fail(triple(sh, l, m, v) + ": rule gives " + std::to_string(t.at(l, m, v)) + ", oracle gives " +
                   std::to_string(want));
        }
      }
}

// ---------------------------------------------------------------- isomorphisms

enum class Relation { equal, power_of_two, chain };

void compare_tables(const CoeffTable& a, const CoeffTable& b, Relation rel, Report& rep) {
  const Space& sa = a.space();
  const Space& sb = b.space();
  const auto& sh = sa.shapes();
  const BoxPoset& pa = sa.poset();
  std::vector<int> map(sa.num_shapes());
  if (rel != Relation::chain) {
    auto phi = find_isomorphism(hasse_of(pa), hasse_of(sb.poset()));
    if (!phi) {
      rep.fail(sa.spec().str() + " and " + sb.spec().str() + " have non-isomorphic box posets");
      return;
    }
    for (int i = 0; i < sa.num_shapes(); ++i) {
      Mask m = 0;
      for (Mask t = sh[i].mask(); t; t &= t - 1) m |= bit((*phi)[std::countr_zero(t)]);
      map[i] = sb.index(m);
    }
  }
  const std::string tag = sa.spec().str() + " vs " + sb.spec().str() + ": ";
  for (int l = 0; l < sa.num_shapes(); ++l)
    for (int m = 0; m < sa.num_shapes(); ++m)
      for (int v = 0; v < sa.num_shapes(); ++v) {
        ++rep.trials;
        const std::int64_t x = a.at(l, m, v);
        bool ok = true;
        switch (rel) {
          case Relation::equal: ok = x == b.at(map[l], map[m], map[v]); break;
          case Relation::power_of_two: {
            const std::int64_t y = b.at(map[l], map[m], map[v]);
            const Mask skew = sh[v].mask() & ~sh[l].mask();
            ok = sh[v].contains(sh[l]) ? x * (std::int64_t{1} << short_count(pa, sh[m].mask())) ==
                                              y * (std::int64_t{1} << short_count(pa, skew))
                                        : x == 0 && y == 0;
            break;
          }
          case Relation::chain:
            ok = x == (sh[l].size() + sh[m].size() == sh[v].size() ? 1 : 0);
            break;
        }
        if (!ok) rep.fail(tag + triple(sh, l, m, v));
      }
}

void suite_isomorphism(const Space& s, const CoeffTable& t, Report& rep) {
  const int n = s.spec().n;
  switch (s.spec().family) {
    case Family::OGmin: {
      auto other = Space::make("OG:" + std::to_string(n + 1));
      compare_tables(t, full_table(other), Relation::equal, rep);
      break;
    }
    case Family::LG: {
      if (n < 3) throw Error("LG:2 has no spinor partner (D3 is not supported)");
      auto other = Space::make("OG:" + std::to_string(n + 1));
      compare_tables(t, full_table(other), Relation::power_of_two, rep);
      break;
    }
    case Family::Pmin: {
      compare_tables(t, t, Relation::chain, rep);
      if (n >= 3) {
        auto quadric = Space::make("QB:" + std::to_string(n));
        // the odd quadric carries the short middle box, so it gets the powers of two
        compare_tables(full_table(quadric), t, Relation::power_of_two, rep);
      }
      break;
    }
    default:
      throw Error("the isomorphism suite applies to OGmin:n, LG:n and Pmin:n");
  }
}

}  // namespace

Report check_cross_isomorphisms() {
  auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.suite = "isomorphism";
  rep.space = "all";
  std::vector<std::string> spaces{"OGmin:3", "OGmin:4", "OGmin:5", "LG:3", "LG:4", "Pmin:2", "Pmin:3", "Pmin:4"};
  for (const auto& name : spaces) {
    auto s = Space::make(name);
    auto t = full_table(s);
    suite_isomorphism(*s, t, rep);
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

Report run_suite(std::string_view space_name, std::string_view suite, std::uint64_t seed, Fault fault) {
  auto start = std::chrono::steady_clock::now();
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw Error("unknown suite '" + std::string(suite) + "'");
  }
  auto space = Space::make(space_name);
  Report rep;
  rep.suite = suite;
  rep.space = space->spec().str();
  rep.seed = seed;
  Rng rng(seed);
  const auto& sh = space->shapes();

  auto table = [&](const std::function<bool(int, int, int)>& eligible) {
    CoeffTable t = full_table(space);
    if (fault == Fault::corrupt_entry) corrupt(t, rng, eligible, rep);
    return t;
  };

  if (suite == "confluence") {
    suite_confluence(*space, rng, fault, rep);
  } else if (suite == "infusion") {
    suite_infusion(*space, rng, fault, rep);
  } else if (suite == "axioms") {
    suite_axioms(*space, table(any_entry), rep);
  } else if (suite == "duality") {
    const int top = space->num_shapes() - 1;
    suite_duality(*space, table([&](int, int, int v) { return v == top; }), rep);
  } else if (suite == "chevalley") {
    const int box = space->index(Shape(space->poset(), bit(0)));
    suite_chevalley(*space, table([&](int, int m, int) { return m == box; }), rep);
  } else if (suite == "associativity") {
    suite_associativity(*space, table([&](int l, int m, int) { return sh[l].size() > 0 && sh[m].size() > 0; }), rng,
                        rep);
  } else if (suite == "oracle") {
    if (space->spec().family != Family::Gr) throw Error("the oracle suite applies to Gr:k,n only");
    suite_oracle(*space, table(any_entry), rep);
  } else if (suite == "isomorphism") {
    suite_isomorphism(*space, table(any_entry), rep);
  } else if (suite == "recursion") {
    std::vector<RecursionKind> kinds;
    if (space->spec().family == Family::E6) {
      kinds = {RecursionKind::E6};
    } else if (space->spec().family == Family::E7) {
      kinds = {RecursionKind::E7a, RecursionKind::E7b};
    } else {
      throw Error("the recursion suite applies to E6 and E7");
    }
    bool corrupted = false;
    for (auto kind : kinds) {
      Recursion rec = build_recursion(kind);
      CoeffTable big = full_table(rec.big);
      CoeffTable small = full_table(rec.small);
      if (fault == Fault::corrupt_entry && !corrupted) {
        const auto& bs = rec.big->shapes();
        corrupt(big, rng, [&](int l, int, int v) {
          return (rec.L & ~bs[l].mask()) == 0 && (bs[v].mask() & rec.Gamma) == 0 && bs[v].contains(bs[l]);
        }, rep);
        corrupted = true;
      }
      Report part = check_recursion(rec, big, small);
      rep.trials += part.trials;
      for (auto& v : part.violations) rep.fail(v);
      rep.violation_count += part.violation_count - static_cast<std::int64_t>(part.violations.size());
      rep.notes.insert(rep.notes.end(), part.notes.begin(), part.notes.end());
      const BoxPoset& bp = rec.big->poset();
      std::string region =
          print_skew(SkewShape(Shape(bp, rec.L), Shape(bp, rec.hat(rec.small->poset().full()))));
      std::string expected = kind == RecursionKind::E6    ? "(1,1,2,3,3,1)/(1)"
                             : kind == RecursionKind::E7b ? "(1,1,1,2,5,5,3,3)/(1,1,1,1,1,1)"
                                                          : "";
      ++rep.trials;
      if (!expected.empty() && region != expected) rep.fail(rec.name() + ": image region " + region + ", expected " + expected);
    }
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace cominrule
