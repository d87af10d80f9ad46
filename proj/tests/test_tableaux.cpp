#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cominrule/tableau.hpp"

using namespace cominrule;

namespace {

struct Cell {
  int col, row, label;
};

// Tableau drawn the way the examples are drawn: columns left to right, rows
// bottom to top, inner and outer shapes as column tuples.
StandardTableau drawn(const BoxPoset& p, Mask inner, Mask outer, std::initializer_list<Cell> cells) {
  std::array<std::uint8_t, kMaxBoxes> label{};
  for (const Cell& c : cells) {
    auto b = p.box_at({c.col, c.row});
    REQUIRE(b.has_value());
    label[*b] = static_cast<std::uint8_t>(c.label);
  }
  return make_tableau(SkewShape(Shape(p, inner), Shape(p, outer)), label);
}

StandardTableau drawn(const BoxPoset& p, const char* inner, const char* outer, std::initializer_list<Cell> cells) {
  return drawn(p, parse_shape(inner, p).mask(), parse_shape(outer, p).mask(), cells);
}

StandardTableau random_tableau(const BoxPoset& p, Mask inner, Mask outer, std::mt19937_64& rng) {
  std::array<std::uint8_t, kMaxBoxes> label{};
  Mask placed = inner;
  for (int k = 1; placed != outer; ++k) {
    std::vector<int> choices;
    for (Mask m = outer & ~placed; m; m &= m - 1) {
      int b = std::countr_zero(m);
      if ((p.below(b) & ~placed) == 0) choices.push_back(b);
    }
    int b = choices[rng() % choices.size()];
    label[b] = static_cast<std::uint8_t>(k);
    placed |= bit(b);
  }
  return make_tableau(SkewShape(Shape(p, inner), Shape(p, outer)), label);
}

std::pair<Shape, Shape> random_skew(const std::vector<Shape>& shapes, std::mt19937_64& rng) {
  for (;;) {
    const Shape& a = shapes[rng() % shapes.size()];
    const Shape& b = shapes[rng() % shapes.size()];
    if (b.contains(a)) return {a, b};
    if (a.contains(b)) return {b, a};
  }
}

// Hook length formula for a partition given by its column lengths.
std::uint64_t hook_count(std::vector<int> cols) {
  std::vector<int> rows;
  for (int r = 0; r < (cols.empty() ? 0 : cols[0]); ++r)
    rows.push_back(static_cast<int>(std::count_if(cols.begin(), cols.end(), [&](int c) { return c > r; })));
  int n = std::accumulate(cols.begin(), cols.end(), 0);
  double f = 1;
  for (int i = 1; i <= n; ++i) f *= i;
  for (int r = 0; r < static_cast<int>(rows.size()); ++r)
    for (int c = 0; c < rows[r]; ++c) f /= (rows[r] - c - 1) + (cols[c] - r - 1) + 1;
  return static_cast<std::uint64_t>(f + 0.5);
}

// The reflection of a tableau through rotate: box b goes to rotate(b), label
// i to |T| - i + 1.
StandardTableau rotated(const StandardTableau& t) {
  const BoxPoset& p = *t.poset;
  StandardTableau r;
  r.poset = t.poset;
  r.inner = p.rotate_mask(p.full() & ~t.outer);
  r.outer = p.rotate_mask(p.full() & ~t.inner);
  int n = t.size();
  for (Mask m = t.cells(); m; m &= m - 1) {
    int b = std::countr_zero(m);
    r.label[p.rotate(b)] = static_cast<std::uint8_t>(n - t.label[b] + 1);
  }
  return r;
}

const char* kSpaces[] = {"Gr:3,6", "Gr:2,5", "LG:4", "QB:4", "QD:6", "OG:5", "E6", "E7", "Pmin:3", "OGmin:4"};

}  // namespace

TEST_SUITE("tableaux") {
  TEST_CASE("tableau counts from the worked examples") {
    auto gr = build_box_poset(SpaceSpec::parse("Gr:4,7"));
    CHECK(count_syt(SkewShape(parse_shape("3,1", gr), parse_shape("4,2,1", gr))) == 6);
    auto lg = build_box_poset(SpaceSpec::parse("LG:4"));
    CHECK(count_syt(SkewShape(parse_shape("2,1", lg), parse_shape("4,2", lg))) == 2);
    SkewShape empty(parse_shape("2,1", lg), parse_shape("2,1", lg));
    CHECK(count_syt(empty) == 1);
    CHECK(enumerate_syt(empty).size() == 1);
  }

  TEST_CASE("straight Grassmannian counts match the hook length formula") {
    for (const char* s : {"Gr:3,6", "Gr:2,5", "Gr:4,7"}) {
      auto p = build_box_poset(SpaceSpec::parse(s));
      for (const Shape& sh : all_shapes(p)) {
        CAPTURE(print_shape(sh));
        CHECK(count_syt(SkewShape(Shape::empty(p), sh)) == hook_count(p.column_counts(sh.mask())));
      }
    }
  }

  TEST_CASE("enumeration is complete, sorted and standard") {
    std::mt19937_64 rng(7);
    for (const char* s : kSpaces) {
      INFO(std::string(s));
      auto p = build_box_poset(SpaceSpec::parse(s));
      auto shapes = all_shapes(p);
      for (int trial = 0; trial < 15; ++trial) {
        auto [in, out] = random_skew(shapes, rng);
        SkewShape sk(in, out);
        if (count_syt(sk) > 20000) continue;
        auto all = enumerate_syt(sk);
        CHECK(all.size() == count_syt(sk));
        CHECK(std::all_of(all.begin(), all.end(), is_standard));
        CHECK(std::is_sorted(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.label < b.label; }));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
        CHECK(enumerate_syt_parallel(sk) == all);
        if (!all.empty()) CHECK(all.front() == first_tableau(sk));
      }
    }
  }

  TEST_CASE("E7 slide of the displayed tableau") {
    auto p = build_box_poset(SpaceSpec::parse("E7"));
    auto t = drawn(p, "1,1,1,2,1", "1,1,1,2,4,3,1",
                   {{5, 2, 1}, {5, 3, 2}, {6, 1, 3}, {6, 2, 4}, {6, 3, 5}, {7, 3, 6}, {5, 4, 7}});
    auto want = drawn(p, "1,1,1,2", "1,1,1,2,4,3",
                      {{5, 1, 1}, {5, 2, 2}, {6, 1, 3}, {6, 2, 4}, {5, 3, 5}, {6, 3, 6}, {5, 4, 7}});
    auto x = *p.box_at({5, 1});
    auto r = jdt_slide(t, x);
    CHECK(r.tableau == want);
    CHECK(r.vacated == *p.box_at({7, 3}));
    CHECK(rev_slide(r.tableau, r.vacated).tableau == t);
  }

  TEST_CASE("slides reject boxes that are not corners") {
    auto p = build_box_poset(SpaceSpec::parse("Gr:3,6"));
    auto t = first_tableau(SkewShape(parse_shape("2,1", p), parse_shape("3,2,1", p)));
    CHECK_THROWS_AS(jdt_slide(t, *p.box_at({1, 1})), Error);
    CHECK_THROWS_AS(rev_slide(t, *p.box_at({1, 1})), Error);
    CHECK_THROWS_AS(make_tableau(SkewShape(parse_shape("2", p), parse_shape("2,1", p)), {}), Error);
  }

  TEST_CASE("single box slides") {
    auto p = build_box_poset(SpaceSpec::parse("Gr:2,4"));
    auto t = first_tableau(SkewShape(parse_shape("1", p), parse_shape("2", p)));
    auto r = jdt_slide(t, 0);
    CHECK(r.tableau.label[0] == 1);
    CHECK(r.vacated == *p.box_at({1, 2}));
    auto up = rev_slide(r.tableau, r.vacated);
    CHECK(up.tableau == t);
  }

  TEST_CASE("forward and reverse slides undo each other") {
    std::mt19937_64 rng(11);
    for (const char* s : kSpaces) {
      INFO(std::string(s));
      auto p = build_box_poset(SpaceSpec::parse(s));
      auto shapes = all_shapes(p);
      for (int trial = 0; trial < 60; ++trial) {
        auto [in, out] = random_skew(shapes, rng);
        auto t = random_tableau(p, in.mask(), out.mask(), rng);
        for (Mask m = inner_corners(t); m; m &= m - 1) {
          auto r = jdt_slide(t, std::countr_zero(m));
          CHECK(is_standard(r.tableau));
          CHECK(rev_slide(r.tableau, r.vacated).tableau == t);
        }
        for (Mask m = outer_corners(t); m; m &= m - 1) {
          auto r = rev_slide(t, std::countr_zero(m));
          CHECK(is_standard(r.tableau));
          CHECK(jdt_slide(r.tableau, r.vacated).tableau == t);
        }
      }
    }
  }

  TEST_CASE("reverse slides are forward slides on the rotated poset") {
    std::mt19937_64 rng(13);
    for (const char* s : kSpaces) {
      INFO(std::string(s));
      auto p = build_box_poset(SpaceSpec::parse(s));
      auto shapes = all_shapes(p);
      for (int trial = 0; trial < 40; ++trial) {
        auto [in, out] = random_skew(shapes, rng);
        auto t = random_tableau(p, in.mask(), out.mask(), rng);
        auto rt = rotated(t);
        REQUIRE(is_standard(rt));
        for (Mask m = outer_corners(t); m; m &= m - 1) {
          int x = std::countr_zero(m);
          auto a = rev_slide(t, x);
          auto b = jdt_slide(rt, p.rotate(x));
          CHECK(rotated(a.tableau) == b.tableau);
          CHECK(p.rotate(a.vacated) == b.vacated);
        }
      }
    }
  }

  TEST_CASE("rectifications from the worked examples") {
    auto gr = build_box_poset(SpaceSpec::parse("Gr:4,7"));
    auto t21 = drawn(gr, "", "2,1", {{1, 1, 1}, {1, 2, 2}, {2, 1, 3}});
    CHECK(t21 == first_tableau(SkewShape(Shape::empty(gr), parse_shape("2,1", gr))));
    CHECK(rectify(drawn(gr, "3,1", "4,2,1", {{1, 4, 2}, {2, 2, 1}, {3, 1, 3}})) == t21);
    CHECK(rectify(drawn(gr, "3,1", "4,2,1", {{1, 4, 2}, {2, 2, 3}, {3, 1, 1}})) == t21);
    int hits = 0;
    for (const auto& t : enumerate_syt(SkewShape(parse_shape("3,1", gr), parse_shape("4,2,1", gr))))
      hits += rectify(t) == t21;
    CHECK(hits == 2);

    auto lg = build_box_poset(SpaceSpec::parse("LG:4"));
    CHECK(rectify(drawn(lg, "2,1", "4,2", {{1, 3, 1}, {1, 4, 2}, {2, 3, 3}})) ==
          drawn(lg, "", "2,1", {{1, 1, 1}, {1, 2, 2}, {2, 2, 3}}));

    auto qb = build_box_poset(SpaceSpec::parse("QB:4"));
    CHECK(rectify(drawn(qb, "1,1", "1,1,1,1", {{3, 1, 1}, {4, 1, 2}})) ==
          drawn(qb, "", "1,1", {{1, 1, 1}, {2, 1, 2}}));

    auto q5 = build_box_poset(SpaceSpec::parse("QD:5"));
    CHECK(rectify(drawn(q5, parse_shape("1,1,2", q5).mask(), q5.full(),
                        {{4, 1, 1}, {4, 2, 2}, {5, 2, 3}, {6, 2, 4}})) ==
          drawn(q5, "", "1,1,2", {{1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {3, 2, 4}}));

    auto q6 = build_box_poset(SpaceSpec::parse("QD:6"));
    CHECK(rectify(drawn(q6, parse_shape("1,1,1,2", q6).mask(), q6.full(),
                        {{5, 1, 1}, {5, 2, 2}, {6, 2, 3}, {7, 2, 4}, {8, 2, 5}})) ==
          drawn(q6, "", "1,1,1,1,1", {{1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {4, 1, 4}, {5, 1, 5}}));

    auto e6 = build_box_poset(SpaceSpec::parse("E6"));
    auto e6_mu = drawn(e6, "", "1,1,2,2,1", {{1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {3, 2, 4}, {4, 1, 5}, {4, 2, 6}, {5, 1, 7}});
    CHECK(e6_mu == first_tableau(e6_mu.skew()));
    CHECK(rectify(drawn(e6, "1,1,2,1,1", "1,1,2,4,4,1",
                        {{4, 2, 1}, {4, 3, 2}, {5, 2, 3}, {4, 4, 4}, {5, 3, 5}, {5, 4, 6}, {6, 3, 7}})) == e6_mu);
    CHECK(rectify(drawn(e6, "1,1,2,1,1", "1,1,2,4,4,1",
                        {{4, 2, 1}, {4, 3, 2}, {5, 2, 3}, {5, 3, 4}, {6, 3, 5}, {4, 4, 6}, {5, 4, 7}})) == e6_mu);

    auto e7 = build_box_poset(SpaceSpec::parse("E7"));
    auto e7_mu = drawn(e7, "", "1,1,1,2,1", {{1, 1, 1}, {2, 1, 2}, {3, 1, 3}, {4, 1, 4}, {4, 2, 5}, {5, 1, 6}});
    const char* in7 = "1,1,1,2,5,3";
    const char* out7 = "1,1,1,2,5,5,2,1,1";
    CHECK(rectify(drawn(e7, in7, out7, {{7, 3, 1}, {6, 4, 2}, {6, 5, 3}, {7, 4, 4}, {8, 4, 5}, {9, 4, 6}})) == e7_mu);
    CHECK(rectify(drawn(e7, in7, out7, {{6, 4, 1}, {7, 3, 2}, {6, 5, 3}, {7, 4, 4}, {8, 4, 5}, {9, 4, 6}})) == e7_mu);
    CHECK(rectify(drawn(e7, in7, out7, {{6, 4, 1}, {7, 3, 2}, {7, 4, 3}, {8, 4, 4}, {6, 5, 5}, {9, 4, 6}})) == e7_mu);
    CHECK(rectify(drawn(e7, in7, out7, {{6, 4, 1}, {7, 3, 2}, {7, 4, 3}, {8, 4, 4}, {9, 4, 5}, {6, 5, 6}})) == e7_mu);
    hits = 0;
    for (const auto& t : enumerate_syt(SkewShape(parse_shape(in7, e7), parse_shape(out7, e7))))
      hits += rectify(t) == e7_mu;
    CHECK(hits == 4);
  }

  TEST_CASE("rectify fixes straight tableaux and revrectify lands on an upper set") {
    std::mt19937_64 rng(17);
    for (const char* s : kSpaces) {
      auto p = build_box_poset(SpaceSpec::parse(s));
      auto shapes = all_shapes(p);
      for (int trial = 0; trial < 20; ++trial) {
        const Shape& sh = shapes[rng() % shapes.size()];
        auto t = random_tableau(p, 0, sh.mask(), rng);
        CHECK(rectify(t) == t);
        auto [in, out] = random_skew(shapes, rng);
        auto u = random_tableau(p, in.mask(), out.mask(), rng);
        auto r = rectify(u);
        CHECK(r.is_straight());
        CHECK(r.size() == u.size());
        auto v = revrectify(u);
        CHECK(v.outer == p.full());
        CHECK(p.is_upper_set(v.cells()));
        CHECK(is_standard(v));
      }
    }
  }

  TEST_CASE("rectify and revrectify are inverse bijections between a shape and its rotation") {
    for (const char* s : {"Gr:3,6", "LG:3", "QD:5", "E6"}) {
      INFO(std::string(s));
      auto p = build_box_poset(SpaceSpec::parse(s));
      for (const Shape& mu : all_shapes(p)) {
        Mask upper = p.rotate_mask(mu.mask());
        SkewShape rot(Shape(p, p.full() & ~upper), Shape::full(p));
        if (count_syt(rot) > 2000) continue;
        std::set<std::array<std::uint8_t, kMaxBoxes>> images;
        for (const auto& t : enumerate_syt(rot)) {
          auto r = rectify(t);
          CHECK(r.outer == mu.mask());
          CHECK(revrectify(r) == t);
          images.insert(r.label);
        }
        CHECK(images.size() == count_syt(SkewShape(Shape::empty(p), mu)));
      }
    }
  }

  TEST_CASE("infusion of the Gr(3,7) example") {
    auto p = build_box_poset(SpaceSpec::parse("Gr:3,7"));
    auto t = drawn(p, "", "2,1", {{1, 1, 1}, {2, 1, 2}, {1, 2, 3}});
    auto u = drawn(p, "2,1", "3,3,2", {{3, 1, 1}, {2, 2, 2}, {3, 2, 3}, {1, 3, 4}, {2, 3, 5}});
    auto [x, y] = infusion(t, u);
    CHECK(print_shape(Shape(p, x.outer)) == "(3,2)");
    CHECK(x == drawn(p, "", "3,2", {{1, 1, 1}, {1, 2, 2}, {2, 1, 3}, {1, 3, 4}, {2, 2, 5}}));
    CHECK(y == drawn(p, "3,2", "3,3,2", {{2, 3, 1}, {3, 1, 2}, {3, 2, 3}}));
    CHECK(revinfusion(t, u) == std::make_pair(x, y));
    CHECK(infusion(x, y) == std::make_pair(t, u));
    CHECK(rectify(u) == x);
    CHECK_THROWS_AS(infusion(u, t), Error);
  }

  TEST_CASE("infusion and revinfusion agree on every pair in Gr(2,4)") {
    auto p = build_box_poset(SpaceSpec::parse("Gr:2,4"));
    auto shapes = all_shapes(p);
    int pairs = 0;
    for (const Shape& l : shapes)
      for (const Shape& v : shapes) {
        if (!v.contains(l)) continue;
        for (const auto& t : enumerate_syt(SkewShape(Shape::empty(p), l)))
          for (const auto& u : enumerate_syt(SkewShape(l, v))) {
            auto xy = infusion(t, u);
            CHECK(revinfusion(t, u) == xy);
            CHECK(infusion(xy.first, xy.second) == std::make_pair(t, u));
            ++pairs;
          }
      }
    CHECK(pairs > 0);
  }

  TEST_CASE("infusion is an involution that keeps label sets") {
    std::mt19937_64 rng(19);
    for (const char* s : kSpaces) {
      INFO(std::string(s));
      auto p = build_box_poset(SpaceSpec::parse(s));
      auto shapes = all_shapes(p);
      for (int trial = 0; trial < 30; ++trial) {
        auto [l, v] = random_skew(shapes, rng);
        auto t = random_tableau(p, 0, l.mask(), rng);
        auto u = random_tableau(p, l.mask(), v.mask(), rng);
        auto [x, y] = infusion(t, u);
        CHECK(x.size() == u.size());
        CHECK(y.size() == t.size());
        CHECK(x.outer == y.inner);
        CHECK(y.outer == v.mask());
        CHECK(is_standard(x));
        CHECK(is_standard(y));
        CHECK(infusion(x, y) == std::make_pair(t, u));
        CHECK(revinfusion(t, u) == std::make_pair(x, y));
      }
    }
  }

  TEST_CASE("trivial infusions") {
    auto p = build_box_poset(SpaceSpec::parse("Gr:3,6"));
    auto u = first_tableau(SkewShape(Shape::empty(p), parse_shape("2,1", p)));
    auto none = first_tableau(SkewShape(Shape::empty(p), Shape::empty(p)));
    auto [x, y] = infusion(none, u);
    CHECK(x == u);
    CHECK(y.size() == 0);
    auto empty_u = first_tableau(SkewShape(parse_shape("2,1", p), parse_shape("2,1", p)));
    auto [x2, y2] = revinfusion(u, empty_u);
    CHECK(x2.size() == 0);
    CHECK(y2.label == u.label);
  }

  TEST_CASE("confluence under random slide orders") {
    std::mt19937_64 rng(23);
    for (const char* s : kSpaces) {
      INFO(std::string(s));
      auto p = build_box_poset(SpaceSpec::parse(s));
      auto shapes = all_shapes(p);
      for (int trial = 0; trial < 40; ++trial) {
        auto [in, out] = random_skew(shapes, rng);
        auto t = random_tableau(p, in.mask(), out.mask(), rng);
        auto pick = [&](Mask m) {
          int k = static_cast<int>(rng() % std::popcount(m));
          while (k--) m &= m - 1;
          return std::countr_zero(m);
        };
        CHECK(rectify(t, pick) == rectify(t));
        CHECK(revrectify(t, pick) == revrectify(t));
      }
    }
  }

  TEST_CASE("the wrong tie rule is observably wrong") {
    auto p = build_box_poset(SpaceSpec::parse("Gr:2,4"));
    auto t = drawn(p, "1", "2,2", {{1, 2, 1}, {2, 1, 2}, {2, 2, 3}});
    auto good = jdt_slide(t, 0);
    auto bad = detail::jdt_slide(t, 0, detail::TieRule::largest);
    CHECK(good.tableau.label[0] == 1);
    CHECK(bad.tableau.label[0] == 2);
    CHECK_FALSE(is_standard(bad.tableau));
  }

  TEST_CASE("rectification counts do not depend on the target tableau") {
    for (const char* s : {"Gr:3,6", "LG:4", "E6"}) {
      INFO(std::string(s));
      auto p = build_box_poset(SpaceSpec::parse(s));
      auto shapes = all_shapes(p);
      std::mt19937_64 rng(29);
      for (int trial = 0; trial < 6; ++trial) {
        auto [in, out] = random_skew(shapes, rng);
        SkewShape sk(in, out);
        if (count_syt(sk) > 3000) continue;
        std::map<Mask, std::map<std::array<std::uint8_t, kMaxBoxes>, int>> hits;
        for (const auto& t : enumerate_syt(sk)) {
          auto r = rectify(t);
          ++hits[r.outer][r.label];
        }
        for (const auto& [mu, by_tableau] : hits) {
          CHECK(by_tableau.size() == count_syt(SkewShape(Shape::empty(p), Shape(p, mu))));
          std::set<int> values;
          for (const auto& kv : by_tableau) values.insert(kv.second);
          CHECK(values.size() == 1);
        }
      }
    }
  }
}
