#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "cominrule/shape.hpp"

using namespace cominrule;

namespace {

BoxPoset poset(const char* s) { return build_box_poset(SpaceSpec::parse(s)); }

// Breadth-first closure of the identity under right multiplication by simple
// reflections, elements compared by their action on the simple roots.
std::size_t weyl_size_by_search(const RootSystem& rs) {
  std::set<std::vector<int>> seen;
  std::vector<WeylElement> frontier{WeylElement{}};
  seen.insert(rs.signature(frontier[0]));
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i = 0; i < rs.rank(); ++i) {
        WeylElement v = w;
        v.word.push_back(i);
        if (seen.insert(rs.signature(v)).second) next.push_back(v);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

const char* kSpaces[] = {"Gr:1,2", "Gr:2,4", "Gr:3,6", "Gr:4,7", "Gr:2,5", "QB:3", "QB:4", "QB:6",
                         "LG:2",   "LG:3",   "LG:4",   "QD:4",   "QD:5",   "QD:7", "OG:4", "OG:5",
                         "OG:6",   "E6",     "E7",     "Pmin:2", "Pmin:4", "OGmin:3", "OGmin:5"};

}  // namespace

TEST_SUITE("root_data") {
  TEST_CASE("positive root counts follow the classical formulas") {
    for (int n = 1; n <= 7; ++n) CHECK(RootSystem(RootType::A, n).num_positive() == n * (n + 1) / 2);
    for (int n = 3; n <= 7; ++n) CHECK(RootSystem(RootType::B, n).num_positive() == n * n);
    for (int n = 2; n <= 7; ++n) CHECK(RootSystem(RootType::C, n).num_positive() == n * n);
    for (int n = 4; n <= 7; ++n) CHECK(RootSystem(RootType::D, n).num_positive() == n * (n - 1));
    CHECK(RootSystem(RootType::E, 6).num_positive() == 36);
    // (dim g - rank) / 2 for E7
    CHECK(RootSystem(RootType::E, 7).num_positive() == (133 - 7) / 2);
    CHECK(RootSystem(RootType::A, 1).num_positive() == 1);
  }

  TEST_CASE("root lengths") {
    auto lengths = [](const RootSystem& rs) {
      std::set<int> out;
      for (int r = 0; r < rs.num_positive(); ++r) out.insert(rs.root(r).squared_length);
      return out;
    };
    CHECK(lengths(RootSystem(RootType::C, 3)) == std::set<int>{1, 2});
    CHECK(lengths(RootSystem(RootType::B, 4)) == std::set<int>{1, 2});
    CHECK(lengths(RootSystem(RootType::D, 5)) == std::set<int>{2});
    CHECK(lengths(RootSystem(RootType::E, 7)) == std::set<int>{2});
    for (auto rs : {RootSystem(RootType::B, 3), RootSystem(RootType::E, 6)}) {
      for (int r = 0; r < rs.num_positive(); ++r) {
        const auto& c = rs.root(r).coeffs;
        CHECK(std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; }));
      }
    }
  }

  TEST_CASE("unsupported root systems are rejected with the supported table") {
    CHECK_THROWS_WITH_AS(RootSystem(RootType::B, 2), doctest::Contains("supported"), Error);
    CHECK_THROWS_AS(RootSystem(RootType::D, 3), Error);
    CHECK_THROWS_AS(RootSystem(RootType::E, 8), Error);
    CHECK_THROWS_AS(build_root_system("F4"), Error);
    CHECK(build_root_system("C2").num_positive() == 4);
    CHECK(build_root_system("E7").label() == "E7");
  }

  TEST_CASE("cominuscule nodes") {
    CHECK(cominuscule_nodes(RootSystem(RootType::A, 4)) == std::vector<int>{0, 1, 2, 3});
    CHECK(cominuscule_nodes(RootSystem(RootType::E, 6)) == std::vector<int>{0, 5});
    CHECK(cominuscule_nodes(RootSystem(RootType::E, 7)) == std::vector<int>{6});
    CHECK(cominuscule_nodes(RootSystem(RootType::B, 4)) == std::vector<int>{0});
    CHECK(cominuscule_nodes(RootSystem(RootType::C, 4)) == std::vector<int>{3});
    CHECK(cominuscule_nodes(RootSystem(RootType::D, 5)) == std::vector<int>{0, 3, 4});
  }

  TEST_CASE("Weyl group orders agree with a direct search") {
    for (auto [t, n] : std::vector<std::pair<RootType, int>>{
             {RootType::A, 3}, {RootType::B, 3}, {RootType::C, 3}, {RootType::D, 4}, {RootType::C, 2}}) {
      RootSystem rs(t, n);
      CHECK(weyl_size_by_search(rs) == weyl_group_order(t, n));
    }
  }

  TEST_CASE("box counts and short boxes") {
    for (int n = 2; n <= 8; ++n)
      for (int k = 1; k < n; ++k) {
        auto p = build_box_poset(SpaceSpec::parse("Gr:" + std::to_string(k) + "," + std::to_string(n)));
        CHECK(p.size() == k * (n - k));
        CHECK(p.short_mask() == 0);
      }
    for (int n = 3; n <= 7; ++n) {
      auto p = build_box_poset(SpaceSpec::parse("QB:" + std::to_string(n)));
      CHECK(p.size() == 2 * n - 1);
      REQUIRE(std::popcount(p.short_mask()) == 1);
      // the middle box of the chain
      CHECK(p.grid(std::countr_zero(p.short_mask())).col == n);
    }
    for (int n = 2; n <= 7; ++n) {
      auto p = build_box_poset(SpaceSpec::parse("LG:" + std::to_string(n)));
      CHECK(p.size() == n * (n + 1) / 2);
      for (int b = 0; b < p.size(); ++b) CHECK(p.is_short(b) == (p.grid(b).col != p.grid(b).row));
    }
    CHECK(std::popcount(poset("LG:4").short_mask()) == 6);
    for (int n = 4; n <= 8; ++n) {
      CHECK(build_box_poset(SpaceSpec::parse("QD:" + std::to_string(n))).size() == 2 * n - 2);
      CHECK(build_box_poset(SpaceSpec::parse("OG:" + std::to_string(n))).size() == n * (n - 1) / 2);
    }
    CHECK(poset("E6").size() == 16);
    CHECK(poset("E6").short_mask() == 0);
    CHECK(poset("E7").size() == 27);
    CHECK(poset("Pmin:4").size() == 7);
    CHECK(poset("Pmin:4").short_mask() == 0);
    CHECK(poset("OGmin:4").size() == 10);
    CHECK(poset("OGmin:4").short_mask() == 0);
  }

  TEST_CASE("grid embedding: covers are exactly unit steps") {
    for (const char* s : kSpaces) {
      INFO(std::string(s));
      auto p = poset(s);
      for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b) {
          int dc = p.grid(b).col - p.grid(a).col, dr = p.grid(b).row - p.grid(a).row;
          bool unit = (dc == 1 && dr == 0) || (dc == 0 && dr == 1);
          CHECK(unit == static_cast<bool>((p.upper_covers(a) >> b) & 1));
        }
      // heights grade the poset
      for (int b = 0; b < p.size(); ++b)
        for (Mask m = p.upper_covers(b); m; m &= m - 1)
          CHECK(p.roots().root(p.root_of(std::countr_zero(m))).height == p.roots().root(p.root_of(b)).height + 1);
    }
  }

  TEST_CASE("grid shapes of the classical families") {
    auto gr = poset("Gr:4,7");
    CHECK(gr.num_columns() == 3);
    CHECK(gr.num_rows() == 4);
    for (int c = 1; c <= 3; ++c)
      for (int r = 1; r <= 4; ++r) CHECK(gr.box_at({c, r}).has_value());

    for (int n = 4; n <= 7; ++n) {
      auto q = build_box_poset(SpaceSpec::parse("QD:" + std::to_string(n)));
      std::set<std::pair<int, int>> want;
      for (int c = 1; c <= n - 2; ++c) want.insert({c, 1});
      want.insert({n - 1, 1});
      want.insert({n - 2, 2});
      for (int c = n - 1; c <= 2 * n - 4; ++c) want.insert({c, 2});
      std::set<std::pair<int, int>> got;
      for (int b = 0; b < q.size(); ++b) got.insert({q.grid(b).col, q.grid(b).row});
      CHECK(got == want);
      // the two middle boxes are incomparable
      int x = *q.box_at({n - 1, 1}), y = *q.box_at({n - 2, 2});
      CHECK_FALSE(q.precedes(x, y));
      CHECK_FALSE(q.precedes(y, x));
    }

    auto lg = poset("LG:5");
    for (int c = 1; c <= 5; ++c) {
      int height = 0;
      for (int b = 0; b < lg.size(); ++b) height += lg.grid(b).col == c;
      CHECK(height == 6 - c);
    }
  }

  TEST_CASE("rotate is an order-reversing involution preserving lengths") {
    for (const char* s : kSpaces) {
      INFO(std::string(s));
      auto p = poset(s);
      for (int a = 0; a < p.size(); ++a) {
        CHECK(p.rotate(p.rotate(a)) == a);
        CHECK(p.is_short(a) == p.is_short(p.rotate(a)));
        for (int b = 0; b < p.size(); ++b) CHECK(p.precedes(a, b) == p.precedes(p.rotate(b), p.rotate(a)));
      }
    }
  }

  TEST_CASE("rotate examples") {
    auto check = [](const char* space, const char* shape, const char* comp) {
      auto p = poset(space);
      Mask rot = p.rotate_mask(parse_shape(shape, p).mask());
      CHECK(rot == (p.full() & ~parse_shape(comp, p).mask()));
    };
    check("Gr:4,7", "4,2,1", "3,2");
    check("QD:6", "1,1,1,1,1", "1,1,1,2");
    check("LG:4", "3,1", "4,2");
    check("E7", "1,1,1,2,3,3,1", "1,1,1,2,5,5");
  }

  TEST_CASE("shape to Weyl element and back") {
    auto p = poset("Gr:2,4");
    CHECK(poset("Gr:2,4").roots().length(shape_to_weyl(Shape::empty(p))) == 0);
    WeylElement s_beta{{p.beta()}};
    CHECK(p.roots().same_element(shape_to_weyl(Shape(p, bit(0))), s_beta));

    // Gr(2,4) as permutations of 1..4: the full shape is the permutation 3412,
    // which sends alpha_i = e_i - e_{i+1} to e_{w(i)} - e_{w(i+1)}.
    WeylElement w = shape_to_weyl(Shape::full(p));
    const int perm[4] = {3, 4, 1, 2};
    const RootSystem& rs = p.roots();
    CHECK(rs.length(w) == 4);
    for (int i = 0; i < 3; ++i) {
      int a = perm[i], b = perm[i + 1];
      std::vector<int> coeffs(3, 0);
      int lo = std::min(a, b), hi = std::max(a, b), sign = a < b ? 1 : -1;
      for (int j = lo; j < hi; ++j) coeffs[j - 1] = sign;
      CHECK(rs.apply(w, rs.simple(i)) == *rs.find(coeffs));
    }

    for (const char* s : {"Gr:3,6", "LG:3", "QD:5", "E6", "OGmin:4", "Pmin:3"}) {
      INFO(std::string(s));
      auto q = poset(s);
      for (const Shape& sh : all_shapes(q)) {
        WeylElement v = shape_to_weyl(sh);
        CHECK(q.roots().length(v) == sh.size());
        CHECK(weyl_to_shape(v, q) == sh);
      }
    }
  }

  TEST_CASE("non-Grassmannian elements are rejected naming the descent") {
    auto p = poset("Gr:3,6");
    CHECK_THROWS_WITH_AS(weyl_to_shape(WeylElement{{0}}, p), doctest::Contains("node 1"), Error);
    CHECK(weyl_to_shape(WeylElement{}, p).size() == 0);
    CHECK(weyl_to_shape(WeylElement{{p.beta()}}, p).mask() == bit(0));
  }

  TEST_CASE("biconvex sets") {
    RootSystem a2(RootType::A, 2);
    CHECK(is_biconvex(std::vector<int>{}, a2));
    CHECK_FALSE(is_biconvex(std::vector<int>{a2.highest_root()}, a2));
    CHECK(is_biconvex(std::vector<int>{a2.simple(0), a2.highest_root()}, a2));

    // inside Lambda, biconvex subsets are exactly the shapes
    for (const char* s : {"Gr:2,4", "Gr:3,6", "LG:3", "QB:4", "QD:5", "OG:5", "E6"}) {
      INFO(std::string(s));
      auto p = poset(s);
      auto orderings = rank_two_orderings(p.roots());
      int mismatches = 0;
      for (Mask m = 0; m <= p.full(); ++m) {
        std::vector<int> roots;
        for (Mask t = m; t; t &= t - 1) roots.push_back(p.root_of(std::countr_zero(t)));
        if (is_biconvex(roots, p.roots(), orderings) != p.is_ideal(m)) ++mismatches;
      }
      CHECK(mismatches == 0);
    }
    for (const char* s : {"E7", "LG:4"}) {
      auto p = poset(s);
      for (const Shape& sh : all_shapes(p)) {
        auto inv = p.roots().inversion_set(shape_to_weyl(sh));
        CHECK(is_biconvex(inv, p.roots()));
      }
    }
  }

  TEST_CASE("containment matches Bruhat order") {
    for (const char* s : {"Gr:2,4", "Gr:2,5", "LG:3"}) {
      INFO(std::string(s));
      auto p = poset(s);
      auto shapes = all_shapes(p);
      for (const auto& l : shapes)
        for (const auto& v : shapes) {
          CHECK(v.contains(l) == p.roots().bruhat_leq(shape_to_weyl(l), shape_to_weyl(v)));
        }
    }
  }

  TEST_CASE("number of shapes equals |W| / |W_P|") {
    for (const char* s : kSpaces) {
      INFO(std::string(s));
      auto p = poset(s);
      CHECK(all_shapes(p).size() == parabolic_quotient_size(p.roots(), p.beta()));
    }
    CHECK(all_shapes(poset("E6")).size() == 27);
    CHECK(all_shapes(poset("E7")).size() == 56);
    CHECK(all_shapes(poset("QB:5")).size() == 10);
  }

  TEST_CASE("space names") {
    CHECK(SpaceSpec::parse("Gr:4,7").str() == "Gr:4,7");
    CHECK(SpaceSpec::parse("OGmin:4").flavor() == Flavor::minuscule);
    CHECK(SpaceSpec::parse("LG:4").flavor() == Flavor::cominuscule);
    CHECK_THROWS_AS(SpaceSpec::parse("Gr:7,4"), Error);
    CHECK_THROWS_AS(SpaceSpec::parse("QB:2"), Error);
    CHECK_THROWS_AS(SpaceSpec::parse("QD:3"), Error);
    CHECK_THROWS_AS(SpaceSpec::parse("F4"), Error);
    CHECK_THROWS_AS(SpaceSpec::parse("LG:x"), Error);
  }
}
