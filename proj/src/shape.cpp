#include "cominrule/shape.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace cominrule {

Shape::Shape(const BoxPoset& poset, Mask m) : poset_(&poset), mask_(m) {
  if (!poset.is_ideal(m)) throw Error("box set is not a shape of " + poset.spec().str());
}

int Shape::size() const { return std::popcount(mask_); }

bool operator<(const Shape& a, const Shape& b) {
  int sa = a.size(), sb = b.size();
  if (sa != sb) return sa < sb;
  return a.mask_ < b.mask_;
}

SkewShape::SkewShape(Shape inner_, Shape outer_) : inner(inner_), outer(outer_) {
  if (inner.poset_ptr() != outer.poset_ptr()) throw Error("skew shape mixes two spaces");
  if (!outer.contains(inner)) throw Error("inner shape " + print_shape(inner) + " is not inside " + print_shape(outer));
}

int SkewShape::size() const { return std::popcount(cells()); }

std::vector<Shape> all_shapes(const BoxPoset& poset) {
  std::vector<Mask> found;
  const int n = poset.size();
  // ids are a linear extension, so deciding boxes in id order with the
  // "all lower covers present" test visits each ideal exactly once
  auto go = [&](auto&& self, int b, Mask m) -> void {
    if (b == n) {
      found.push_back(m);
      return;
    }
    self(self, b + 1, m);
    if ((poset.lower_covers(b) & ~m) == 0) self(self, b + 1, m | bit(b));
  };
  go(go, 0, 0);
  std::vector<Shape> out;
  out.reserve(found.size());
  for (Mask m : found) out.emplace_back(poset, m);
  std::sort(out.begin(), out.end());
  return out;
}

Mask complement(const Shape& s) { return s.poset().full() & ~s.mask(); }

Shape rotate_complement(const Shape& s) { return Shape(s.poset(), s.poset().rotate_mask(complement(s))); }

int shortroots(const BoxPoset& poset, Mask cells) { return std::popcount(cells & poset.short_mask()); }
int shortroots(const Shape& s) { return shortroots(s.poset(), s.mask()); }
int shortroots(const SkewShape& s) { return shortroots(s.outer.poset(), s.cells()); }

Shape parse_shape(std::string_view text, const BoxPoset& poset) {
  std::string t;
  for (char c : text)
    if (c != ' ' && c != '\t') t.push_back(c);
  std::string_view v = t;
  if (!v.empty() && v.front() == '(') {
    if (v.back() != ')') throw Error("malformed shape '" + std::string(text) + "'");
    v = v.substr(1, v.size() - 2);
  }
  std::vector<int> counts;
  if (!v.empty() && v != "0") {
    std::size_t start = 0;
    while (true) {
      auto comma = v.find(',', start);
      auto piece = v.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
      int x = 0;
      auto [p, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), x);
      if (piece.empty() || ec != std::errc() || p != piece.data() + piece.size()) {
        throw Error("malformed shape '" + std::string(text) + "'");
      }
      counts.push_back(x);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  if (static_cast<int>(counts.size()) > poset.num_columns()) {
    throw Error("column " + std::to_string(poset.num_columns() + 1) + " does not exist in " + poset.spec().str());
  }
  try {
    return Shape(poset, poset.ideal_from_columns(counts));
  } catch (const Error& e) {
    throw Error("shape '" + std::string(text) + "' is not a shape of " + poset.spec().str() + ": " + e.what());
  }
}

std::string print_shape(const Shape& s) {
  std::string out = "(";
  auto counts = s.poset().column_counts(s.mask());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out + ")";
}

std::string print_skew(const SkewShape& s) { return print_shape(s.outer) + "/" + print_shape(s.inner); }

namespace {

// P^{2n-1} as C_n/P_1: the chain of nonzero-coefficient roots is not ordered
// like the inversion sets (2e_1 is inverted third), so the coset
// representative of the k-box shape is read off the reduced word
// s_0 s_1 ... s_{n-1} ... s_1 s_0 instead.
WeylElement chain_element(const BoxPoset& poset, int k) {
  int n = poset.roots().rank();
  WeylElement w;
  for (int i = k - 1; i >= 0; --i) w.word.push_back(i < n ? i : 2 * n - 2 - i);
  return w;
}

}  // namespace

WeylElement shape_to_weyl(const Shape& s) {
  if (s.poset().spec().family == Family::Pmin) return chain_element(s.poset(), s.size());
  std::vector<int> roots;
  for (Mask t = s.mask(); t; t &= t - 1) roots.push_back(s.poset().root_of(std::countr_zero(t)));
  return element_with_inversions(s.poset().roots(), roots);
}

Shape weyl_to_shape(const WeylElement& w, const BoxPoset& poset) {
  const RootSystem& rs = poset.roots();
  for (int d : rs.right_descents(w)) {
    if (d != poset.beta()) {
      throw Error("element is not Grassmannian: descent at node " + std::to_string(d + 1) + " (expected only node " +
                  std::to_string(poset.beta() + 1) + ")");
    }
  }
  if (poset.spec().family == Family::Pmin) return Shape(poset, bit(rs.length(w)) - 1);
  Mask m = 0;
  for (int r : rs.inversion_set(w)) {
    auto b = poset.box_of_root(r);
    if (!b) throw Error("inversion set leaves the box poset");
    m |= bit(*b);
  }
  return Shape(poset, m);
}

}  // namespace cominrule
