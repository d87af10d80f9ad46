#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cominrule/box_poset.hpp"

namespace cominrule {

/// Lower order ideal of a box poset. Equality and ordering use the bitmask
/// (size first, then mask); tuples are only for input and output.
class Shape {
 public:
  Shape() = default;
  /// Throws Error unless m is an ideal of the poset.
  Shape(const BoxPoset& poset, Mask m);
  static Shape empty(const BoxPoset& poset) { return Shape(poset, 0); }
  static Shape full(const BoxPoset& poset) { return Shape(poset, poset.full()); }

  const BoxPoset& poset() const { return *poset_; }
  const BoxPoset* poset_ptr() const { return poset_; }
  Mask mask() const { return mask_; }
  int size() const;
  bool contains(const Shape& other) const { return (other.mask_ & ~mask_) == 0; }
  bool has(int box) const { return (mask_ >> box) & 1; }

  friend bool operator==(const Shape& a, const Shape& b) { return a.poset_ == b.poset_ && a.mask_ == b.mask_; }
  friend bool operator<(const Shape& a, const Shape& b);

 private:
  const BoxPoset* poset_ = nullptr;
  Mask mask_ = 0;
};

struct SkewShape {
  Shape inner;
  Shape outer;

  /// Throws Error unless inner is contained in outer.
  SkewShape(Shape inner_, Shape outer_);
  Mask cells() const { return outer.mask() & ~inner.mask(); }
  int size() const;
};

/// Every ideal, ordered by size and then by mask.
std::vector<Shape> all_shapes(const BoxPoset& poset);

/// Boxes of Lambda not in the shape (an upper set).
Mask complement(const Shape& s);
/// rotate(lambda^c), again a shape.
Shape rotate_complement(const Shape& s);

int shortroots(const Shape& s);
int shortroots(const SkewShape& s);
int shortroots(const BoxPoset& poset, Mask cells);

/// Column-tuple notation: "(4,2,1)", "4,2,1", "()" and "" are accepted.
Shape parse_shape(std::string_view text, const BoxPoset& poset);
std::string print_shape(const Shape& s);
std::string print_skew(const SkewShape& s);

/// Minimal coset representative w with I(w) = shape.
WeylElement shape_to_weyl(const Shape& s);
/// Inverse of shape_to_weyl; throws Error if w has a descent other than beta.
Shape weyl_to_shape(const WeylElement& w, const BoxPoset& poset);

}  // namespace cominrule
