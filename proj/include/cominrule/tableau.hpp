#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "cominrule/shape.hpp"

namespace cominrule {

/// Standard filling of a skew shape; label[b] is 0 for boxes outside it.
struct StandardTableau {
  const BoxPoset* poset = nullptr;
  Mask inner = 0;
  Mask outer = 0;
  std::array<std::uint8_t, kMaxBoxes> label{};

  Mask cells() const { return outer & ~inner; }
  int size() const;
  SkewShape skew() const { return SkewShape(Shape(*poset, inner), Shape(*poset, outer)); }
  bool is_straight() const { return inner == 0; }
  /// Box holding label k, or -1.
  int box_of(int k) const;

  friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
    return a.poset == b.poset && a.inner == b.inner && a.outer == b.outer && a.label == b.label;
  }
};

/// Checks shape validity, that labels are exactly 1..|cells| and increase
/// along covers.
bool is_standard(const StandardTableau& t);

/// Builds a tableau from labels indexed by box id (0 outside); throws Error if
/// the result is not standard.
StandardTableau make_tableau(const SkewShape& s, const std::array<std::uint8_t, kMaxBoxes>& label);

/// Lexicographically first tableau: cells labelled in box-id order.
StandardTableau first_tableau(const SkewShape& s);

/// All standard tableaux of s, sorted lexicographically by label vector.
std::vector<StandardTableau> enumerate_syt(const SkewShape& s);
/// Same result; the search tree is split across OpenMP threads.
std::vector<StandardTableau> enumerate_syt_parallel(const SkewShape& s);
/// Number of linear extensions by dynamic programming over placed subsets.
std::uint64_t count_syt(const SkewShape& s);
/// Calls f on every standard filling of cells outer \ inner (unsorted).
void for_each_syt(const BoxPoset& poset, Mask inner, Mask outer, const std::function<void(const StandardTableau&)>& f);

struct SlideResult {
  StandardTableau tableau;
  int vacated = -1;
};

/// Inner corners: maximal boxes of the inner shape. Outer corners: minimal
/// boxes outside the outer shape.
Mask inner_corners(const StandardTableau& t);
Mask outer_corners(const StandardTableau& t);

/// Forward slide into inner corner x (smallest covering label moves in).
SlideResult jdt_slide(const StandardTableau& t, int x);
/// Reverse slide into outer corner x (largest covered label moves out).
SlideResult rev_slide(const StandardTableau& t, int x);

/// Picks one corner out of a nonempty mask.
using CornerChooser = std::function<int(Mask)>;

/// Rectification using the largest-id inner corner at each step.
StandardTableau rectify(const StandardTableau& t);
StandardTableau rectify(const StandardTableau& t, const CornerChooser& choose);
/// Reverse rectification to an upper set, using the smallest-id outer corner.
StandardTableau revrectify(const StandardTableau& t);
StandardTableau revrectify(const StandardTableau& t, const CornerChooser& choose);

/// infusion(T, U) for T straight on lambda and U on nu/lambda. Returns (X, Y)
/// with X straight carrying U's labels and Y on nu/shape(X) carrying T's.
std::pair<StandardTableau, StandardTableau> infusion(const StandardTableau& t, const StandardTableau& u);
/// Same contract, computed with reverse slides in increasing label order.
std::pair<StandardTableau, StandardTableau> revinfusion(const StandardTableau& t, const StandardTableau& u);

namespace detail {

/// Slide tie rules. `largest` is wrong on purpose and exists so verification
/// suites can show they notice it.
enum class TieRule { smallest, largest };

SlideResult jdt_slide(const StandardTableau& t, int x, TieRule rule);
StandardTableau rectify(const StandardTableau& t, TieRule rule);
StandardTableau rectify(const StandardTableau& t, const CornerChooser& choose, TieRule rule);
std::pair<StandardTableau, StandardTableau> infusion(const StandardTableau& t, const StandardTableau& u, TieRule rule);

}  // namespace detail

}  // namespace cominrule
