#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cominrule/root_system.hpp"
#include "cominrule/space_spec.hpp"

namespace cominrule {

using Mask = std::uint64_t;
inline constexpr int kMaxBoxes = 64;

constexpr Mask bit(int b) { return Mask{1} << b; }

struct GridPoint {
  int col = 0;
  int row = 0;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// The poset Lambda of boxes of a (co)minuscule space: positive roots with
/// beta-coefficient one, ordered by adding simple roots.
///
/// Box ids run column by column (left to right, bottom to top), so ids form a
/// linear extension and every mask below is a set of box ids. Columns and rows
/// are 1-based; covers are unit steps right or up.
class BoxPoset {
 public:
  const SpaceSpec& spec() const { return spec_; }
  const RootSystem& roots() const { return rs_; }
  int beta() const { return beta_; }
  Flavor flavor() const { return spec_.flavor(); }
  int size() const { return static_cast<int>(root_.size()); }
  Mask full() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }

  int root_of(int b) const { return root_[b]; }
  std::optional<int> box_of_root(int r) const;

  Mask upper_covers(int b) const { return upper_[b]; }
  Mask lower_covers(int b) const { return lower_[b]; }
  /// Strictly smaller / strictly larger boxes.
  Mask below(int b) const { return below_[b]; }
  Mask above(int b) const { return above_[b]; }
  bool precedes(int a, int b) const { return (below_[b] >> a) & 1; }

  bool is_short(int b) const { return (short_ >> b) & 1; }
  Mask short_mask() const { return short_; }

  GridPoint grid(int b) const { return grid_[b]; }
  std::optional<int> box_at(GridPoint p) const;
  int num_columns() const { return num_columns_; }
  int num_rows() const { return num_rows_; }

  int rotate(int b) const { return rotate_[b]; }
  Mask rotate_mask(Mask m) const;

  bool is_ideal(Mask m) const;
  bool is_upper_set(Mask m) const;
  /// Maximal / minimal elements of a box set.
  Mask maximal(Mask m) const;
  Mask minimal(Mask m) const;

  /// Number of boxes of m in each column, trailing zero columns dropped.
  std::vector<int> column_counts(Mask m) const;
  /// Inverse of column_counts on ideals: column i contributes its lowest
  /// counts[i] boxes. Throws Error naming the first offending column.
  Mask ideal_from_columns(std::span<const int> counts) const;

 private:
  friend BoxPoset build_box_poset(const SpaceSpec& spec);
  BoxPoset(const SpaceSpec& spec);

  SpaceSpec spec_;
  RootSystem rs_;
  int beta_ = 0;
  std::vector<int> root_;
  std::vector<int> box_of_root_;
  std::vector<Mask> upper_, lower_, below_, above_;
  Mask short_ = 0;
  std::vector<GridPoint> grid_;
  int num_columns_ = 0;
  int num_rows_ = 0;
  std::vector<int> rotate_;
};

BoxPoset build_box_poset(const SpaceSpec& spec);

/// Upward Hasse diagram of an abstract finite poset.
struct Hasse {
  std::vector<std::vector<int>> up;
  int size() const { return static_cast<int>(up.size()); }
};

Hasse hasse_of(const BoxPoset& poset);

/// Returns phi with phi[a] = image of a in b, or nullopt if the posets are not
/// isomorphic. Backtracking over elements in a topological order.
std::optional<std::vector<int>> find_isomorphism(const Hasse& a, const Hasse& b);

}  // namespace cominrule
