#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cominrule/kernels.hpp"

namespace cominrule {

/// A space with its box poset, its shapes and a cache of rectification
/// counts. Shapes handed out by a Space point into it, so it lives behind a
/// shared_ptr and is never moved.
class Space {
 public:
  static std::shared_ptr<const Space> make(const SpaceSpec& spec);
  static std::shared_ptr<const Space> make(std::string_view spec);

  Space(const Space&) = delete;
  Space& operator=(const Space&) = delete;

  const SpaceSpec& spec() const { return poset_.spec(); }
  const BoxPoset& poset() const { return poset_; }
  const std::vector<Shape>& shapes() const { return shapes_; }
  int num_shapes() const { return static_cast<int>(shapes_.size()); }
  int index(const Shape& s) const;
  int index(Mask m) const;
  Shape parse(std::string_view tuple) const { return parse_shape(tuple, poset_); }
  /// The tableau T_mu used by the coefficient rule.
  const StandardTableau& canonical(int shape_index) const { return canonical_[shape_index]; }

  /// Memoized rectification_counts for nu/lambda. Safe to call from several
  /// threads; concurrent misses compute the same value and one of them wins.
  std::shared_ptr<const std::map<Mask, std::int64_t>> counts(Mask inner, Mask outer, Exec exec = Exec::serial) const;

 private:
  explicit Space(const SpaceSpec& spec);
  struct PairHash {
    std::size_t operator()(const std::pair<Mask, Mask>& p) const noexcept {
      return std::hash<Mask>()(p.first * 0x9e3779b97f4a7c15ULL ^ p.second);
    }
  };

  BoxPoset poset_;
  std::vector<Shape> shapes_;
  std::unordered_map<Mask, int> index_;
  std::vector<StandardTableau> canonical_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::pair<Mask, Mask>, std::shared_ptr<const std::map<Mask, std::int64_t>>, PairHash> memo_;
};

/// Schubert intersection number c_{lambda,mu}^nu by the jeu de taquin rule.
std::int64_t lrc(const Shape& lambda, const Shape& mu, const Shape& nu, const Space& space);

/// True when the coefficient vanishes for degree or containment reasons alone.
bool structural_zero(const Shape& lambda, const Shape& mu, const Shape& nu);

/// sigma_lambda * sigma_mu with zero terms omitted.
std::map<Shape, std::int64_t> product_expand(const Shape& lambda, const Shape& mu, const Space& space);

/// sigma_box * sigma_lambda by the Chevalley formula (no tableaux).
std::map<Shape, std::int64_t> chevalley_product(const Shape& lambda, const Space& space);

/// sigma_box^i by iterating chevalley_product.
std::map<Shape, std::int64_t> box_power(int i, const Space& space);
/// sigma_box^i as sum over |gamma| = i of f^gamma 2^{shortroots(gamma)} sigma_gamma
/// (no powers of two in minuscule flavor).
std::map<Shape, std::int64_t> box_power_closed_form(int i, const Space& space);

/// Dense table of all c_{lambda,mu}^nu indexed by positions in space.shapes().
class CoeffTable {
 public:
  CoeffTable(std::shared_ptr<const Space> space);
  const Space& space() const { return *space_; }
  std::shared_ptr<const Space> space_ptr() const { return space_; }
  int n() const { return n_; }
  std::int64_t at(int l, int m, int v) const { return data_[idx(l, m, v)]; }
  std::int64_t& at(int l, int m, int v) { return data_[idx(l, m, v)]; }
  friend bool operator==(const CoeffTable& a, const CoeffTable& b) {
    return a.space_->spec() == b.space_->spec() && a.data_ == b.data_;
  }

 private:
  std::size_t idx(int l, int m, int v) const {
    return (static_cast<std::size_t>(l) * n_ + m) * n_ + v;
  }
  std::shared_ptr<const Space> space_;
  int n_;
  std::vector<std::int64_t> data_;
};

/// Every coefficient of the space. Serial and parallel execution produce equal
/// tables; parallel work is split over (lambda, nu) pairs.
CoeffTable full_table(std::shared_ptr<const Space> space, Exec exec = Exec::parallel, int max_shapes = 70);

/// 2^{shortroots(nu/lambda) - shortroots(mu)} in cominuscule flavor, times
/// count; exact or Error.
std::int64_t apply_short_root_factor(std::int64_t count, int short_skew, int short_mu, Flavor flavor);

}  // namespace cominrule
