#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cominrule {

/// Mathematical rejection (bad shape, unsupported space, wrong corner, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RootType { A, B, C, D, E };

struct Root {
  std::vector<int> coeffs;  // simple-root expansion
  int height = 0;
  int squared_length = 0;  // long roots have squared length 2
};

/// A Weyl group element as a word in the simple reflections (0-based,
/// Bourbaki order). The word s_{a0} s_{a1} ... acts on a root by applying the
/// rightmost reflection first. Words need not be reduced; compare elements
/// with RootSystem::same_element, never by word.
struct WeylElement {
  std::vector<int> word;
};

/// Finite crystallographic root system of type A_n, B_n, C_n, D_n, E6 or E7.
///
/// Roots are stored as integer simple-root coefficient vectors. Positive roots
/// occupy indices [0, num_positive()) sorted by height, the negative of root r
/// is r + num_positive(). The bilinear form is the integer Gram matrix of the
/// simple roots (short roots of B_n have squared length 1, long roots of C_n
/// squared length 4).
class RootSystem {
 public:
  RootSystem(RootType type, int rank);

  RootType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  int num_positive() const { return num_positive_; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const Root& root(int r) const { return roots_[r]; }
  bool is_positive(int r) const { return r < num_positive_; }
  int negate(int r) const { return r < num_positive_ ? r + num_positive_ : r - num_positive_; }
  int simple(int i) const { return simple_[i]; }
  std::optional<int> simple_index(int r) const;
  std::optional<int> find(std::span<const int> coeffs) const;
  int highest_root() const { return num_positive_ - 1; }

  int gram(int i, int j) const { return gram_[i][j]; }
  bool adjacent(int i, int j) const { return i != j && gram_[i][j] != 0; }
  /// Integer form (r, s) on root coordinates.
  int pairing(int r, int s) const;
  /// <r, alpha_i^vee>
  int coroot_pairing(int r, int i) const;
  int reflect(int i, int r) const { return reflection_[i][r]; }
  int max_squared_length() const { return 2; }

  int apply(const WeylElement& w, int r) const;
  /// Images of the simple roots; two elements are equal iff these agree.
  std::vector<int> signature(const WeylElement& w) const;
  bool same_element(const WeylElement& u, const WeylElement& v) const;
  /// I(w) = {alpha > 0 : w.alpha < 0}, sorted root indices.
  std::vector<int> inversion_set(const WeylElement& w) const;
  int length(const WeylElement& w) const;
  /// Simple nodes i with l(w s_i) < l(w).
  std::vector<int> right_descents(const WeylElement& w) const;
  /// Bruhat order by the subword property: u <= v iff u is a product of a
  /// subword of a reduced word of v. The word of v must be reduced.
  bool bruhat_leq(const WeylElement& u, const WeylElement& v) const;

 private:
  RootType type_;
  int rank_;
  std::vector<std::vector<int>> gram_;
  std::vector<Root> roots_;
  int num_positive_ = 0;
  std::vector<int> simple_;
  std::vector<std::vector<int>> reflection_;
};

RootSystem build_root_system(RootType type, int rank);
/// Accepts labels like "A3", "C4", "E6".
RootSystem build_root_system(std::string_view label);

/// Nodes whose coefficient in the highest root is 1 (0-based).
std::vector<int> cominuscule_nodes(const RootSystem& rs);

/// True iff S meets every irreducible rank-two subsystem in a beginning or
/// ending segment of its positive roots ordered (eta, eta+gamma, gamma) or
/// (eta, eta+gamma, eta+2gamma, gamma) with gamma short.
bool is_biconvex(std::span<const int> positive_roots, const RootSystem& rs);
/// Positive roots of each irreducible rank-two subsystem in the order above.
std::vector<std::vector<int>> rank_two_orderings(const RootSystem& rs);
/// is_biconvex with the orderings computed once by the caller.
bool is_biconvex(std::span<const int> positive_roots, const RootSystem& rs,
                 const std::vector<std::vector<int>>& orderings);

/// Builds the element w with I(w) equal to the given roots, adding one root at
/// a time by left multiplication. `roots` must be listed in an order where
/// every prefix is an inversion set; throws Error otherwise.
WeylElement element_with_inversions(const RootSystem& rs, std::span<const int> roots);

std::uint64_t weyl_group_order(RootType type, int rank);
/// |W| / |W_P| for the maximal parabolic omitting `node`, from the orders of
/// the Dynkin components left after deleting the node.
std::uint64_t parabolic_quotient_size(const RootSystem& rs, int node);

}  // namespace cominrule
