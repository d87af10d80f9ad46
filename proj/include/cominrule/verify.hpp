#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cominrule/schubert.hpp"

namespace cominrule {

struct Report {
  std::string suite;
  std::string space;
  std::int64_t trials = 0;
  std::vector<std::string> violations;
  std::uint64_t seed = 0;
  double elapsed_ms = 0;
  /// Informational lines (computed regions, counts) for the text output.
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  /// Adds a violation, keeping at most the first 50 messages.
  void fail(std::string what);
  std::int64_t violation_count = 0;
};

nlohmann::json report_to_json(const Report& r);
std::string report_to_text(const Report& r);

/// Deliberate faults for checking that suites can fail.
enum class Fault { none, corrupt_entry, wrong_tie_rule };
Fault parse_fault(std::string_view name);

enum class RecursionKind { E6, E7a, E7b };

/// Embedding Theta of a smaller box poset into a larger one with
/// Theta(alpha) = delta^{-1} alpha, the set L = I(delta) below it and the rest
/// Gamma above it.
struct Recursion {
  RecursionKind kind;
  std::shared_ptr<const Space> small;
  std::shared_ptr<const Space> big;
  /// small Dynkin node -> big Dynkin node (0-based Bourbaki on both sides)
  std::vector<int> node_map;
  int small_beta = 0;  // beta of the small space as a node of the small diagram
  WeylElement delta;
  /// small box id -> big box id
  std::vector<int> theta;
  Mask image = 0;
  Mask L = 0;
  Mask Gamma = 0;

  /// gamma-hat = Theta(gamma) + L
  Mask hat(Mask small_shape) const;
  std::string name() const;
};

/// Builds and checks a recursion; throws std::logic_error naming the violated
/// property if any structural check fails.
Recursion build_recursion(RecursionKind kind);

/// The recursion identity over all triples with lambda in nu, L in lambda and
/// Gamma outside nu.
Report check_recursion(const Recursion& rec, const CoeffTable& big, const CoeffTable& small);

/// Classical Littlewood-Richardson coefficient by counting lattice-word skew
/// semistandard tableaux. Partitions are weakly decreasing part lists that fit
/// in a k x (n-k) box (either orientation); returns 0 outside it.
std::int64_t lr_oracle_typeA(const std::vector<int>& lambda, const std::vector<int>& mu, const std::vector<int>& nu,
                             int k, int n);

/// OGmin:n against OG:(n+1) for n = 3..5, LG:n against OG:(n+1) for n = 3, 4
/// and Pmin:n against the chain rule for n = 2..4.
Report check_cross_isomorphisms();

/// Suites: confluence, infusion, axioms, duality, chevalley, associativity,
/// recursion, oracle, isomorphism.
Report run_suite(std::string_view space, std::string_view suite, std::uint64_t seed, Fault fault = Fault::none);

const std::vector<std::string>& suite_names();

}  // namespace cominrule
