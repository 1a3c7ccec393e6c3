#pragma once

// Polynomial-time solver for disjoint labels whose dominance graph is
// tree-like, for any responsive committee order.
//
// Interval constraints are removed first: upper bounds are pushed down the
// dominance graph and enforced by discarding all but the best candidates of
// each label; lower bounds are pushed up and enforced by ranking committees
// with more obligatory candidates first. The remaining dominance-only
// problem is a partially ordered knapsack over the clique forest.

#include "committee/constraints.hpp"
#include "committee/instance.hpp"
#include "committee/orders.hpp"

#include <optional>
#include <string>

namespace committee {

struct PreprocessedInstance {
  Labeling labeling;
  /// The constraints as given, kept for the final verification.
  ConstraintSet original;
  DominanceForest forest;
  /// Retained members of each label.
  std::vector<CandidateSet> retained;
  /// Effective per-label bounds after propagation.
  std::vector<int> upper_bound;
  std::vector<int> lower_bound;
  CandidateSet removed;
  CandidateSet obligatory;
  /// The base order with obligatory candidates ranked first.
  CommitteeOrder order;
  std::vector<Dominance> dominances;
  /// Set when some label cannot meet its lower bound.
  std::optional<std::string> infeasible;
};

/// Instrumentation for the table-size guarantee.
struct DpStats {
  std::size_t nodes = 0;
  std::size_t max_children = 0;
  std::size_t table_entries = 0;
  std::size_t comparisons = 0;
};

/// Throws ContractError unless the labels are disjoint and the dominance
/// graph is tree-like.
PreprocessedInstance preprocess_intervals(const Labeling& labeling,
                                          const ConstraintSet& constraints,
                                          const CommitteeOrder& order);

/// Best size-k committee under the preprocessed order, or infeasible.
SolveResult solve_dp(const PreprocessedInstance& instance, int k, DpStats* stats = nullptr);

/// Preprocesses and solves in one call.
SolveResult solve_dp(const Labeling& labeling, const ConstraintSet& constraints,
                     const CommitteeOrder& order, int k, DpStats* stats = nullptr);

}  // namespace committee
