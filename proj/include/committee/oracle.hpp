#pragma once

// Exhaustive ground truth for small instances.
//
// Committees are enumerated by a depth-first include/exclude search that only
// discards branches which provably contain no feasible committee (and, for
// score orders, no committee beating the target), so every answer is exact.

#include "committee/constraints.hpp"
#include "committee/core.hpp"
#include "committee/instance.hpp"
#include "committee/orders.hpp"

#include <cstdint>

namespace committee {

struct OracleBudget {
  int max_candidates = 14;
  /// Search nodes (partial committees) visited before giving up.
  std::uint64_t max_committee_enumeration = 1'000'000;
};

/// Every feasible size-k committee, in lexicographic order. Throws BudgetError
/// past the budget.
std::vector<CandidateSet> enumerate_feasible(const ElectionProfile& profile,
                                             const Labeling& labeling,
                                             const ConstraintSet& constraints, int k,
                                             const OracleBudget& budget = {});

/// Order-maximal feasible committee; ties go to the lexicographically
/// smallest set.
SolveResult solve_bruteforce(const ElectionProfile& profile, const Labeling& labeling,
                             const ConstraintSet& constraints, int k,
                             const CommitteeOrder& order, const OracleBudget& budget = {});

/// Whether some feasible committee is at least as good as `reference`.
bool existence_query(const ElectionProfile& profile, const Labeling& labeling,
                     const ConstraintSet& constraints, int k, const CommitteeOrder& order,
                     const CandidateSet& reference, const OracleBudget& budget = {});

/// All orders simple STV can produce when every elimination tie is explored.
/// Throws BudgetError for more than 10 candidates.
std::vector<std::vector<Candidate>> stv_parallel_worlds(const ElectionProfile& profile);

/// Distinct top-k sets of the given orders, sorted.
std::vector<CandidateSet> best_k_committees(const std::vector<std::vector<Candidate>>& orders,
                                            int k);

}  // namespace committee
