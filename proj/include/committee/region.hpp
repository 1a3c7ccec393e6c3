#pragma once

// Exact solver for weakly separable rules over arbitrary, possibly
// overlapping labels. Candidates with identical label signatures are
// interchangeable for every constraint, so a committee is determined by how
// many members it takes from each signature region, and within a region the
// top scorers are always the right pick. The integer program over those
// counts is solved by depth-first search with bound propagation and an
// optimistic score bound.

#include "committee/constraints.hpp"
#include "committee/core.hpp"
#include "committee/instance.hpp"

#include <cstdint>

namespace committee {

struct Region {
  /// Labels carried by every member, ascending.
  std::vector<int> signature;
  /// Members, highest score first (identifier order among ties).
  std::vector<Candidate> members;
  /// prefix[j] = total score of the best j members.
  std::vector<Rational> prefix;
};

struct RegionDecomposition {
  int num_labels = 0;
  /// Ordered by smallest member.
  std::vector<Region> regions;
};

RegionDecomposition compute_regions(const Labeling& labeling, const std::vector<Rational>& scores);
RegionDecomposition compute_regions(const Labeling& labeling, const ElectionProfile& profile,
                                    const ScoringFunction& gamma);

struct RegionStats {
  std::uint64_t nodes = 0;
};

/// Maximum-score size-k committee satisfying the constraints, or infeasible.
SolveResult solve_region_ip(const RegionDecomposition& decomposition,
                            const ConstraintSet& constraints, int k,
                            RegionStats* stats = nullptr);

}  // namespace committee
