#pragma once

// Committee orders: set extensions of a singleton order that satisfy
// fixed-cardinality responsiveness.

#include "committee/core.hpp"
#include "committee/types.hpp"

#include <compare>
#include <memory>
#include <optional>

namespace committee {

/// A weak order over committees of equal cardinality.
///
/// Only responsive kinds can be built: score sums, leximax and leximin over a
/// singleton ranking, and the obligatory-first wrapper around any of these.
/// Copies share immutable state and are safe to use from several threads.
class CommitteeOrder {
 public:
  enum class Kind { score, leximax, leximin, wrapped };

  static CommitteeOrder by_score(std::vector<Rational> candidate_scores);
  static CommitteeOrder leximax(SingletonRanking ranking);
  static CommitteeOrder leximin(SingletonRanking ranking);
  /// Committees with more obligatory members win; ties defer to `base`.
  static CommitteeOrder wrapped(CommitteeOrder base, CandidateSet obligatory);

  Kind kind() const;
  int num_candidates() const;

  /// Throws ContractError when |x| != |y| or a member is out of range.
  std::weak_ordering compare(const CandidateSet& x, const CandidateSet& y) const;

  /// Sum of member scores for score orders (looking through wrappers).
  std::optional<Rational> score(const CandidateSet& committee) const;

  /// Underlying order of a wrapper, else nullptr.
  const CommitteeOrder* base() const;
  /// Obligatory set of a wrapper, else empty.
  const CandidateSet& obligatory() const;

 private:
  struct Impl;
  explicit CommitteeOrder(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// The t best members of `pool` under the order restricted to singletons,
/// ties broken by identifier. Returned as a sorted set. Throws InputError when
/// t is negative or exceeds the pool.
CandidateSet best_singletons(const CommitteeOrder& order, const CandidateSet& pool, int t);

/// `pool` sorted best first under the singleton order (identifier tie-break).
std::vector<Candidate> rank_singletons(const CommitteeOrder& order, const CandidateSet& pool);

}  // namespace committee
