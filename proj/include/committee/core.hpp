#pragma once

// Election data model, positional scoring and STV ranking.

#include "committee/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace committee {

/// Candidates, strict voter rankings and the committee size.
///
/// Candidates are stored sorted by identifier, so candidate indices follow
/// identifier order and every lexicographic tie-break reduces to index order.
class ElectionProfile {
 public:
  /// Throws InputError on duplicate candidates, a ranking that is not a
  /// permutation of the candidates, no voters, or k outside [0, m].
  ElectionProfile(std::vector<std::string> candidates,
                  const std::vector<std::vector<std::string>>& voters, int k);

  int num_candidates() const { return static_cast<int>(names_.size()); }
  int num_voters() const { return static_cast<int>(rankings_.size()); }
  int committee_size() const { return k_; }

  const std::vector<std::string>& candidates() const { return names_; }
  const std::string& name(Candidate c) const { return names_.at(c); }

  std::optional<Candidate> find(std::string_view id) const;
  /// Throws InputError for an unknown identifier.
  Candidate index_of(std::string_view id) const;

  /// Voter rankings as candidate indices, best first.
  const std::vector<std::vector<Candidate>>& rankings() const { return rankings_; }

  /// 1-based position of c in voter i's ranking.
  int position(int voter, Candidate c) const { return positions_[voter][c] + 1; }

  ElectionProfile with_committee_size(int k) const;

  CandidateSet committee_of(const std::vector<std::string>& ids) const;
  std::vector<std::string> names_of(const CandidateSet& set) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Candidate>> rankings_;
  std::vector<std::vector<int>> positions_;
  int k_ = 0;
};

/// A single-winner positional scoring function gamma: [m] -> Q.
class ScoringFunction {
 public:
  enum class Preset { sntv, borda, bloc, explicit_vector };

  static ScoringFunction sntv() { return ScoringFunction(Preset::sntv, {}); }
  static ScoringFunction borda() { return ScoringFunction(Preset::borda, {}); }
  static ScoringFunction bloc() { return ScoringFunction(Preset::bloc, {}); }
  static ScoringFunction from_vector(std::vector<Rational> values) {
    return ScoringFunction(Preset::explicit_vector, std::move(values));
  }

  Preset preset() const { return preset_; }
  const std::vector<Rational>& explicit_values() const { return values_; }

  /// gamma(1..m) as a 0-indexed vector. Throws InputError when an explicit
  /// vector does not have length m.
  std::vector<Rational> expand(int m, int k) const;

 private:
  ScoringFunction(Preset preset, std::vector<Rational> values)
      : preset_(preset), values_(std::move(values)) {}

  Preset preset_;
  std::vector<Rational> values_;
};

Rational score_candidate(const ElectionProfile& profile, const ScoringFunction& gamma,
                         Candidate c);
Rational score_candidate(const ElectionProfile& profile, const ScoringFunction& gamma,
                         std::string_view id);

/// score(c) for every candidate, indexed by candidate.
std::vector<Rational> candidate_scores(const ElectionProfile& profile,
                                       const ScoringFunction& gamma);

Rational score_committee(const ElectionProfile& profile, const ScoringFunction& gamma,
                         const CandidateSet& committee);

/// Weak order over candidates as indifference tiers, best tier first.
class SingletonRanking {
 public:
  explicit SingletonRanking(std::vector<std::vector<Candidate>> tiers);

  /// Candidates with equal scores share a tier; higher scores come first.
  static SingletonRanking from_scores(const std::vector<Rational>& scores);
  /// One candidate per tier.
  static SingletonRanking strict(const std::vector<Candidate>& order);

  const std::vector<std::vector<Candidate>>& tiers() const { return tiers_; }
  int tier_of(Candidate c) const { return tier_of_.at(c); }
  int num_candidates() const { return static_cast<int>(tier_of_.size()); }

 private:
  std::vector<std::vector<Candidate>> tiers_;
  std::vector<int> tier_of_;
};

enum class StvVariant { simple, droop_gregory };

struct StvEvent {
  enum class Kind { elected, eliminated };
  Kind kind;
  Candidate candidate;
  Rational tally;
  /// Vote weight moved to each continuing candidate by this event.
  std::vector<std::pair<Candidate, Rational>> transfers;
};

struct StvCount {
  /// Full ranking, best first.
  std::vector<Candidate> order;
  std::vector<StvEvent> events;
  /// Droop quota; zero for the simple variant.
  Rational quota;
};

/// Runs the count with lexicographic tie-breaking. Vote weights are exact.
StvCount stv_count(const ElectionProfile& profile, StvVariant variant);

SingletonRanking stv_ranking(const ElectionProfile& profile, StvVariant variant);

}  // namespace committee
