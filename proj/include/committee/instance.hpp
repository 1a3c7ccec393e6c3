#pragma once

#include "committee/constraints.hpp"
#include "committee/core.hpp"
#include "committee/orders.hpp"

#include <optional>
#include <string>
#include <variant>

namespace committee {

struct WeaklySeparableRule {
  ScoringFunction gamma;
};

struct StvRule {
  StvVariant variant;
};

using Rule = std::variant<WeaklySeparableRule, StvRule>;

enum class OrderKind { score, leximax, leximin };

/// Everything a constrained winner election needs.
struct ElectionInstance {
  ElectionProfile profile;
  Labeling labeling;
  ConstraintSet constraints;
  Rule rule;
  OrderKind order = OrderKind::score;
  /// Reference committee for existence queries, when one accompanies the instance.
  std::optional<CandidateSet> reference;
};

/// Per-candidate scores of a weakly separable rule; nullopt for STV.
std::optional<std::vector<Rational>> rule_scores(const ElectionInstance& instance);

/// Singleton ranking produced by the rule.
SingletonRanking rule_ranking(const ElectionInstance& instance);

/// Committee order named by the instance. Throws InputError for a score
/// order over an STV rule.
CommitteeOrder make_order(const ElectionInstance& instance);

enum class SolveStatus { optimal, infeasible };

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<CandidateSet> committee;
  /// Committee score under a score order.
  std::optional<Rational> score;
  std::string solver;
  /// Why the instance is infeasible, when known.
  std::string note;

  bool feasible() const { return status == SolveStatus::optimal; }

  static SolveResult optimal(CandidateSet committee, std::optional<Rational> score,
                             std::string solver) {
    return {SolveStatus::optimal, std::move(committee), std::move(score), std::move(solver), {}};
  }
  static SolveResult infeasible(std::string solver, std::string note = {}) {
    return {SolveStatus::infeasible, std::nullopt, std::nullopt, std::move(solver), std::move(note)};
  }
};

}  // namespace committee
