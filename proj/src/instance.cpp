#include "committee/instance.hpp"

namespace committee {

std::optional<std::vector<Rational>> rule_scores(const ElectionInstance& instance) {
  if (const auto* ws = std::get_if<WeaklySeparableRule>(&instance.rule))
    return candidate_scores(instance.profile, ws->gamma);
  return std::nullopt;
}

SingletonRanking rule_ranking(const ElectionInstance& instance) {
  if (auto scores = rule_scores(instance)) return SingletonRanking::from_scores(*scores);
  return stv_ranking(instance.profile, std::get<StvRule>(instance.rule).variant);
}

CommitteeOrder make_order(const ElectionInstance& instance) {
  switch (instance.order) {
    case OrderKind::score: {
      auto scores = rule_scores(instance);
      if (!scores) throw InputError("score order requires a weakly separable rule");
      return CommitteeOrder::by_score(std::move(*scores));
    }
    case OrderKind::leximax:
      return CommitteeOrder::leximax(rule_ranking(instance));
    case OrderKind::leximin:
      return CommitteeOrder::leximin(rule_ranking(instance));
  }
  throw InputError("unknown committee order");
}

}  // namespace committee
