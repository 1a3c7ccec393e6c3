#include "committee/core.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace committee {

ElectionProfile::ElectionProfile(std::vector<std::string> candidates,
                                 const std::vector<std::vector<std::string>>& voters, int k)
    : names_(std::move(candidates)), k_(k) {
  if (names_.empty()) throw InputError("election has no candidates");
  if (voters.empty()) throw InputError("election has no voters");
  std::sort(names_.begin(), names_.end());
  if (std::adjacent_find(names_.begin(), names_.end()) != names_.end())
    throw InputError("duplicate candidate identifier");
  const int m = num_candidates();
  if (k < 0 || k > m) throw InputError("committee size out of range");

  rankings_.reserve(voters.size());
  positions_.reserve(voters.size());
  for (std::size_t i = 0; i < voters.size(); ++i) {
    const auto bad = [&] {
      return InputError("non-permutation ranking, voter index " + std::to_string(i));
    };
    if (static_cast<int>(voters[i].size()) != m) throw bad();
    std::vector<Candidate> ranking;
    std::vector<int> pos(m, -1);
    ranking.reserve(m);
    for (const auto& id : voters[i]) {
      auto c = find(id);
      if (!c || pos[*c] != -1) throw bad();
      pos[*c] = static_cast<int>(ranking.size());
      ranking.push_back(*c);
    }
    rankings_.push_back(std::move(ranking));
    positions_.push_back(std::move(pos));
  }
}

std::optional<Candidate> ElectionProfile::find(std::string_view id) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), id);
  if (it == names_.end() || *it != id) return std::nullopt;
  return static_cast<Candidate>(it - names_.begin());
}

Candidate ElectionProfile::index_of(std::string_view id) const {
  if (auto c = find(id)) return *c;
  throw InputError("unknown candidate '" + std::string(id) + "'");
}

ElectionProfile ElectionProfile::with_committee_size(int k) const {
  if (k < 0 || k > num_candidates()) throw InputError("committee size out of range");
  ElectionProfile copy = *this;
  copy.k_ = k;
  return copy;
}

CandidateSet ElectionProfile::committee_of(const std::vector<std::string>& ids) const {
  std::vector<Candidate> members;
  members.reserve(ids.size());
  for (const auto& id : ids) members.push_back(index_of(id));
  auto set = make_set(members);
  if (set.size() != members.size()) throw InputError("committee lists a candidate twice");
  return set;
}

std::vector<std::string> ElectionProfile::names_of(const CandidateSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (Candidate c : set) out.push_back(names_.at(c));
  return out;
}

std::vector<Rational> ScoringFunction::expand(int m, int k) const {
  std::vector<Rational> gamma(m, Rational(0));
  switch (preset_) {
    case Preset::sntv:
      gamma[0] = 1;
      break;
    case Preset::borda:
      for (int j = 0; j < m; ++j) gamma[j] = m - 1 - j;
      break;
    case Preset::bloc:
      for (int j = 0; j < std::min(k, m); ++j) gamma[j] = 1;
      break;
    case Preset::explicit_vector:
      if (static_cast<int>(values_.size()) != m)
        throw InputError("scoring vector length " + std::to_string(values_.size()) +
                         " does not match " + std::to_string(m) + " candidates");
      gamma = values_;
      break;
  }
  return gamma;
}

std::vector<Rational> candidate_scores(const ElectionProfile& profile,
                                       const ScoringFunction& gamma) {
  const auto g = gamma.expand(profile.num_candidates(), profile.committee_size());
  std::vector<Rational> scores(profile.num_candidates(), Rational(0));
  for (const auto& ranking : profile.rankings())
    for (std::size_t j = 0; j < ranking.size(); ++j) scores[ranking[j]] += g[j];
  return scores;
}

Rational score_candidate(const ElectionProfile& profile, const ScoringFunction& gamma,
                         Candidate c) {
  if (c < 0 || c >= profile.num_candidates()) throw InputError("unknown candidate index");
  const auto g = gamma.expand(profile.num_candidates(), profile.committee_size());
  Rational total = 0;
  for (int i = 0; i < profile.num_voters(); ++i) total += g[profile.position(i, c) - 1];
  return total;
}

Rational score_candidate(const ElectionProfile& profile, const ScoringFunction& gamma,
                         std::string_view id) {
  return score_candidate(profile, gamma, profile.index_of(id));
}

Rational score_committee(const ElectionProfile& profile, const ScoringFunction& gamma,
                         const CandidateSet& committee) {
  if (committee.empty()) return 0;
  const auto scores = candidate_scores(profile, gamma);
  Rational total = 0;
  for (Candidate c : committee) {
    if (c < 0 || c >= profile.num_candidates()) throw InputError("unknown candidate index");
    total += scores[c];
  }
  return total;
}

SingletonRanking::SingletonRanking(std::vector<std::vector<Candidate>> tiers)
    : tiers_(std::move(tiers)) {
  std::size_t m = 0;
  for (const auto& t : tiers_) m += t.size();
  tier_of_.assign(m, -1);
  for (std::size_t t = 0; t < tiers_.size(); ++t) {
    if (tiers_[t].empty()) throw InputError("empty indifference tier");
    std::sort(tiers_[t].begin(), tiers_[t].end());
    for (Candidate c : tiers_[t]) {
      if (c < 0 || c >= static_cast<Candidate>(m) || tier_of_[c] != -1)
        throw InputError("tiers do not partition the candidates");
      tier_of_[c] = static_cast<int>(t);
    }
  }
}

SingletonRanking SingletonRanking::from_scores(const std::vector<Rational>& scores) {
  std::vector<Candidate> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Candidate a, Candidate b) { return scores[a] > scores[b]; });
  std::vector<std::vector<Candidate>> tiers;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || scores[order[i]] != scores[order[i - 1]]) tiers.emplace_back();
    tiers.back().push_back(order[i]);
  }
  return SingletonRanking(std::move(tiers));
}

SingletonRanking SingletonRanking::strict(const std::vector<Candidate>& order) {
  std::vector<std::vector<Candidate>> tiers;
  tiers.reserve(order.size());
  for (Candidate c : order) tiers.push_back({c});
  return SingletonRanking(std::move(tiers));
}

namespace {

struct Ballot {
  const std::vector<Candidate>* ranking;
  std::size_t cursor = 0;
  Rational weight = 1;
};

class StvCounter {
 public:
  explicit StvCounter(const ElectionProfile& profile)
      : m_(profile.num_candidates()), continuing_(m_, true), tally_(m_, Rational(0)) {
    for (const auto& r : profile.rankings()) ballots_.push_back({&r});
    for (auto& b : ballots_) tally_[b.ranking->front()] += b.weight;
  }

  int remaining() const {
    return static_cast<int>(std::count(continuing_.begin(), continuing_.end(), true));
  }

  // Lowest tally; ties go to the lexicographically smallest identifier.
  Candidate weakest() const {
    Candidate best = -1;
    for (Candidate c = 0; c < m_; ++c)
      if (continuing_[c] && (best < 0 || tally_[c] < tally_[best])) best = c;
    return best;
  }

  // Highest tally meeting the quota, if any.
  std::optional<Candidate> over_quota(const Rational& quota) const {
    std::optional<Candidate> best;
    for (Candidate c = 0; c < m_; ++c)
      if (continuing_[c] && tally_[c] >= quota && (!best || tally_[c] > tally_[*best]))
        best = c;
    return best;
  }

  const Rational& tally(Candidate c) const { return tally_[c]; }

  /// Removes c and moves its ballots on, scaled by `keep` (1 for eliminations).
  std::vector<std::pair<Candidate, Rational>> remove(Candidate c, const Rational& keep) {
    continuing_[c] = false;
    std::vector<Rational> moved(m_, Rational(0));
    std::vector<bool> touched(m_, false);
    for (auto& b : ballots_) {
      if (current(b) != c) continue;
      b.weight *= keep;
      while (b.cursor < b.ranking->size() && !continuing_[(*b.ranking)[b.cursor]]) ++b.cursor;
      if (b.cursor == b.ranking->size()) continue;
      const Candidate next = (*b.ranking)[b.cursor];
      tally_[next] += b.weight;
      moved[next] += b.weight;
      touched[next] = true;
    }
    std::vector<std::pair<Candidate, Rational>> transfers;
    for (Candidate d = 0; d < m_; ++d)
      if (touched[d]) transfers.emplace_back(d, moved[d]);
    return transfers;
  }

 private:
  static Candidate current(const Ballot& b) {
    return b.cursor < b.ranking->size() ? (*b.ranking)[b.cursor] : -1;
  }

  int m_;
  std::vector<Ballot> ballots_;
  std::vector<bool> continuing_;
  std::vector<Rational> tally_;
};

}  // namespace

StvCount stv_count(const ElectionProfile& profile, StvVariant variant) {
  StvCounter counter(profile);
  StvCount result;
  std::vector<Candidate> elected;
  std::vector<Candidate> eliminated;

  const bool droop = variant == StvVariant::droop_gregory;
  if (droop) result.quota = Rational(profile.num_voters() / (profile.committee_size() + 1) + 1);

  while (counter.remaining() > 0) {
    if (droop) {
      if (auto winner = counter.over_quota(result.quota)) {
        const Rational tally = counter.tally(*winner);
        const Rational keep = (tally - result.quota) / tally;
        auto transfers = counter.remove(*winner, keep);
        result.events.push_back({StvEvent::Kind::elected, *winner, tally, std::move(transfers)});
        elected.push_back(*winner);
        continue;
      }
    }
    const Candidate loser = counter.weakest();
    const Rational tally = counter.tally(loser);
    auto transfers = counter.remove(loser, Rational(1));
    result.events.push_back({StvEvent::Kind::eliminated, loser, tally, std::move(transfers)});
    eliminated.push_back(loser);
  }

  result.order = elected;
  result.order.insert(result.order.end(), eliminated.rbegin(), eliminated.rend());
  return result;
}

SingletonRanking stv_ranking(const ElectionProfile& profile, StvVariant variant) {
  return SingletonRanking::strict(stv_count(profile, variant).order);
}

}  // namespace committee
