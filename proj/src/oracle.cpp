#include "committee/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace committee {

namespace {

constexpr int kNoCap = std::numeric_limits<int>::max();

// Include/exclude search over candidates with sound propagation: a candidate
// is blocked once adding it would break an interval cap or a dominance
// constraint that can no longer be repaired, and blocked candidates are
// excluded without branching. Blocking is monotone along a branch.
class CommitteeSearch {
 public:
  using Visitor = std::function<bool(const CandidateSet&)>;

  CommitteeSearch(int m, const Labeling& labeling, const ConstraintSet& constraints, int k,
                  const OracleBudget& budget)
      : m_(m), labeling_(labeling), constraints_(constraints), k_(k), budget_(budget) {
    if (labeling.num_candidates() != m)
      throw InputError("labeling and profile disagree on the number of candidates");
    if (m > budget.max_candidates)
      throw BudgetError("oracle refuses " + std::to_string(m) + " candidates (limit " +
                        std::to_string(budget.max_candidates) + ")");
    if (k < 0) throw ContractError("committee size out of range");
    constraints.validate(labeling);

    const int p = labeling.size();
    cap_.assign(p, kNoCap);
    need_.assign(p, 0);
    for (const auto& in : constraints.intervals) {
      cap_[in.label] = std::min(cap_[in.label], in.max);
      need_[in.label] = std::max(need_[in.label], in.min);
    }
    over_of_.assign(p, {});
    under_of_.assign(p, {});
    LabelRelation raw(p);
    for (const auto& d : constraints.dominances) {
      over_of_[d.under].push_back(d.over);
      under_of_[d.over].push_back(d.under);
      raw.set(d.over, d.under);
    }

    // Decide candidates of dominating labels first so that excluding them
    // immediately blocks what they dominate.
    const auto closure = transitive_closure(std::move(raw));
    std::vector<int> reach(p, 0);
    for (int x = 0; x < p; ++x)
      for (int y = 0; y < p; ++y) reach[x] += closure(x, y) ? 1 : 0;
    std::vector<int> key(m, 0);
    for (Candidate c = 0; c < m; ++c)
      for (int l : labeling.labels_of(c)) key[c] = std::max(key[c], reach[l]);
    sequence_.resize(m);
    std::iota(sequence_.begin(), sequence_.end(), 0);
    std::stable_sort(sequence_.begin(), sequence_.end(),
                     [&](Candidate a, Candidate b) { return key[a] > key[b]; });

    state_.assign(m, State::undecided);
    chosen_count_.assign(p, 0);
    open_count_.assign(p, 0);
    for (int l = 0; l < p; ++l) open_count_[l] = static_cast<int>(labeling.members(l).size());
    eligible_.assign(m, false);
    bucket_of_.assign(m, -1);
  }

  /// Enables pruning of branches whose best possible score is below `target`.
  void bound_by_score(std::vector<Rational> scores, Rational target) {
    scores_ = std::move(scores);
    target_ = std::move(target);
    std::vector<Rational> values = scores_;
    std::sort(values.begin(), values.end(), std::greater<>());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    bucket_value_ = values;
    bucket_count_.assign(values.size(), 0);
    for (Candidate c = 0; c < m_; ++c)
      bucket_of_[c] = static_cast<int>(
          std::lower_bound(values.begin(), values.end(), scores_[c], std::greater<>()) -
          values.begin());
    bounded_ = true;
  }

  void raise_target(Rational target) { target_ = std::move(target); }

  void run(const Visitor& visit) {
    visit_ = &visit;
    for (Candidate c = 0; c < m_; ++c) set_eligible(c, !blocked(c));
    descend(0);
  }

 private:
  enum class State { undecided, in, out };

  bool blocked(Candidate c) const {
    for (int l : labeling_.labels_of(c)) {
      if (chosen_count_[l] >= cap_[l]) return true;
      for (int o : over_of_[l])
        if (chosen_count_[o] + open_count_[o] < chosen_count_[l] + 1) return true;
    }
    return false;
  }

  void set_eligible(Candidate c, bool value) {
    if (eligible_[c] == value) return;
    eligible_[c] = value;
    eligible_total_ += value ? 1 : -1;
    if (bounded_) bucket_count_[bucket_of_[c]] += value ? 1 : -1;
  }

  struct Undo {
    Candidate decided;
    std::size_t log_size;
  };

  void refresh(Candidate d) {
    if (state_[d] != State::undecided) return;
    const bool now = !blocked(d);
    if (now != eligible_[d]) {
      log_.push_back(d);
      set_eligible(d, now);
    }
  }

  // Applies a decision; false when the branch provably has no feasible committee.
  bool decide(Candidate c, State s, Undo& undo) {
    undo = {c, log_.size()};
    state_[c] = s;
    if (eligible_[c]) {
      log_.push_back(c);
      set_eligible(c, false);
    }
    const auto& labels = labeling_.labels_of(c);
    for (int l : labels) {
      --open_count_[l];
      if (s == State::in) ++chosen_count_[l];
    }
    if (s == State::in) {
      members_.push_back(c);
      for (int l : labels)
        for (Candidate d : labeling_.members(l)) refresh(d);
    } else {
      for (int l : labels)
        for (int u : under_of_[l])
          for (Candidate d : labeling_.members(u)) refresh(d);
    }

    for (int l : labels) {
      if (chosen_count_[l] + open_count_[l] < need_[l]) return false;
      for (int u : under_of_[l])
        if (chosen_count_[l] + open_count_[l] < chosen_count_[u]) return false;
    }
    return true;
  }

  void revert(const Undo& undo) {
    const Candidate c = undo.decided;
    while (log_.size() > undo.log_size) {
      const Candidate d = log_.back();
      log_.pop_back();
      set_eligible(d, !eligible_[d]);
    }
    const bool was_in = state_[c] == State::in;
    for (int l : labeling_.labels_of(c)) {
      ++open_count_[l];
      if (was_in) --chosen_count_[l];
    }
    if (was_in) members_.pop_back();
    state_[c] = State::undecided;
  }

  bool promising() const {
    const int chosen = static_cast<int>(members_.size());
    if (chosen + eligible_total_ < k_) return false;
    if (!bounded_) return true;
    Rational best = 0;
    for (Candidate c : members_) best += scores_[c];
    int slots = k_ - chosen;
    for (std::size_t b = 0; b < bucket_value_.size() && slots > 0; ++b) {
      const int take = std::min(slots, bucket_count_[b]);
      best += bucket_value_[b] * take;
      slots -= take;
    }
    return !(best < target_);
  }

  void descend(std::size_t index) {
    if (stopped_) return;
    if (++nodes_ > budget_.max_committee_enumeration)
      throw BudgetError("oracle search exceeded " +
                        std::to_string(budget_.max_committee_enumeration) + " nodes");
    if (static_cast<int>(members_.size()) == k_) {
      CandidateSet committee = make_set(members_);
      if (check_committee(committee, labeling_, constraints_).valid() && !(*visit_)(committee))
        stopped_ = true;
      return;
    }
    if (!promising()) return;
    while (index < sequence_.size() && state_[sequence_[index]] != State::undecided) ++index;
    if (index == sequence_.size()) return;

    const Candidate c = sequence_[index];
    Undo undo{};
    if (eligible_[c]) {
      if (decide(c, State::in, undo)) descend(index + 1);
      revert(undo);
      if (stopped_) return;
    }
    if (decide(c, State::out, undo)) descend(index + 1);
    revert(undo);
  }

  int m_;
  const Labeling& labeling_;
  const ConstraintSet& constraints_;
  int k_;
  OracleBudget budget_;

  std::vector<int> cap_;
  std::vector<int> need_;
  std::vector<std::vector<int>> over_of_;
  std::vector<std::vector<int>> under_of_;
  std::vector<Candidate> sequence_;

  std::vector<State> state_;
  std::vector<int> chosen_count_;
  std::vector<int> open_count_;
  std::vector<bool> eligible_;
  int eligible_total_ = 0;
  std::vector<Candidate> members_;
  std::vector<Candidate> log_;

  bool bounded_ = false;
  std::vector<Rational> scores_;
  Rational target_;
  std::vector<int> bucket_of_;
  std::vector<Rational> bucket_value_;
  std::vector<int> bucket_count_;

  const Visitor* visit_ = nullptr;
  bool stopped_ = false;
  std::uint64_t nodes_ = 0;
};

std::optional<std::vector<Rational>> singleton_scores(const CommitteeOrder& order) {
  if (order.kind() != CommitteeOrder::Kind::score) return std::nullopt;
  std::vector<Rational> scores;
  for (Candidate c = 0; c < order.num_candidates(); ++c) scores.push_back(*order.score({c}));
  return scores;
}

}  // namespace

std::vector<CandidateSet> enumerate_feasible(const ElectionProfile& profile,
                                             const Labeling& labeling,
                                             const ConstraintSet& constraints, int k,
                                             const OracleBudget& budget) {
  CommitteeSearch search(profile.num_candidates(), labeling, constraints, k, budget);
  std::vector<CandidateSet> out;
  search.run([&](const CandidateSet& committee) {
    out.push_back(committee);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

SolveResult solve_bruteforce(const ElectionProfile& profile, const Labeling& labeling,
                             const ConstraintSet& constraints, int k,
                             const CommitteeOrder& order, const OracleBudget& budget) {
  CommitteeSearch search(profile.num_candidates(), labeling, constraints, k, budget);
  const auto scores = singleton_scores(order);
  if (scores) {
    Rational floor = 0;
    for (const auto& s : *scores) floor = std::min(floor, s);
    search.bound_by_score(*scores, floor * k - 1);
  }

  std::optional<CandidateSet> best;
  search.run([&](const CandidateSet& committee) {
    if (best) {
      const auto cmp = order.compare(committee, *best);
      if (cmp == std::weak_ordering::less) return true;
      if (cmp == std::weak_ordering::equivalent && !(committee < *best)) return true;
    }
    best = committee;
    if (scores) search.raise_target(*order.score(*best));
    return true;
  });

  if (!best) return SolveResult::infeasible("oracle", "no committee satisfies the constraints");
  auto score = order.score(*best);
  return SolveResult::optimal(std::move(*best), std::move(score), "oracle");
}

bool existence_query(const ElectionProfile& profile, const Labeling& labeling,
                     const ConstraintSet& constraints, int k, const CommitteeOrder& order,
                     const CandidateSet& reference, const OracleBudget& budget) {
  if (static_cast<int>(reference.size()) != k)
    throw ContractError("reference committee must have k members");
  CommitteeSearch search(profile.num_candidates(), labeling, constraints, k, budget);
  if (auto scores = singleton_scores(order)) search.bound_by_score(*scores, *order.score(reference));

  bool found = false;
  search.run([&](const CandidateSet& committee) {
    found = order.compare(committee, reference) != std::weak_ordering::less;
    return !found;
  });
  return found;
}

namespace {

void explore_stv(const ElectionProfile& profile, std::vector<bool>& continuing,
                 std::vector<Candidate>& eliminated, std::set<std::vector<Candidate>>& out) {
  const int m = profile.num_candidates();
  if (static_cast<int>(eliminated.size()) == m) {
    out.insert(std::vector<Candidate>(eliminated.rbegin(), eliminated.rend()));
    return;
  }
  std::vector<int> tally(m, 0);
  for (const auto& ranking : profile.rankings())
    for (Candidate c : ranking)
      if (continuing[c]) {
        ++tally[c];
        break;
      }
  int fewest = std::numeric_limits<int>::max();
  for (Candidate c = 0; c < m; ++c)
    if (continuing[c]) fewest = std::min(fewest, tally[c]);
  for (Candidate c = 0; c < m; ++c) {
    if (!continuing[c] || tally[c] != fewest) continue;
    continuing[c] = false;
    eliminated.push_back(c);
    explore_stv(profile, continuing, eliminated, out);
    eliminated.pop_back();
    continuing[c] = true;
  }
}

}  // namespace

std::vector<std::vector<Candidate>> stv_parallel_worlds(const ElectionProfile& profile) {
  if (profile.num_candidates() > 10)
    throw BudgetError("parallel-world STV is limited to 10 candidates");
  std::vector<bool> continuing(profile.num_candidates(), true);
  std::vector<Candidate> eliminated;
  std::set<std::vector<Candidate>> orders;
  explore_stv(profile, continuing, eliminated, orders);
  return {orders.begin(), orders.end()};
}

std::vector<CandidateSet> best_k_committees(const std::vector<std::vector<Candidate>>& orders,
                                            int k) {
  std::set<CandidateSet> out;
  for (const auto& order : orders) {
    if (k > static_cast<int>(order.size())) throw InputError("k exceeds the ranking length");
    out.insert(make_set({order.begin(), order.begin() + k}));
  }
  return {out.begin(), out.end()};
}

}  // namespace committee
