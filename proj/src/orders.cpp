#include "committee/orders.hpp"

#include <algorithm>
#include <variant>

namespace committee {

namespace {

using boost::multiprecision::cpp_int;

struct ScoreKind {
  std::vector<Rational> scores;
  // Scores rescaled to a common denominator, when every numerator fits.
  std::optional<std::vector<std::int64_t>> scaled;
};

struct LexKind {
  SingletonRanking ranking;
  bool from_best;
};

struct WrappedKind {
  CommitteeOrder base;
  CandidateSet obligatory;
};

std::optional<std::vector<std::int64_t>> rescale(const std::vector<Rational>& scores) {
  cpp_int lcm = 1;
  for (const auto& s : scores) lcm = boost::multiprecision::lcm(lcm, denominator(s));
  const cpp_int limit = cpp_int(1) << 52;
  std::vector<std::int64_t> out;
  out.reserve(scores.size());
  for (const auto& s : scores) {
    cpp_int v = numerator(s) * (lcm / denominator(s));
    if (abs(v) > limit) return std::nullopt;
    out.push_back(v.convert_to<std::int64_t>());
  }
  return out;
}

}  // namespace

struct CommitteeOrder::Impl {
  std::variant<ScoreKind, LexKind, WrappedKind> kind;
  int m;
};

CommitteeOrder CommitteeOrder::by_score(std::vector<Rational> candidate_scores) {
  const int m = static_cast<int>(candidate_scores.size());
  auto scaled = rescale(candidate_scores);
  return CommitteeOrder(std::make_shared<const Impl>(
      Impl{ScoreKind{std::move(candidate_scores), std::move(scaled)}, m}));
}

CommitteeOrder CommitteeOrder::leximax(SingletonRanking ranking) {
  const int m = ranking.num_candidates();
  return CommitteeOrder(std::make_shared<const Impl>(Impl{LexKind{std::move(ranking), true}, m}));
}

CommitteeOrder CommitteeOrder::leximin(SingletonRanking ranking) {
  const int m = ranking.num_candidates();
  return CommitteeOrder(std::make_shared<const Impl>(Impl{LexKind{std::move(ranking), false}, m}));
}

CommitteeOrder CommitteeOrder::wrapped(CommitteeOrder base, CandidateSet obligatory) {
  const int m = base.num_candidates();
  obligatory = make_set(std::move(obligatory));
  return CommitteeOrder(
      std::make_shared<const Impl>(Impl{WrappedKind{std::move(base), std::move(obligatory)}, m}));
}

CommitteeOrder::Kind CommitteeOrder::kind() const {
  return std::visit(
      [](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, ScoreKind>) {
          return Kind::score;
        } else if constexpr (std::is_same_v<T, LexKind>) {
          return k.from_best ? Kind::leximax : Kind::leximin;
        } else {
          return Kind::wrapped;
        }
      },
      impl_->kind);
}

int CommitteeOrder::num_candidates() const { return impl_->m; }

std::weak_ordering CommitteeOrder::compare(const CandidateSet& x, const CandidateSet& y) const {
  if (x.size() != y.size())
    throw ContractError("committee order compares sets of different cardinality");
  const int m = impl_->m;
  const auto in_range = [m](const CandidateSet& s) {
    return std::all_of(s.begin(), s.end(), [m](Candidate c) { return c >= 0 && c < m; });
  };
  if (!in_range(x) || !in_range(y)) throw ContractError("committee member out of range");

  if (const auto* s = std::get_if<ScoreKind>(&impl_->kind)) {
    if (s->scaled) {
      __int128 sx = 0;
      __int128 sy = 0;
      for (Candidate c : x) sx += (*s->scaled)[c];
      for (Candidate c : y) sy += (*s->scaled)[c];
      if (sx < sy) return std::weak_ordering::less;
      if (sy < sx) return std::weak_ordering::greater;
      return std::weak_ordering::equivalent;
    }
    Rational sx = 0;
    Rational sy = 0;
    for (Candidate c : x) sx += s->scores[c];
    for (Candidate c : y) sy += s->scores[c];
    if (sx < sy) return std::weak_ordering::less;
    if (sy < sx) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
  }

  if (const auto* w = std::get_if<WrappedKind>(&impl_->kind)) {
    const auto ox = intersection_size(x, w->obligatory);
    const auto oy = intersection_size(y, w->obligatory);
    if (ox != oy) return ox <=> oy;
    return w->base.compare(x, y);
  }

  // Sorted tier multisets; a smaller tier index is a better candidate.
  const auto& lex = std::get<LexKind>(impl_->kind);
  const auto tiers = [&](const CandidateSet& s) {
    std::vector<int> t;
    t.reserve(s.size());
    for (Candidate c : s) t.push_back(lex.ranking.tier_of(c));
    if (lex.from_best) {
      std::sort(t.begin(), t.end());
    } else {
      std::sort(t.begin(), t.end(), std::greater<>());
    }
    return t;
  };
  const auto tx = tiers(x);
  const auto ty = tiers(y);
  for (std::size_t i = 0; i < tx.size(); ++i) {
    if (tx[i] != ty[i]) return ty[i] <=> tx[i];
  }
  return std::weak_ordering::equivalent;
}

std::optional<Rational> CommitteeOrder::score(const CandidateSet& committee) const {
  if (const auto* w = std::get_if<WrappedKind>(&impl_->kind)) return w->base.score(committee);
  const auto* s = std::get_if<ScoreKind>(&impl_->kind);
  if (!s) return std::nullopt;
  Rational total = 0;
  for (Candidate c : committee) total += s->scores.at(c);
  return total;
}

const CommitteeOrder* CommitteeOrder::base() const {
  const auto* w = std::get_if<WrappedKind>(&impl_->kind);
  return w ? &w->base : nullptr;
}

const CandidateSet& CommitteeOrder::obligatory() const {
  static const CandidateSet empty;
  const auto* w = std::get_if<WrappedKind>(&impl_->kind);
  return w ? w->obligatory : empty;
}

std::vector<Candidate> rank_singletons(const CommitteeOrder& order, const CandidateSet& pool) {
  std::vector<Candidate> ranked(pool.begin(), pool.end());
  std::stable_sort(ranked.begin(), ranked.end(), [&](Candidate a, Candidate b) {
    return order.compare({a}, {b}) == std::weak_ordering::greater;
  });
  return ranked;
}

CandidateSet best_singletons(const CommitteeOrder& order, const CandidateSet& pool, int t) {
  if (t < 0 || t > static_cast<int>(pool.size()))
    throw InputError("cannot pick " + std::to_string(t) + " of " + std::to_string(pool.size()) +
                     " candidates");
  auto ranked = rank_singletons(order, pool);
  ranked.resize(t);
  return make_set(std::move(ranked));
}

}  // namespace committee
