#include "committee/region.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace committee {

RegionDecomposition compute_regions(const Labeling& labeling, const std::vector<Rational>& scores) {
  if (static_cast<int>(scores.size()) != labeling.num_candidates())
    throw InputError("scores and labeling disagree on the number of candidates");

  std::map<std::vector<int>, std::vector<Candidate>> by_signature;
  for (Candidate c = 0; c < labeling.num_candidates(); ++c)
    by_signature[labeling.labels_of(c)].push_back(c);

  RegionDecomposition out;
  out.num_labels = labeling.size();
  for (auto& [signature, members] : by_signature) {
    Region region{signature, std::move(members), {}};
    std::stable_sort(region.members.begin(), region.members.end(),
                     [&](Candidate a, Candidate b) { return scores[a] > scores[b]; });
    region.prefix.reserve(region.members.size() + 1);
    region.prefix.emplace_back(0);
    for (Candidate c : region.members) region.prefix.push_back(region.prefix.back() + scores[c]);
    out.regions.push_back(std::move(region));
  }
  std::sort(out.regions.begin(), out.regions.end(), [](const Region& a, const Region& b) {
    return *std::min_element(a.members.begin(), a.members.end()) <
           *std::min_element(b.members.begin(), b.members.end());
  });
  return out;
}

RegionDecomposition compute_regions(const Labeling& labeling, const ElectionProfile& profile,
                                    const ScoringFunction& gamma) {
  return compute_regions(labeling, candidate_scores(profile, gamma));
}

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max() / 4;

// lo <= sum_j coef[j] * d[j] <= hi, with coef in {-1, 0, 1}.
struct Row {
  std::vector<int> coef;
  std::int64_t lo;
  std::int64_t hi;
};

bool has_label(const Region& r, int label) {
  return std::binary_search(r.signature.begin(), r.signature.end(), label);
}

class RegionSearch {
 public:
  RegionSearch(const RegionDecomposition& dec, const ConstraintSet& constraints, int k,
               RegionStats& stats)
      : dec_(dec), k_(k), stats_(stats) {
    const int n = static_cast<int>(dec.regions.size());
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    // Regions with the strongest top candidate first.
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return dec.regions[a].prefix[1] > dec.regions[b].prefix[1];
    });
    for (int v : order_)
      cap_.push_back(std::min<int>(k, static_cast<int>(dec.regions[v].members.size())));

    rows_.push_back({std::vector<int>(n, 1), k, k});
    for (const auto& in : constraints.intervals) {
      Row row{std::vector<int>(n, 0), in.min, in.max};
      for (int j = 0; j < n; ++j) row.coef[j] = has_label(dec.regions[order_[j]], in.label) ? 1 : 0;
      rows_.push_back(std::move(row));
    }
    for (const auto& d : constraints.dominances) {
      Row row{std::vector<int>(n, 0), 0, kUnbounded};
      for (int j = 0; j < n; ++j) {
        const auto& r = dec.regions[order_[j]];
        row.coef[j] = (has_label(r, d.over) ? 1 : 0) - (has_label(r, d.under) ? 1 : 0);
      }
      rows_.push_back(std::move(row));
    }

    // Range of what the unassigned suffix can still contribute to each row.
    for (auto& row : rows_) {
      std::vector<std::int64_t> lo(n + 1, 0);
      std::vector<std::int64_t> hi(n + 1, 0);
      for (int j = n - 1; j >= 0; --j) {
        const std::int64_t extreme = static_cast<std::int64_t>(row.coef[j]) * cap_[j];
        lo[j] = lo[j + 1] + std::min<std::int64_t>(0, extreme);
        hi[j] = hi[j + 1] + std::max<std::int64_t>(0, extreme);
      }
      rest_lo_.push_back(std::move(lo));
      rest_hi_.push_back(std::move(hi));
    }
    partial_.assign(rows_.size(), 0);

    // best_tail_[j][r]: total of the r best scores among regions j.. onwards.
    best_tail_.resize(n + 1);
    best_tail_[n] = {Rational(0)};
    std::vector<Rational> pool;
    for (int j = n - 1; j >= 0; --j) {
      const auto& region = dec.regions[order_[j]];
      for (std::size_t i = 1; i < region.prefix.size(); ++i)
        pool.push_back(region.prefix[i] - region.prefix[i - 1]);
      std::sort(pool.begin(), pool.end(), std::greater<>());
      auto& tail = best_tail_[j];
      tail.assign(1, Rational(0));
      for (const auto& s : pool) tail.push_back(tail.back() + s);
    }
    take_.assign(n, 0);
  }

  SolveResult run() {
    search(0, 0, Rational(0));
    if (!best_) return SolveResult::infeasible("region", "no region allocation satisfies the constraints");
    return SolveResult::optimal(std::move(*best_), best_score_, "region");
  }

 private:
  void search(int depth, int used, const Rational& score) {
    ++stats_.nodes;
    const int n = static_cast<int>(order_.size());
    if (depth == n) {
      for (std::size_t r = 0; r < rows_.size(); ++r)
        if (partial_[r] < rows_[r].lo || partial_[r] > rows_[r].hi) return;
      record(score);
      return;
    }

    // Narrow the current variable's range using every row.
    std::int64_t lo = 0;
    std::int64_t hi = cap_[depth];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto& row = rows_[r];
      const std::int64_t low = row.lo - partial_[r] - rest_hi_[r][depth + 1];
      const std::int64_t high =
          row.hi >= kUnbounded ? kUnbounded : row.hi - partial_[r] - rest_lo_[r][depth + 1];
      switch (row.coef[depth]) {
        case 0:
          if (low > 0 || high < 0) return;
          break;
        case 1:
          lo = std::max(lo, low);
          hi = std::min(hi, high);
          break;
        default:
          lo = std::max(lo, -high);
          hi = std::min(hi, -low);
          break;
      }
    }

    const auto& region = dec_.regions[order_[depth]];
    const auto& tail = best_tail_[depth + 1];
    for (std::int64_t d = hi; d >= lo; --d) {
      const int remaining = k_ - used - static_cast<int>(d);
      if (remaining < 0 || remaining >= static_cast<int>(tail.size())) continue;
      Rational next = score + region.prefix[d];
      if (best_ && next + tail[remaining] < best_score_) continue;
      take_[depth] = static_cast<int>(d);
      for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] += rows_[r].coef[depth] * d;
      search(depth + 1, used + static_cast<int>(d), next);
      for (std::size_t r = 0; r < rows_.size(); ++r) partial_[r] -= rows_[r].coef[depth] * d;
    }
    take_[depth] = 0;
  }

  void record(const Rational& score) {
    if (best_ && score < best_score_) return;
    std::vector<Candidate> members;
    for (std::size_t j = 0; j < order_.size(); ++j) {
      const auto& region = dec_.regions[order_[j]];
      members.insert(members.end(), region.members.begin(), region.members.begin() + take_[j]);
    }
    auto committee = make_set(std::move(members));
    if (best_ && score == best_score_ && !(committee < *best_)) return;
    best_ = std::move(committee);
    best_score_ = score;
  }

  const RegionDecomposition& dec_;
  int k_;
  RegionStats& stats_;
  std::vector<int> order_;
  std::vector<int> cap_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::int64_t>> rest_lo_;
  std::vector<std::vector<std::int64_t>> rest_hi_;
  std::vector<std::int64_t> partial_;
  std::vector<std::vector<Rational>> best_tail_;
  std::vector<int> take_;
  std::optional<CandidateSet> best_;
  Rational best_score_;
};

}  // namespace

SolveResult solve_region_ip(const RegionDecomposition& decomposition,
                            const ConstraintSet& constraints, int k, RegionStats* stats) {
  if (k < 0) throw ContractError("committee size out of range");
  for (const auto& in : constraints.intervals)
    if (in.label < 0 || in.label >= decomposition.num_labels)
      throw InputError("interval constraint on an unknown label");
  for (const auto& d : constraints.dominances)
    if (d.over < 0 || d.over >= decomposition.num_labels || d.under < 0 ||
        d.under >= decomposition.num_labels)
      throw InputError("dominance constraint on an unknown label");

  RegionStats local;
  return RegionSearch(decomposition, constraints, k, stats ? *stats : local).run();
}

}  // namespace committee
