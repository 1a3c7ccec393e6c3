#include "committee/dp.hpp"

#include <algorithm>
#include <stdexcept>

namespace committee {

PreprocessedInstance preprocess_intervals(const Labeling& labeling,
                                          const ConstraintSet& constraints,
                                          const CommitteeOrder& order) {
  if (!labeling.disjoint()) throw ContractError("dp solver requires disjoint labels");
  if (order.num_candidates() != labeling.num_candidates())
    throw ContractError("order and labeling disagree on the number of candidates");
  constraints.validate(labeling);

  PreprocessedInstance out{labeling, constraints, build_dominance_graph(constraints, labeling),
                           {}, {}, {}, {}, {}, order, constraints.dominances, std::nullopt};
  if (!out.forest.tree_like) throw ContractError("dp solver requires a tree-like dominance graph");

  const int p = labeling.size();
  const auto& closure = out.forest.closure;

  // Upper bounds flow from a label to everything it dominates.
  out.upper_bound.resize(p);
  for (int l = 0; l < p; ++l) out.upper_bound[l] = static_cast<int>(labeling.members(l).size());
  for (const auto& in : constraints.intervals) {
    if (in.max >= static_cast<int>(labeling.members(in.label).size())) continue;
    for (int y = 0; y < p; ++y)
      if (y == in.label || closure(in.label, y))
        out.upper_bound[y] = std::min(out.upper_bound[y], in.max);
  }
  out.retained.resize(p);
  for (int l = 0; l < p; ++l) {
    const auto& members = labeling.members(l);
    out.retained[l] = best_singletons(order, members, out.upper_bound[l]);
    for (Candidate c : members)
      if (!contains(out.retained[l], c)) out.removed.push_back(c);
  }
  out.removed = make_set(std::move(out.removed));

  // Lower bounds flow from a label to everything dominating it.
  out.lower_bound.assign(p, 0);
  for (const auto& in : constraints.intervals) {
    if (in.min <= 0) continue;
    for (int a = 0; a < p; ++a)
      if (a == in.label || closure(a, in.label))
        out.lower_bound[a] = std::max(out.lower_bound[a], in.min);
  }

  std::vector<Candidate> obligatory;
  for (int l = 0; l < p; ++l) {
    const int need = out.lower_bound[l];
    if (need > static_cast<int>(out.retained[l].size())) {
      out.infeasible = "label '" + labeling.name(l) + "' needs " + std::to_string(need) +
                       " members but only " + std::to_string(out.retained[l].size()) +
                       " candidates remain";
      break;
    }
    const auto best = best_singletons(order, out.retained[l], need);
    obligatory.insert(obligatory.end(), best.begin(), best.end());
  }
  out.obligatory = make_set(std::move(obligatory));
  if (!out.obligatory.empty()) out.order = CommitteeOrder::wrapped(order, out.obligatory);
  return out;
}

namespace {

using Entry = std::optional<CandidateSet>;

class Table {
 public:
  explicit Table(int k) : k_(k), cells_(static_cast<std::size_t>(k + 1) * (k + 1)) {}
  Entry& at(int size, int bound) { return cells_[static_cast<std::size_t>(size) * (k_ + 1) + bound]; }
  const Entry& at(int size, int bound) const {
    return cells_[static_cast<std::size_t>(size) * (k_ + 1) + bound];
  }
  std::size_t entries() const { return cells_.size(); }

 private:
  int k_;
  std::vector<Entry> cells_;
};

struct Node {
  /// Best-first retained candidates of each label in the clique; empty for
  /// the virtual root.
  std::vector<std::vector<Candidate>> labels;
  std::vector<int> children;
};

class ForestDp {
 public:
  ForestDp(const PreprocessedInstance& pre, int k, DpStats& stats)
      : pre_(pre), order_(pre.order), k_(k), stats_(stats) {
    const auto& forest = pre.forest;
    for (const auto& clique : forest.nodes) {
      Node node;
      for (int l : clique) node.labels.push_back(rank_singletons(order_, pre.retained[l]));
      nodes_.push_back(std::move(node));
    }
    for (std::size_t x = 0; x < forest.nodes.size(); ++x) nodes_[x].children = forest.children[x];

    Node root;
    root.children = forest.roots;
    if (auto pool = pre.labeling.unlabeled(); !pool.empty()) {
      Node unlabeled;
      unlabeled.labels.push_back(rank_singletons(order_, pool));
      nodes_.push_back(std::move(unlabeled));
      root.children.push_back(static_cast<int>(nodes_.size()) - 1);
    }
    nodes_.push_back(std::move(root));
    root_ = static_cast<int>(nodes_.size()) - 1;

    stats_.nodes = nodes_.size();
    for (const auto& n : nodes_) stats_.max_children = std::max(stats_.max_children, n.children.size());
  }

  Entry solve() {
    const Table children = combine_children(nodes_[root_]);
    return children.at(k_, k_);
  }

 private:
  // Keeps the better committee; equal committees resolve to the smaller set.
  void offer(Entry& best, CandidateSet candidate) {
    if (best) {
      ++stats_.comparisons;
      const auto cmp = order_.compare(candidate, *best);
      if (cmp == std::weak_ordering::less) return;
      if (cmp == std::weak_ordering::equivalent && !(candidate < *best)) return;
    }
    best = std::move(candidate);
  }

  // Best r candidates of every label in the clique, or null.
  Entry own(const Node& node, int size, int bound) const {
    const int p = static_cast<int>(node.labels.size());
    if (p == 0) return size == 0 ? Entry(CandidateSet{}) : std::nullopt;
    if (size % p != 0) return std::nullopt;
    const int r = size / p;
    if (r > bound) return std::nullopt;
    std::vector<Candidate> members;
    for (const auto& ranked : node.labels) {
      if (r > static_cast<int>(ranked.size())) return std::nullopt;
      members.insert(members.end(), ranked.begin(), ranked.begin() + r);
    }
    return make_set(std::move(members));
  }

  // Prefix recurrence over the children of a node: entry (k', q) is the best
  // size-k' committee from the children's subtrees with at most q members
  // from every label at the children's roots.
  Table combine_children(const Node& node) {
    Table acc(k_);
    for (int q = 0; q <= k_; ++q) acc.at(0, q) = CandidateSet{};
    for (int child : node.children) {
      const Table sub = subtree(child);
      Table next(k_);
      for (int size = 0; size <= k_; ++size)
        for (int q = 0; q <= k_; ++q) {
          Entry& cell = next.at(size, q);
          for (int s = 0; s <= size; ++s) {
            const Entry& from_child = sub.at(s, q);
            const Entry& from_prefix = acc.at(size - s, q);
            if (from_child && from_prefix) offer(cell, set_union(*from_child, *from_prefix));
          }
        }
      stats_.table_entries += next.entries();
      acc = std::move(next);
    }
    return acc;
  }

  // M table of a clique node: take s = r*p members at the node itself and
  // the rest from the children, each child-root label capped at r.
  Table subtree(int x) {
    const Node& node = nodes_[x];
    const Table below = combine_children(node);
    const int p = static_cast<int>(node.labels.size());
    Table best(k_);
    for (int size = 0; size <= k_; ++size)
      for (int q = 0; q <= k_; ++q) {
        Entry& cell = best.at(size, q);
        for (int s = 0; s <= std::min(size, q * p); s += p) {
          const Entry here = own(node, s, q);
          const Entry& rest = below.at(size - s, s / p);
          if (here && rest) offer(cell, set_union(*here, *rest));
        }
      }
    stats_.table_entries += best.entries();
    return best;
  }

  const PreprocessedInstance& pre_;
  const CommitteeOrder& order_;
  int k_;
  DpStats& stats_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

}  // namespace

SolveResult solve_dp(const PreprocessedInstance& pre, int k, DpStats* stats) {
  if (pre.infeasible) return SolveResult::infeasible("dp", *pre.infeasible);
  if (k < 0 || k > pre.labeling.num_candidates())
    throw ContractError("committee size out of range");

  DpStats local;
  ForestDp dp(pre, k, stats ? *stats : local);
  auto committee = dp.solve();
  if (!committee) return SolveResult::infeasible("dp", "no committee satisfies the dominance constraints");
  if (intersection_size(*committee, pre.obligatory) != pre.obligatory.size())
    return SolveResult::infeasible("dp", "obligatory candidates cannot all be seated");

  if (!check_committee(*committee, pre.labeling, pre.original).valid())
    throw std::logic_error("dp produced a committee violating the original constraints");
  auto score = pre.order.score(*committee);
  return SolveResult::optimal(std::move(*committee), std::move(score), "dp");
}

SolveResult solve_dp(const Labeling& labeling, const ConstraintSet& constraints,
                     const CommitteeOrder& order, int k, DpStats* stats) {
  return solve_dp(preprocess_intervals(labeling, constraints, order), k, stats);
}

}  // namespace committee
