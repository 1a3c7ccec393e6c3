#pragma once

// Labels, interval/dominance constraints, the dominance graph and committee
// validation.

#include "committee/types.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace committee {

/// Named candidate groups. Labels are kept sorted by name, so label indices
/// follow name order.
class Labeling {
 public:
  Labeling() = default;
  /// Throws InputError on duplicate names, empty labels or bad members.
  Labeling(int num_candidates, std::vector<std::pair<std::string, CandidateSet>> labels);

  int size() const { return static_cast<int>(names_.size()); }
  int num_candidates() const { return static_cast<int>(labels_of_.size()); }
  const std::string& name(int label) const { return names_.at(label); }
  const CandidateSet& members(int label) const { return members_.at(label); }
  std::optional<int> find(std::string_view name) const;
  /// Throws InputError for an unknown name.
  int index_of(std::string_view name) const;

  /// Labels carried by c, ascending.
  const std::vector<int>& labels_of(Candidate c) const { return labels_of_.at(c); }
  /// Candidates carrying no label.
  CandidateSet unlabeled() const;
  bool disjoint() const { return disjoint_; }

 private:
  std::vector<std::string> names_;
  std::vector<CandidateSet> members_;
  std::vector<std::vector<int>> labels_of_;
  bool disjoint_ = true;
};

/// Between `min` and `max` committee members carry `label`.
struct Interval {
  int label;
  int min;
  int max;
};

/// At least as many committee members carry `over` as carry `under`.
struct Dominance {
  int over;
  int under;
};

struct ConstraintSet {
  std::vector<Interval> intervals;
  std::vector<Dominance> dominances;

  bool empty() const { return intervals.empty() && dominances.empty(); }
  /// Throws InputError for unknown labels or bounds outside 0 <= min <= max.
  void validate(const Labeling& labeling) const;
};

/// Square boolean relation over labels.
class LabelRelation {
 public:
  explicit LabelRelation(int n = 0) : n_(n), bits_(static_cast<std::size_t>(n) * n, 0) {}

  int size() const { return n_; }
  bool operator()(int x, int y) const { return bits_[static_cast<std::size_t>(x) * n_ + y] != 0; }
  void set(int x, int y) { bits_[static_cast<std::size_t>(x) * n_ + y] = 1; }
  bool operator==(const LabelRelation&) const = default;

 private:
  int n_;
  std::vector<char> bits_;
};

LabelRelation transitive_closure(LabelRelation relation);

/// True iff no two labels with a common successor are incomparable.
bool is_tree_like(const LabelRelation& closure);

/// The transitively closed dominance graph condensed into clique nodes.
struct DominanceForest {
  LabelRelation closure;
  /// Maximal cliques of the closure, each a sorted list of labels. Every
  /// label appears in exactly one node; nodes are ordered by smallest label.
  std::vector<std::vector<int>> nodes;
  std::vector<int> node_of;
  /// Direct (non-transitive) edges between nodes, ascending.
  std::vector<std::vector<int>> children;
  std::vector<std::vector<int>> parents;
  std::vector<int> roots;
  bool tree_like = true;
};

/// Throws InputError when a constraint names an unknown label.
DominanceForest build_dominance_graph(const ConstraintSet& constraints, const Labeling& labeling);

struct Violation {
  enum class Kind { size, interval, dominance };
  Kind kind;
  /// Interval label, or the dominating label.
  int label = -1;
  /// Dominated label.
  int other = -1;
  int count = 0;
  int other_count = 0;
  int min = 0;
  int max = 0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Lists every violated constraint. With `expected_size`, a committee of the
/// wrong size is reported as well.
ValidationReport check_committee(const CandidateSet& committee, const Labeling& labeling,
                                 const ConstraintSet& constraints,
                                 std::optional<int> expected_size = std::nullopt);

std::string describe(const Violation& violation, const Labeling& labeling);

}  // namespace committee
