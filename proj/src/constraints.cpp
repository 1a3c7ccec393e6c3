#include "committee/constraints.hpp"

#include <algorithm>
#include <numeric>

namespace committee {

Labeling::Labeling(int num_candidates,
                   std::vector<std::pair<std::string, CandidateSet>> labels)
    : labels_of_(num_candidates) {
  std::sort(labels.begin(), labels.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto& [name, members] = labels[i];
    if (i > 0 && !names_.empty() && names_.back() == name) throw InputError("duplicate label '" + name + "'");
    if (members.empty()) throw InputError("label '" + name + "' is empty");
    const auto size = members.size();
    members = make_set(std::move(members));
    if (members.size() != size) throw InputError("label '" + name + "' repeats a candidate");
    if (members.front() < 0 || members.back() >= num_candidates)
      throw InputError("label '" + name + "' has an unknown candidate");
    for (Candidate c : members) {
      if (!labels_of_[c].empty()) disjoint_ = false;
      labels_of_[c].push_back(static_cast<int>(i));
    }
    names_.push_back(std::move(name));
    members_.push_back(std::move(members));
  }
}

std::optional<int> Labeling::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<int>(it - names_.begin());
}

int Labeling::index_of(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw InputError("unknown label '" + std::string(name) + "'");
}

CandidateSet Labeling::unlabeled() const {
  CandidateSet out;
  for (Candidate c = 0; c < num_candidates(); ++c)
    if (labels_of_[c].empty()) out.push_back(c);
  return out;
}

void ConstraintSet::validate(const Labeling& labeling) const {
  const auto known = [&](int l) { return l >= 0 && l < labeling.size(); };
  for (const auto& in : intervals) {
    if (!known(in.label)) throw InputError("interval constraint on an unknown label");
    if (in.min < 0 || in.min > in.max) throw InputError("invalid interval bounds");
  }
  for (const auto& d : dominances)
    if (!known(d.over) || !known(d.under))
      throw InputError("dominance constraint on an unknown label");
}

LabelRelation transitive_closure(LabelRelation r) {
  const int n = r.size();
  for (int via = 0; via < n; ++via)
    for (int x = 0; x < n; ++x) {
      if (!r(x, via)) continue;
      for (int y = 0; y < n; ++y)
        if (r(via, y)) r.set(x, y);
    }
  return r;
}

bool is_tree_like(const LabelRelation& closure) {
  const int n = closure.size();
  for (int z = 0; z < n; ++z)
    for (int x = 0; x < n; ++x) {
      if (!closure(x, z)) continue;
      for (int y = x + 1; y < n; ++y)
        if (closure(y, z) && !closure(x, y) && !closure(y, x)) return false;
    }
  return true;
}

DominanceForest build_dominance_graph(const ConstraintSet& constraints, const Labeling& labeling) {
  const int p = labeling.size();
  LabelRelation raw(p);
  for (const auto& d : constraints.dominances) {
    if (d.over < 0 || d.over >= p || d.under < 0 || d.under >= p)
      throw InputError("dominance constraint on an unknown label");
    raw.set(d.over, d.under);
  }

  DominanceForest f;
  f.closure = transitive_closure(std::move(raw));
  f.tree_like = is_tree_like(f.closure);

  // In a transitive relation the strongly connected components are exactly
  // the maximal cliques: x and y share a node iff each reaches the other.
  f.node_of.assign(p, -1);
  for (int x = 0; x < p; ++x) {
    if (f.node_of[x] != -1) continue;
    const int id = static_cast<int>(f.nodes.size());
    f.nodes.push_back({x});
    f.node_of[x] = id;
    for (int y = x + 1; y < p; ++y)
      if (f.closure(x, y) && f.closure(y, x)) {
        f.nodes[id].push_back(y);
        f.node_of[y] = id;
      }
  }

  const int n = static_cast<int>(f.nodes.size());
  const auto reaches = [&](int a, int b) { return a != b && f.closure(f.nodes[a][0], f.nodes[b][0]); };
  f.children.assign(n, {});
  f.parents.assign(n, {});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!reaches(a, b)) continue;
      bool direct = true;
      for (int c = 0; c < n && direct; ++c)
        if (c != a && c != b && reaches(a, c) && reaches(c, b)) direct = false;
      if (direct) {
        f.children[a].push_back(b);
        f.parents[b].push_back(a);
      }
    }
  for (int a = 0; a < n; ++a)
    if (f.parents[a].empty()) f.roots.push_back(a);
  return f;
}

ValidationReport check_committee(const CandidateSet& committee, const Labeling& labeling,
                                 const ConstraintSet& constraints,
                                 std::optional<int> expected_size) {
  ValidationReport report;
  const int size = static_cast<int>(committee.size());
  if (expected_size && size != *expected_size) {
    Violation v{Violation::Kind::size};
    v.count = size;
    v.min = v.max = *expected_size;
    report.violations.push_back(v);
  }

  std::vector<int> count(labeling.size(), 0);
  for (Candidate c : committee)
    for (int l : labeling.labels_of(c)) ++count[l];

  for (const auto& in : constraints.intervals) {
    const int got = count.at(in.label);
    if (got < in.min || got > in.max) {
      Violation v{Violation::Kind::interval, in.label};
      v.count = got;
      v.min = in.min;
      v.max = in.max;
      report.violations.push_back(v);
    }
  }
  for (const auto& d : constraints.dominances) {
    if (count.at(d.over) < count.at(d.under)) {
      Violation v{Violation::Kind::dominance, d.over, d.under};
      v.count = count[d.over];
      v.other_count = count[d.under];
      report.violations.push_back(v);
    }
  }
  return report;
}

std::string describe(const Violation& v, const Labeling& labeling) {
  switch (v.kind) {
    case Violation::Kind::size:
      return "committee has " + std::to_string(v.count) + " members, expected " +
             std::to_string(v.min);
    case Violation::Kind::interval:
      return "label '" + labeling.name(v.label) + "' has " + std::to_string(v.count) +
             " members, allowed [" + std::to_string(v.min) + ", " + std::to_string(v.max) + "]";
    case Violation::Kind::dominance:
      return "label '" + labeling.name(v.label) + "' has " + std::to_string(v.count) +
             " members but dominated label '" + labeling.name(v.other) + "' has " +
             std::to_string(v.other_count);
  }
  return {};
}

}  // namespace committee
