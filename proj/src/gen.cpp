#include "committee/gen.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace committee {

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges) : n_(num_vertices) {
  if (num_vertices < 0) throw InputError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InputError("edge references an unknown vertex");
    if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InputError("duplicate edge");
  edges_ = std::move(edges);
}

Graph Graph::parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = 0;
  int e = 0;
  if (!(in >> n >> e) || n < 0 || e < 0) throw InputError("graph header must be 'V E'");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < e; ++i) {
    int u = 0;
    int v = 0;
    if (!(in >> u >> v)) throw InputError("graph edge line " + std::to_string(i + 1) + " is malformed");
    edges.emplace_back(u, v);
  }
  std::string rest;
  if (in >> rest) throw InputError("trailing data after " + std::to_string(e) + " edges");
  return Graph(n, std::move(edges));
}

std::string Graph::to_edge_list() const {
  std::ostringstream out;
  out << n_ << ' ' << edges_.size() << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

bool Graph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

namespace {

int pairs(int k) { return k * (k - 1) / 2; }

std::string vertex_name(int v) { return "v" + std::to_string(v); }
std::string edge_name(int u, int v) { return "e" + std::to_string(u) + "_" + std::to_string(v); }
std::string singleton(const std::string& name) { return "{" + name + "}"; }

// `prefix`, then every other candidate in identifier order.
std::vector<std::string> rank_after(const std::vector<std::string>& prefix,
                                    std::vector<std::string> all) {
  std::sort(all.begin(), all.end());
  std::vector<std::string> out = prefix;
  std::vector<std::string> head = prefix;
  std::sort(head.begin(), head.end());
  for (auto& c : all)
    if (!std::binary_search(head.begin(), head.end(), c)) out.push_back(std::move(c));
  return out;
}

// Builds labels/constraints from names once the profile is fixed.
class InstanceBuilder {
 public:
  explicit InstanceBuilder(const ElectionProfile& profile) : profile_(profile) {}

  void label(const std::string& name, const std::vector<std::string>& members) {
    labels_.emplace_back(name, profile_.committee_of(members));
  }
  void interval(const std::string& label, int min, int max) { intervals_.push_back({label, min, max}); }
  void dominance(const std::string& over, const std::string& under) {
    dominances_.emplace_back(over, under);
  }

  ElectionInstance build(Rule rule) {
    Labeling labeling(profile_.num_candidates(), std::move(labels_));
    ConstraintSet constraints;
    for (const auto& [l, lo, hi] : intervals_)
      constraints.intervals.push_back({labeling.index_of(l), lo, hi});
    for (const auto& [o, u] : dominances_)
      constraints.dominances.push_back({labeling.index_of(o), labeling.index_of(u)});
    return {profile_, std::move(labeling), std::move(constraints), std::move(rule), OrderKind::score,
            std::nullopt};
  }

 private:
  struct PendingInterval {
    std::string label;
    int min;
    int max;
  };
  const ElectionProfile& profile_;
  std::vector<std::pair<std::string, CandidateSet>> labels_;
  std::vector<PendingInterval> intervals_;
  std::vector<std::pair<std::string, std::string>> dominances_;
};

ElectionProfile one_voter_per_candidate(const std::vector<std::string>& names, int k) {
  std::vector<std::vector<std::string>> voters;
  for (const auto& c : names) voters.push_back(rank_after({c}, names));
  return ElectionProfile(names, voters, k);
}

}  // namespace

ElectionInstance gen_vertex_cover_intervals(const Graph& g, int k) {
  if (k < 0 || k > g.num_vertices()) throw InputError("k must lie in [0, |V|]");
  std::vector<std::string> names;
  for (int v = 0; v < g.num_vertices(); ++v) names.push_back(vertex_name(v));
  const auto profile = one_voter_per_candidate(names, k);
  InstanceBuilder b(profile);
  for (const auto& [u, v] : g.edges()) {
    b.label(edge_name(u, v), {vertex_name(u), vertex_name(v)});
    b.interval(edge_name(u, v), 1, 2);
  }
  return b.build(WeaklySeparableRule{ScoringFunction::sntv()});
}

ElectionInstance gen_vertex_cover_dominance(const Graph& g, int k) {
  if (k < 1 || k > g.num_vertices()) throw InputError("k must lie in [1, |V|]");
  std::vector<std::string> names;
  for (int v = 0; v < g.num_vertices(); ++v) names.push_back(vertex_name(v));
  const auto profile = one_voter_per_candidate(names, k);
  InstanceBuilder b(profile);
  for (const auto& c : names) b.label(singleton(c), {c});
  for (const auto& [u, v] : g.edges()) {
    b.label(edge_name(u, v), {vertex_name(u), vertex_name(v)});
    for (const auto& c : names) b.dominance(edge_name(u, v), singleton(c));
  }
  return b.build(WeaklySeparableRule{ScoringFunction::sntv()});
}

ElectionInstance gen_clique_sntv(const Graph& g, int k) {
  if (k < 2) throw InputError("clique size must be at least 2");
  const int size = k + pairs(k);

  std::vector<std::string> vertices, edges, refs;
  for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back(vertex_name(v));
  for (const auto& [u, v] : g.edges()) edges.push_back(edge_name(u, v));
  for (int i = 0; i < size; ++i) refs.push_back("r" + std::to_string(i));
  std::vector<std::string> all = vertices;
  all.insert(all.end(), edges.begin(), edges.end());
  all.insert(all.end(), refs.begin(), refs.end());

  std::vector<std::vector<std::string>> voters;
  for (const auto& e : edges) voters.push_back(rank_after({e}, all));
  // Reference voters top the reference candidates round-robin.
  for (int i = 0; i < pairs(k); ++i) voters.push_back(rank_after({refs[i % size]}, all));

  const ElectionProfile profile(all, voters, size);
  InstanceBuilder b(profile);
  for (const auto& v : vertices) b.label(singleton(v), {v});
  for (const auto& e : edges) b.label(singleton(e), {e});
  b.label("ref", refs);
  b.interval("ref", 0, 0);
  for (const auto& [u, v] : g.edges()) {
    b.dominance(singleton(vertex_name(u)), singleton(edge_name(u, v)));
    b.dominance(singleton(vertex_name(v)), singleton(edge_name(u, v)));
  }
  auto instance = b.build(WeaklySeparableRule{ScoringFunction::sntv()});
  instance.reference = profile.committee_of(refs);
  return instance;
}

std::pair<Graph, int> pad_for_bloc(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (2 * pairs(k) >= pairs(n)) return {g, k};
  const int extra = 3 * n;
  auto edges = g.edges();
  for (int a = n; a < n + extra; ++a) {
    for (int v = 0; v < n; ++v) edges.emplace_back(v, a);
    for (int b = a + 1; b < n + extra; ++b) edges.emplace_back(a, b);
  }
  return {Graph(n + extra, std::move(edges)), k + extra};
}

ElectionInstance gen_clique_bloc(const Graph& original, int k) {
  if (k < 2) throw InputError("clique size must be at least 2");
  const auto [g, target] = pad_for_bloc(original, k);
  const int size = target + pairs(target);
  const int top_edges = pairs(target);

  std::vector<std::string> vertices, edges, refs, dums;
  for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back(vertex_name(v));
  for (const auto& [u, v] : g.edges()) edges.push_back(edge_name(u, v));
  std::sort(edges.begin(), edges.end());
  for (int i = 0; i < size; ++i) {
    refs.push_back("r" + std::to_string(i));
    dums.push_back("d" + std::to_string(i));
  }
  std::sort(refs.begin(), refs.end());
  std::sort(dums.begin(), dums.end());
  std::vector<std::string> all = vertices;
  for (const auto* group : {&edges, &refs, &dums}) all.insert(all.end(), group->begin(), group->end());

  const auto split = edges.begin() + std::min<std::size_t>(top_edges, edges.size());
  std::vector<std::string> first(edges.begin(), split);
  std::vector<std::string> second(split, edges.end());
  second.insert(second.end(), dums.begin(), dums.end());
  std::vector<std::string> third(refs.begin(), refs.begin() + top_edges);
  third.insert(third.end(), dums.begin(), dums.end());

  const ElectionProfile profile(all, {rank_after(first, all), rank_after(second, all), rank_after(third, all)},
                                size);
  InstanceBuilder b(profile);
  for (const auto& v : vertices) b.label(singleton(v), {v});
  for (const auto& e : edges) b.label(singleton(e), {e});
  b.label("ref", refs);
  b.label("dum", dums);
  b.interval("dum", 0, 0);
  b.interval("ref", 0, 0);
  for (const auto& [u, v] : g.edges()) {
    b.dominance(singleton(vertex_name(u)), singleton(edge_name(u, v)));
    b.dominance(singleton(vertex_name(v)), singleton(edge_name(u, v)));
  }
  auto instance = b.build(WeaklySeparableRule{ScoringFunction::bloc()});
  instance.reference = profile.committee_of(refs);
  return instance;
}

ElectionInstance gen_random(const RandomSpec& spec) {
  const int m = spec.candidates;
  const int p = spec.labels;
  if (m < 1 || spec.voters < 1) throw InputError("need at least one candidate and one voter");
  if (spec.k < 0 || spec.k > m) throw InputError("k must lie in [0, m]");
  if (p < 0 || (spec.mode == LabelMode::disjoint && p > m))
    throw InputError("too many disjoint labels for the candidates");

  std::mt19937_64 rng(spec.seed);
  const auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const auto chance = [&](double q) { return std::bernoulli_distribution(q)(rng); };

  const int width = static_cast<int>(std::to_string(std::max(0, m - 1)).size());
  std::vector<std::string> names;
  for (int i = 0; i < m; ++i) {
    auto digits = std::to_string(i);
    names.push_back("c" + std::string(width - digits.size(), '0') + digits);
  }
  std::vector<std::vector<std::string>> voters;
  for (int i = 0; i < spec.voters; ++i) {
    auto r = names;
    std::shuffle(r.begin(), r.end(), rng);
    voters.push_back(std::move(r));
  }
  const ElectionProfile profile(names, voters, spec.k);

  std::vector<std::vector<std::string>> members(p);
  if (spec.mode == LabelMode::disjoint) {
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < m; ++i) {
      const int l = i < p ? i : uniform(0, p);  // p means unlabeled
      if (l < p) members[l].push_back(names[order[i]]);
    }
  } else {
    for (int l = 0; l < p; ++l) {
      for (const auto& c : names)
        if (chance(0.4)) members[l].push_back(c);
      if (members[l].empty()) members[l].push_back(names[uniform(0, m - 1)]);
    }
  }
  const auto label_name = [](int l) { return "L" + std::to_string(l); };

  InstanceBuilder b(profile);
  for (int l = 0; l < p; ++l) b.label(label_name(l), members[l]);

  if (spec.structure == DominanceShape::tree_like) {
    std::vector<int> order(p);
    for (int i = 0; i < p; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 1; i < p; ++i) {
      if (!chance(0.6)) continue;
      const int parent = order[uniform(0, i - 1)];
      b.dominance(label_name(parent), label_name(order[i]));
      if (chance(0.2)) b.dominance(label_name(order[i]), label_name(parent));
    }
  } else if (p >= 2) {
    const int count = uniform(0, p + 1);
    for (int i = 0; i < count; ++i) {
      const int over = uniform(0, p - 1);
      int under = uniform(0, p - 2);
      if (under >= over) ++under;
      b.dominance(label_name(over), label_name(under));
    }
  }

  for (int l = 0; l < p; ++l) {
    if (!chance(0.4)) continue;
    const int cap = std::min<int>(static_cast<int>(members[l].size()), spec.k);
    const int hi = uniform(0, cap);
    const int lo = uniform(0, hi);
    b.interval(label_name(l), lo, hi);
  }

  static const ScoringFunction presets[] = {ScoringFunction::sntv(), ScoringFunction::borda(),
                                            ScoringFunction::bloc()};
  return b.build(WeaklySeparableRule{presets[uniform(0, 2)]});
}

}  // namespace committee
