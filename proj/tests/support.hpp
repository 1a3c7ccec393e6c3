#pragma once

// Shared fixtures and graph brute force for the test binaries.

#include "committee/constraints.hpp"
#include "committee/core.hpp"
#include "committee/gen.hpp"
#include "committee/instance.hpp"
#include "committee/oracle.hpp"
#include "committee/orders.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <numeric>
#include <random>
#include <set>

namespace committee::testing {

inline ElectionProfile example1_profile(int k = 2) {
  return ElectionProfile({"a", "b", "c", "d"},
                         {{"a", "c", "b", "d"},
                          {"a", "c", "b", "d"},
                          {"d", "c", "b", "a"},
                          {"d", "b", "c", "a"},
                          {"b", "c", "a", "d"}},
                         k);
}

inline ElectionProfile example2_profile(int k = 2) {
  return ElectionProfile({"a", "b", "c", "d"},
                         {{"a", "b", "d", "c"},
                          {"a", "b", "d", "c"},
                          {"a", "b", "d", "c"},
                          {"a", "c", "d", "b"},
                          {"b", "d", "a", "c"},
                          {"c", "d", "a", "b"}},
                         k);
}

/// One voter ranking the candidates in the given order.
inline ElectionProfile single_voter(std::vector<std::string> order, int k) {
  auto names = order;
  return ElectionProfile(names, {order}, k);
}

inline std::vector<Rational> rationals(std::initializer_list<long> values) {
  return {values.begin(), values.end()};
}

inline ElectionInstance make_instance(ElectionProfile profile, Labeling labeling, ConstraintSet constraints,
                                      Rule rule, OrderKind order = OrderKind::score) {
  return {std::move(profile), std::move(labeling), std::move(constraints), std::move(rule), order,
          std::nullopt};
}

inline bool has_vertex_cover(const Graph& g, int k) {
  const int n = g.num_vertices();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > k) continue;
    bool covers = true;
    for (const auto& [u, v] : g.edges())
      if (!(mask >> u & 1) && !(mask >> v & 1)) covers = false;
    if (covers) return true;
  }
  return false;
}

inline bool has_clique(const Graph& g, int k) {
  const int n = g.num_vertices();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    bool clique = true;
    for (int u = 0; u < n && clique; ++u)
      for (int v = u + 1; v < n && clique; ++v)
        if ((mask >> u & 1) && (mask >> v & 1) && !g.adjacent(u, v)) clique = false;
    if (clique) return true;
  }
  return false;
}

/// One representative of every isomorphism class of graphs on n vertices.
inline std::vector<Graph> graphs_up_to_isomorphism(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<int> perm(n);
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<int, int>> canonical;
    bool first = true;
    do {
      std::vector<std::pair<int, int>> image;
      for (auto [u, v] : edges) image.emplace_back(std::min(perm[u], perm[v]), std::max(perm[u], perm[v]));
      std::sort(image.begin(), image.end());
      if (first || image < canonical) canonical = std::move(image);
      first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canonical).second) out.emplace_back(n, std::move(edges));
  }
  return out;
}

inline Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

/// Random instance for the cross-solver suites.
inline ElectionInstance random_instance(std::mt19937_64& rng, LabelMode mode, DominanceShape shape,
                                        int max_m = 12, int max_k = 5, int max_labels = 4) {
  RandomSpec spec;
  spec.candidates = std::uniform_int_distribution<int>(1, max_m)(rng);
  spec.voters = std::uniform_int_distribution<int>(1, 6)(rng);
  spec.k = std::uniform_int_distribution<int>(0, std::min(max_k, spec.candidates))(rng);
  spec.labels = std::uniform_int_distribution<int>(0, std::min(max_labels, spec.candidates))(rng);
  spec.mode = mode;
  spec.structure = shape;
  spec.seed = rng();
  return gen_random(spec);
}

/// Rank-ordered extension that looks at the second-best member first, then
/// the rest from the best down. Not responsive; used only as a foil.
inline std::weak_ordering second_best_first(const SingletonRanking& ranking, const CandidateSet& x,
                                            const CandidateSet& y) {
  const auto tiers = [&](const CandidateSet& s) {
    std::vector<int> t;
    for (Candidate c : s) t.push_back(ranking.tier_of(c));
    std::sort(t.begin(), t.end());
    if (t.size() >= 2) std::rotate(t.begin(), t.begin() + 1, t.begin() + 2);
    return t;
  };
  const auto tx = tiers(x);
  const auto ty = tiers(y);
  for (std::size_t i = 0; i < tx.size(); ++i)
    if (tx[i] != ty[i]) return ty[i] <=> tx[i];
  return std::weak_ordering::equivalent;
}

/// Random committees X, Y of equal size and Z disjoint from both, over m candidates.
struct ResponsivenessTrial {
  CandidateSet x, y, z;
};

inline ResponsivenessTrial random_trial(std::mt19937_64& rng, int m) {
  std::vector<Candidate> all(m);
  std::iota(all.begin(), all.end(), 0);
  const int size = std::uniform_int_distribution<int>(0, m / 2)(rng);
  std::shuffle(all.begin(), all.end(), rng);
  CandidateSet x(all.begin(), all.begin() + size);
  std::shuffle(all.begin(), all.end(), rng);
  CandidateSet y(all.begin(), all.begin() + size);
  std::vector<Candidate> rest;
  for (Candidate c : all)
    if (!contains(make_set(x), c) && !contains(make_set(y), c)) rest.push_back(c);
  std::shuffle(rest.begin(), rest.end(), rng);
  const int zs = std::uniform_int_distribution<int>(0, static_cast<int>(rest.size()))(rng);
  CandidateSet z(rest.begin(), rest.begin() + zs);
  return {make_set(x), make_set(y), make_set(z)};
}

/// Random weak order over m candidates.
inline SingletonRanking random_ranking(std::mt19937_64& rng, int m) {
  std::vector<Candidate> all(m);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  std::vector<std::vector<Candidate>> tiers;
  for (Candidate c : all) {
    if (tiers.empty() || std::bernoulli_distribution(0.6)(rng)) tiers.emplace_back();
    tiers.back().push_back(c);
  }
  return SingletonRanking(std::move(tiers));
}

/// Whether `order` breaks responsiveness on the trial.
template <class Compare>
bool violates_responsiveness(const Compare& compare, const ResponsivenessTrial& t) {
  const auto before = compare(t.x, t.y);
  const auto after = compare(set_union(t.x, t.z), set_union(t.y, t.z));
  if (before == std::weak_ordering::greater) return after == std::weak_ordering::less;
  if (before == std::weak_ordering::equivalent) return after != std::weak_ordering::equivalent;
  return after == std::weak_ordering::greater;
}

/// Large budgets for reduction instances, whose candidate counts grow with
/// the graph but whose constraints prune the search hard.
inline OracleBudget reduction_budget() { return {100000, 50'000'000}; }

}  // namespace committee::testing
