#pragma once

// Instance generators: hardness reductions from vertex cover and clique, and
// seeded random instances.

#include "committee/instance.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace committee {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  /// Throws InputError on loops, duplicate edges or bad vertices.
  Graph(int num_vertices, std::vector<std::pair<int, int>> edges);

  /// Reads "V E" followed by E lines "u v" (0-based).
  static Graph parse_edge_list(std::string_view text);
  std::string to_edge_list() const;

  int num_vertices() const { return n_; }
  /// Edges with u < v, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int v) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

/// One candidate per vertex, one label per edge with Interval(1, 2, edge).
/// Feasible iff the graph has a vertex cover of size at most k.
ElectionInstance gen_vertex_cover_intervals(const Graph& g, int k);

/// As above, with Dominance(edge, {c}) for every edge and candidate in place
/// of the intervals. Requires k >= 1.
ElectionInstance gen_vertex_cover_dominance(const Graph& g, int k);

/// SNTV election whose reference committee can be matched iff the graph has
/// a k-clique. The reference is stored in the instance. Requires k >= 2.
ElectionInstance gen_clique_sntv(const Graph& g, int k);

/// Three-voter Bloc election with the same property, padding the graph first
/// when a k-clique would cover less than half of the edges. Requires k >= 2.
ElectionInstance gen_clique_bloc(const Graph& g, int k);

/// Padding used by gen_clique_bloc: returns the graph and clique size the
/// election is built from.
std::pair<Graph, int> pad_for_bloc(const Graph& g, int k);

enum class LabelMode { disjoint, overlapping };
enum class DominanceShape { tree_like, arbitrary };

struct RandomSpec {
  int candidates = 8;
  int voters = 5;
  int k = 3;
  int labels = 3;
  LabelMode mode = LabelMode::disjoint;
  DominanceShape structure = DominanceShape::tree_like;
  std::uint64_t seed = 0;
};

/// Deterministic random instance: k-Borda, SNTV or Bloc with a score order,
/// a random labeling and random interval/dominance constraints whose bounds
/// are individually satisfiable.
ElectionInstance gen_random(const RandomSpec& spec);

}  // namespace committee
