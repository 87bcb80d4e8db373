#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wed {

using VertexSet = std::vector<int>;  // sorted, duplicate-free

/// Immutable simple undirected graph over vertices 0..n-1 with sorted
/// adjacency lists. Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges (in either orientation) are
  /// merged. Throws std::invalid_argument on loops or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

  /// Complement without self-loops. Intended for small graphs.
  Graph complement() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

/// BFS layers around a root. `levels[i]` holds the vertices at distance i+1;
/// vertices in other components are reported in `unreachable`.
struct DistanceLevels {
  int root = 0;
  std::vector<VertexSet> levels;
  VertexSet unreachable;

  /// Everything beyond the second level plus the unreachable vertices.
  VertexSet residual() const;
  /// Level of v: 0 for the root, i for levels[i-1], -1 if unreachable.
  int level_of(int v, int n) const;
};

DistanceLevels distance_levels(const Graph& g, int root);

/// Vertices outside U with no neighbor in U. By convention the
/// anti-neighborhood of the empty set is all of V.
VertexSet anti_neighborhood(const Graph& g, const VertexSet& u);

/// Vertices outside U adjacent to at least one member of U.
VertexSet neighborhood_of_set(const Graph& g, const VertexSet& u);

/// Connected components, of the graph itself or of its complement. The
/// complement is never materialized; co-components are found by refining the
/// set of unvisited vertices against neighborhoods.
std::vector<VertexSet> components(const Graph& g, bool complemented = false);

/// (vertex, degree) with minimum degree, smallest index on ties.
std::pair<int, int> min_degree_vertex(const Graph& g);

/// Induced subgraph on S plus the map from new indices back to old ones.
std::pair<Graph, std::vector<int>> induced(const Graph& g, const VertexSet& s);

/// Members of S adjacent to every other member of S. A singleton is its own
/// universal vertex.
VertexSet universal_in(const Graph& g, const VertexSet& s);

// Sorted-set helpers shared across the library.
bool set_contains(const VertexSet& s, int v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
std::string join_ints(const VertexSet& s, const std::string& sep = ",");

}  // namespace wed
