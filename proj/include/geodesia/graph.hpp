#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "geodesia/errors.hpp"

namespace geodesia {

/// Immutable simple undirected graph in canonical form: vertices are
/// 0..n-1, neighbor lists sorted ascending, edge list sorted
/// lexicographically with u < v. Two equal graphs compare equal
/// regardless of the edge order they were built from.
struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  std::vector<std::pair<int, int>> edges;
  bool connected = true;

  int degree(int u) const { return static_cast<int>(adj[u].size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n == other.n && edges == other.edges;
  }
};

/// Validates, dedupes and canonicalizes. Duplicate input pairs collapse
/// to one edge; (u,v) and (v,u) are the same edge.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

enum class Family { path, cycle, complete, star };

/// Standard families. k is the vertex count; star(k) is the star with
/// k-1 leaves (so star(4) has 3 leaves). cycle requires k >= 3,
/// star k >= 2, path/complete k >= 1.
Graph generate(Family family, int k);

Family family_from_name(std::string_view name);
const char* to_string(Family family);

}  // namespace geodesia
