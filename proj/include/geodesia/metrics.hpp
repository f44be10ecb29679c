#pragma once

#include <utility>
#include <vector>

#include "geodesia/graph.hpp"

namespace geodesia {

/// Marker for unreachable pairs and infinite eccentricity/diameter.
inline constexpr int kUnreachable = -1;

enum class Backend { serial, parallel };

/// Exact hop distances for all pairs, per-vertex eccentricities and the
/// diameter. On disconnected graphs unreachable entries, the affected
/// eccentricities and the diameter all carry kUnreachable.
struct DistanceTable {
  int n = 0;
  std::vector<int> dist;  // row-major n*n
  std::vector<int> ecc;
  int diam = 0;

  int at(int u, int v) const { return dist[static_cast<size_t>(u) * n + v]; }
};

DistanceTable distances(const Graph& g, Backend backend = Backend::parallel);

/// A concrete shortest path; vertices from source to target inclusive.
struct Geodesic {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int source() const { return vertices.front(); }
  int target() const { return vertices.back(); }
  bool operator==(const Geodesic&) const = default;
};

/// All distinct geodesics between u and v, ordered lexicographically by
/// vertex sequence. Throws Unreachable if no path exists and CapExceeded
/// if the count would exceed cap (exactness over truncation).
std::vector<Geodesic> enumerate_geodesics(const Graph& g, int u, int v,
                                          int cap = 10000);

/// Degree-1 vertices, ascending.
std::vector<int> pendant_vertices(const Graph& g);

/// All unordered pairs at distance diam(G), lexicographic. Requires a
/// connected graph.
std::vector<std::pair<int, int>> antipodal_pairs(const Graph& g);

}  // namespace geodesia
