#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "geodesia/metrics.hpp"

namespace geodesia {

/// Restriction on which pairs of a candidate set receive a fixed
/// geodesic: Unbounded assigns every pair, at_most(k) only pairs at
/// distance 1..k. at_most(2) realizes the 2-geodesic restriction.
struct LengthBound {
  int max_edges = 0;  // 0 = unbounded

  static LengthBound unbounded() { return {0}; }
  static LengthBound at_most(int k);

  bool bounded() const { return max_edges > 0; }
  bool admits(int dist) const {
    return dist >= 1 && (!bounded() || dist <= max_edges);
  }
  bool operator==(const LengthBound&) const = default;
};

/// A vertex set together with one fixed geodesic per eligible pair.
/// Valid iff covered (the union of assigned geodesics plus the basis
/// itself) equals the whole vertex set. Pairs whose distance exceeds the
/// bound are skipped and carry no assignment.
struct Certificate {
  std::vector<int> basis;  // sorted ascending
  std::vector<std::pair<std::pair<int, int>, Geodesic>> assignment;  // by pair
  std::vector<int> covered;  // sorted ascending

  bool covers_all(int n) const { return static_cast<int>(covered.size()) == n; }
};

struct SolveOptions {
  int solve_cap_vertices = 20;     // hard engine limit: 64
  int geodesic_cap = 10000;        // per-pair enumeration cap
  long long node_budget = 10'000'000;  // backtracking nodes per solve
  Backend backend = Backend::parallel;
};

struct SolveResult {
  int number = 0;
  Certificate certificate;
  long long explored = 0;  // candidate sets examined, in enumeration order
};

/// Exact decision: does S admit a choice of one geodesic per eligible
/// pair whose union together with S covers every vertex? Returns the
/// first valid assignment in deterministic search order (pairs by
/// ascending choice count, geodesics lexicographic), or nullopt.
std::optional<Certificate> check_strong_geodetic(const Graph& g,
                                                 const std::vector<int>& s,
                                                 LengthBound bound,
                                                 const SolveOptions& opts = {});

/// Generalization used by the audit checkers: same search, but only the
/// vertices in `target` must end up covered.
std::optional<Certificate> cover_with_pairs(const Graph& g,
                                            const std::vector<int>& s,
                                            const std::vector<int>& target,
                                            LengthBound bound,
                                            const SolveOptions& opts = {});

/// Minimum strong geodetic (or strong 2-geodetic) set. Candidates are
/// enumerated by increasing size, lexicographically within a size, always
/// seeded with every pendant vertex; the returned basis is therefore the
/// lexicographically smallest minimum one. Serial and parallel backends
/// produce bit-identical results.
SolveResult strong_geodetic_number(const Graph& g, LengthBound bound,
                                   const SolveOptions& opts = {});

/// Classic geodetic number g(G): coverage through the union of ALL
/// geodesics per pair, no uniqueness constraint.
int geodetic_number(const Graph& g, const SolveOptions& opts = {});

/// Independent oracle with the same contract as check_strong_geodetic,
/// implemented as a flat Cartesian-product enumeration of every possible
/// assignment, no pruning. Throws OracleBlowup when the assignment count
/// exceeds blowup_cap.
std::optional<Certificate> naive_oracle(const Graph& g,
                                        const std::vector<int>& s,
                                        LengthBound bound,
                                        long long blowup_cap = 1'000'000,
                                        int geodesic_cap = 10000);

}  // namespace geodesia
