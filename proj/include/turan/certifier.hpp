#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "turan/cliques.hpp"
#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan {

/// Induced r-partite subgraph of a host graph: every part is an independent
/// set in the subgraph induced on host_vertices.
struct PartiteCore {
  std::vector<VertexId> host_vertices;         // ascending
  std::vector<std::vector<VertexId>> parts;    // partition of host_vertices
  VertexId order = 0;                          // |host_vertices|
  VertexId min_degree = 0;                     // within the induced subgraph
};

/// Certified edit set to the Turan graph: applying (adds, removes) to the
/// source graph yields the complete r-partite graph on `partition`, whose
/// part sizes follow the Turan profile.
struct TuranEdit {
  std::vector<std::vector<VertexId>> partition;  // all n vertices, r parts
  std::vector<Edge> adds;                        // cross-part non-edges
  std::vector<Edge> removes;                     // intra-part edges
  std::uint64_t count = 0;                       // |adds| + |removes|
};

/// Order and minimum-degree bounds promised for a partite core extracted
/// from a graph with the given slack: ((1-sqrt(2a))n, (1-1/r-2*sqrt(2a))n).
/// strict=true enforces 0 < alpha < r^-8/8 and n > r^8 (std::domain_error);
/// strict=false computes the bounds for any alpha >= 0.
std::pair<Real, Real> fact1_bounds(VertexId n, unsigned r, const Real& alpha,
                                   bool strict = false);

/// Heuristic partite-core extraction. Procedure (deterministic, multi-start):
/// (1) partition all vertices by local search minimizing intra-part edges
/// (single-vertex moves to the best part, ascending-id sweeps to a fixed
/// point); (2) while an intra-part edge survives, drop the retained vertex of
/// largest intra-part degree (ties: smallest id); (3) re-sweep survivors;
/// repeat (2)-(3) to a fixed point. Restart 0 is the canonical partition
/// v mod r; the rest are seeded random assignments. Best core by (order,
/// min_degree, lexicographic parts). Validity of the output is unconditional;
/// the Fact-1-style bounds are advisory and reported by the caller.
PartiteCore extract_partite_core(const Graph& g, unsigned r,
                                 unsigned restarts = 8,
                                 Exec exec = Exec::Parallel);

/// Shrinks every part to exactly `target` vertices, keeping the vertices of
/// largest induced degree within the core (ties: smallest id). Throws
/// std::invalid_argument when a part is smaller than target.
PartiteCore trim_to_size(const PartiteCore& core, const Graph& g, VertexId target);

/// Edit set realizing the complete r-partite graph on a given partition:
/// removes the intra-part edges, adds the missing cross-part pairs. The
/// partition must cover all vertices exactly once and carry Turan sizes.
TuranEdit edits_from_partition(const Graph& g,
                               const std::vector<std::vector<VertexId>>& partition,
                               unsigned r);

/// Minimum edit count over all vertex partitions with the Turan size profile
/// (branch-and-bound over assignment vectors; capacities ceil(n/r) on the
/// first n mod r parts). Ties resolved toward the lexicographically least
/// assignment vector. Refuses graphs larger than max_n (nullopt): the
/// enumeration is exponential and meant for cross-checking.
std::optional<TuranEdit> edit_distance_exact(const Graph& g, unsigned r,
                                             VertexId max_n = 12);

/// Upper bound on the exact distance from the best partition found by
/// size-preserving local search (vertex relocations between floor/ceil parts
/// plus pairwise swaps), multi-start with the canonical partition v mod r
/// always included. Deterministic.
TuranEdit edit_distance_heuristic(const Graph& g, unsigned r,
                                  unsigned restarts = 8,
                                  Exec exec = Exec::Parallel);

/// (eps^{1/3} + c^{1/(3r+3)}) * n^2.
Real theorem_bound(VertexId n, unsigned r, const Real& eps, const Real& c);

}  // namespace turan
