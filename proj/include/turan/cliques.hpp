#pragma once

#include <optional>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

/// Kernel execution mode. Parallel and serial runs return identical results,
/// including tie-breaks; the serial path exists for testing and comparison.
enum class Exec { Serial, Parallel };

/// Maximum number of r-cliques sharing one edge (the joint size), with the
/// lexicographically least maximizing edge when the size is positive.
struct JointReport {
  std::uint64_t size = 0;
  std::optional<Edge> witness;
};

/// Exact number of r-cliques. r >= 1; r > |G| gives 0. Counts are
/// overflow-checked; std::overflow_error instead of wraparound.
std::uint64_t count_cliques(const Graph& g, unsigned r, Exec exec = Exec::Parallel);

/// Number of r-cliques containing both endpoints of e, computed as the count
/// of (r-2)-cliques in the common neighbourhood. r >= 2; throws
/// std::invalid_argument when e is not an edge of g.
std::uint64_t cliques_on_edge(const Graph& g, Edge e, unsigned r);

/// Per-edge clique counts for a batch of edges (each must be an edge of g).
std::vector<std::uint64_t> cliques_per_edge(const Graph& g,
                                            const std::vector<Edge>& edges,
                                            unsigned r,
                                            Exec exec = Exec::Parallel);

/// js_r(g): maximum of cliques_on_edge over all edges; size 0 and no witness
/// on graphs without edges or without r-cliques. r >= 2.
JointReport joint_size(const Graph& g, unsigned r, Exec exec = Exec::Parallel);

}  // namespace turan
