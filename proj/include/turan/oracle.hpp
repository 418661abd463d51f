#pragma once

// Brute-force reference implementations. Everything here is deliberately
// naive, serial and independent of the optimized kernels; the test suites
// and the `oracle` CLI subcommand compare the two sides.

#include <optional>

#include "turan/certifier.hpp"
#include "turan/cliques.hpp"
#include "turan/graph.hpp"
#include "turan/multipartite.hpp"

namespace turan::oracle {

/// r-clique count by enumerating every r-subset of the vertices.
std::uint64_t count_cliques(const Graph& g, unsigned r);

/// r-cliques through both endpoints of e, by enumerating (r-2)-subsets of
/// the other vertices. Throws std::invalid_argument when e is not an edge.
std::uint64_t cliques_on_edge(const Graph& g, Edge e, unsigned r);

/// Maximum of cliques_on_edge over edges in lexicographic order.
JointReport joint_size(const Graph& g, unsigned r);

/// Minimum Turan edit set by scoring every assignment vector with the Turan
/// capacity profile, enumerated in reverse lexicographic order via
/// std::prev_permutation (the branch-and-bound in certifier walks the same
/// family in the opposite order).
TuranEdit edit_distance(const Graph& g, unsigned r);

/// Complete multipartite subgraph existence by enumerating disjoint class
/// combinations in profile order (ascending lexicographic), validating cross
/// adjacency incrementally. First valid witness in that order.
std::optional<MultipartiteWitness> find_multipartite(const Graph& g,
                                                     const SizeProfile& profile);

/// Largest vertex set inducing an r-partite subgraph, by exhausting all
/// subsets and r-colorings. Tiny n only.
VertexId max_induced_partite_order(const Graph& g, unsigned r);

}  // namespace turan::oracle
