#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "turan/cliques.hpp"
#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan {

/// One deletion made by the reduction loop: the edge and how many
/// (r+1)-cliques contained it at the moment of removal.
struct RemovalStep {
  Edge edge;
  std::uint64_t cliques_at_removal = 0;
};

/// Ordered deletion log. Every recorded count is strictly greater than
/// threshold_used (the loop only fires above the threshold), and the counts
/// sum to at most the (r+1)-clique count of the original graph: each
/// destroyed clique is destroyed exactly once.
struct RemovalTrace {
  std::vector<RemovalStep> steps;
  Rational threshold_used = 0;

  /// Total of the per-step counts; throws std::overflow_error on wrap.
  std::uint64_t sum() const;

  /// Line-oriented audit log, one "u v count" line per step, in order.
  std::string to_log() const;
};

struct ReductionResult {
  Graph graph;
  RemovalTrace trace;
};

/// Default removal threshold n^{r-1} / r^{r+6}, exact. r >= 2, n >= 0.
Rational paper_threshold(VertexId n, unsigned r);

/// theta = c^{1/(r+1)} * r^{r+6}. c >= 0 (std::domain_error otherwise),
/// r >= 2.
Real theta(const Rational& c, unsigned r);

/// Reduction loop: while some edge of G lies in more than `threshold`
/// cliques of order r+1, delete the edge of maximum count (lexicographically
/// least on ties — the joint_size witness) and log (edge, count). Counts are
/// recomputed against the current graph on every iteration.
///
/// The result graph is the input minus exactly the traced edges, and its
/// joint size is <= threshold. r >= 2; threshold >= 0.
ReductionResult run_procedure(const Graph& g, unsigned r,
                              const Rational& threshold,
                              Exec exec = Exec::Parallel);

}  // namespace turan
