#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turan/graph.hpp"
#include "turan/numeric.hpp"

namespace turan {

/// Class sizes of a complete multipartite target K(s,...,s,t): r_small
/// classes of size s followed by one class of size t.
struct SizeProfile {
  VertexId r_small = 0;
  VertexId s = 0;
  VertexId t = 0;

  VertexId classes() const { return r_small + 1; }
  std::uint64_t total() const {
    return static_cast<std::uint64_t>(r_small) * s + t;
  }
  friend bool operator==(const SizeProfile&, const SizeProfile&) = default;
};

/// Disjoint vertex classes of a host graph with every cross-class pair
/// adjacent. Intra-class adjacency is unconstrained: this certifies a
/// complete multipartite subgraph, not an induced one.
struct MultipartiteWitness {
  std::vector<std::vector<VertexId>> parts;

  /// One line per class, space-separated vertex ids.
  std::string to_text() const;
};

/// K_r(s,...,s,t) sizes with s = floor(c^r ln n) and t = ceil(n^{1-c^{r-1}}),
/// r-1 small classes. Requires c^r ln n >= 1; throws std::domain_error.
SizeProfile fact2_parameters(VertexId n, unsigned r, const Real& c);

/// K_{r+1} profile with r small classes of size floor(c ln n) and one class
/// of size ceil(n^{1-sqrt(c)}). Requires c > 0, n >= 2 and floor(c ln n) >= 1;
/// throws std::domain_error when the sizes degenerate.
SizeProfile theorem1_profile(VertexId n, unsigned r, const Real& c);

enum class SearchStatus { Found, NoneExists, BudgetExhausted };

struct SearchOutcome {
  SearchStatus status = SearchStatus::NoneExists;
  std::optional<MultipartiteWitness> witness;  // present iff Found
  std::uint64_t nodes = 0;                     // search nodes expanded
};

inline constexpr std::uint64_t kDefaultSearchBudget = 20'000'000;

/// Complete search with common-neighbourhood pruning. Classes are filled in
/// profile order, vertices tried in ascending id; equal-size classes are
/// explored with increasing minimum elements; the t class is taken last from
/// the final common neighbourhood. Exhausting the node budget is a third
/// outcome, distinct from a refutation.
SearchOutcome find_multipartite_exact(const Graph& g, const SizeProfile& profile,
                                      std::uint64_t budget = kDefaultSearchBudget);

/// Fast one-sided finder: grows each class by the vertex keeping the class's
/// common neighbourhood largest. A returned witness is verified; absence of
/// a result refutes nothing.
std::optional<MultipartiteWitness> find_multipartite_greedy(const Graph& g,
                                                            const SizeProfile& profile);

struct WitnessCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Disjointness, cross-class completeness and size-profile match, by direct
/// adjacency probes.
WitnessCheck verify_witness(const Graph& g, const MultipartiteWitness& w,
                            const SizeProfile& profile);

}  // namespace turan
