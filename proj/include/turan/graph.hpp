#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace turan {

using VertexId = std::uint32_t;

/// Unordered pair in canonical form u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  Edge() = default;
  Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bit rows.
/// Values are immutable once built, so concurrent readers need no locking.
class Graph {
 public:
  Graph() = default;
  explicit Graph(VertexId n);

  /// Complete r-partite Turan graph; vertex v belongs to part v mod r.
  static Graph turan(VertexId n, unsigned r);

  /// Complete multipartite graph, parts of the given sizes laid out
  /// consecutively. An empty size list gives the empty graph.
  static Graph complete_multipartite(std::span<const VertexId> sizes);

  /// Uniform m-edge graph. Scheme (fixed forever): enumerate the C(n,2)
  /// vertex pairs in lexicographic order, take the first m positions of a
  /// Fisher-Yates shuffle driven by mt19937_64(seed) with rejection-sampled
  /// bounded draws.
  static Graph random(VertexId n, std::uint64_t m, std::uint64_t seed);

  /// Graph with exactly the given edges; rejects self-loops, duplicates and
  /// out-of-range endpoints.
  static Graph from_edges(VertexId n, std::span<const Edge> edges);

  VertexId order() const { return n_; }
  std::uint64_t edge_count() const { return edge_count_; }

  bool adjacent(VertexId u, VertexId v) const {
    return (words_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] >>
            (v & 63)) &
           1u;
  }

  VertexId degree(VertexId v) const { return degrees_[v]; }
  VertexId min_degree() const;  // 0 for the empty graph

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Bit row of v's neighbourhood; words_per_row() words.
  const std::uint64_t* row(VertexId v) const {
    return words_.data() + static_cast<std::size_t>(v) * stride_;
  }
  std::size_t words_per_row() const { return stride_; }

  /// Vertices adjacent to every vertex of `set`, as a bit row.
  std::vector<std::uint64_t> common_neighbors(std::span<const VertexId> set) const;

  struct Induced;  // defined after the class; holds a Graph by value
  Induced induced(std::span<const VertexId> vertices) const;

  /// Symmetric-difference edit: adds must be non-edges, removes must be
  /// edges, and the two sets must be disjoint. Throws std::invalid_argument
  /// otherwise (a malformed certificate, not a programming error).
  Graph with_edits(std::span<const Edge> adds, std::span<const Edge> removes) const;

  Graph with_edge_removed(Edge e) const { return with_edits({}, {{e}}); }
  Graph with_edge_added(Edge e) const { return with_edits({{e}}, {}); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

 private:
  void set_edge(VertexId u, VertexId v);
  void clear_edge(VertexId u, VertexId v);
  void check_vertex(VertexId v, const char* what) const;

  VertexId n_ = 0;
  std::size_t stride_ = 0;
  std::uint64_t edge_count_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<VertexId> degrees_;
};

/// Induced subgraph plus the mapping from its vertex ids back to the host's.
struct Graph::Induced {
  Graph graph;
  std::vector<VertexId> to_host;  // new id -> original id
};

/// Number of edges of T_r(n), by the part-size profile.
std::uint64_t turan_edge_count(VertexId n, unsigned r);

/// Turan part sizes for (n, r): n mod r parts of ceil(n/r), then floor(n/r).
std::vector<VertexId> turan_part_sizes(VertexId n, unsigned r);

/// T_r(n) with `flips` distinct vertex pairs toggled (edges removed,
/// non-edges added). The pairs are the first `flips` draws of a seed-keyed
/// partial Fisher-Yates pass over all C(n,2) lexicographic pair indices,
/// the same scheme Graph::random uses.
Graph planted_turan(VertexId n, unsigned r, std::uint64_t flips,
                    std::uint64_t seed);

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n. The parser rejects self-loops, duplicates, out-of-range
// ids and malformed counts.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
void write_edge_list_file(const Graph& g, const std::string& path);

// Bit-row scratch helpers shared by the search kernels.
namespace bits {

inline std::size_t words_for(VertexId n) { return (std::size_t(n) + 63) / 64; }

inline bool test(const std::uint64_t* w, VertexId i) {
  return (w[i >> 6] >> (i & 63)) & 1u;
}
inline void set(std::uint64_t* w, VertexId i) { w[i >> 6] |= 1ULL << (i & 63); }
inline void clear(std::uint64_t* w, VertexId i) { w[i >> 6] &= ~(1ULL << (i & 63)); }

inline VertexId popcount(const std::uint64_t* w, std::size_t words) {
  VertexId total = 0;
  for (std::size_t i = 0; i < words; ++i) total += __builtin_popcountll(w[i]);
  return total;
}

/// Calls fn(v) for every set bit, ascending.
template <typename Fn>
void for_each(const std::uint64_t* w, std::size_t words, Fn&& fn) {
  for (std::size_t i = 0; i < words; ++i) {
    std::uint64_t word = w[i];
    while (word) {
      unsigned bit = __builtin_ctzll(word);
      word &= word - 1;
      fn(static_cast<VertexId>(i * 64 + bit));
    }
  }
}

}  // namespace bits

}  // namespace turan
