#include "turan/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "turan/rng.hpp"

namespace turan {

Graph::Graph(VertexId n)
    : n_(n),
      stride_(bits::words_for(n)),
      words_(static_cast<std::size_t>(n) * stride_, 0),
      degrees_(n, 0) {}

void Graph::check_vertex(VertexId v, const char* what) const {
  if (v >= n_)
    throw std::invalid_argument(std::string(what) + ": vertex " +
                                std::to_string(v) + " out of range for n=" +
                                std::to_string(n_));
}

void Graph::set_edge(VertexId u, VertexId v) {
  words_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] |= 1ULL << (v & 63);
  words_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] |= 1ULL << (u & 63);
  ++degrees_[u];
  ++degrees_[v];
  ++edge_count_;
}

void Graph::clear_edge(VertexId u, VertexId v) {
  words_[static_cast<std::size_t>(u) * stride_ + (v >> 6)] &= ~(1ULL << (v & 63));
  words_[static_cast<std::size_t>(v) * stride_ + (u >> 6)] &= ~(1ULL << (u & 63));
  --degrees_[u];
  --degrees_[v];
  --edge_count_;
}

Graph Graph::turan(VertexId n, unsigned r) {
  if (r == 0) throw std::invalid_argument("turan: r must be >= 1");
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (u % r != v % r) g.set_edge(u, v);
  return g;
}

Graph Graph::complete_multipartite(std::span<const VertexId> sizes) {
  std::uint64_t total = 0;
  for (VertexId s : sizes) {
    if (s == 0)
      throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
    total += s;
  }
  if (total > UINT32_MAX)
    throw std::invalid_argument("complete_multipartite: too many vertices");
  Graph g(static_cast<VertexId>(total));

  std::vector<VertexId> part_of(total);
  VertexId next = 0;
  for (std::size_t p = 0; p < sizes.size(); ++p)
    for (VertexId i = 0; i < sizes[p]; ++i) part_of[next++] = static_cast<VertexId>(p);

  for (VertexId u = 0; u < g.n_; ++u)
    for (VertexId v = u + 1; v < g.n_; ++v)
      if (part_of[u] != part_of[v]) g.set_edge(u, v);
  return g;
}

Graph Graph::random(VertexId n, std::uint64_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (m > pairs)
    throw std::invalid_argument("random: m=" + std::to_string(m) +
                                " exceeds C(n,2)=" + std::to_string(pairs));
  Graph g(n);
  if (m == 0) return g;

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> chosen = sample_prefix(pairs, m, rng);

  // Pair index -> (u, v) in lexicographic order: offsets[u] is the index of
  // the first pair with smaller endpoint u.
  std::vector<std::uint64_t> offsets(n + 1, 0);
  for (VertexId u = 0; u < n; ++u)
    offsets[u + 1] = offsets[u] + (n - 1 - u);
  for (std::uint64_t idx : chosen) {
    VertexId u = 0;
    {
      VertexId lo = 0, hi = n;  // largest u with offsets[u] <= idx
      while (lo + 1 < hi) {
        VertexId mid = lo + (hi - lo) / 2;
        if (offsets[mid] <= idx)
          lo = mid;
        else
          hi = mid;
      }
      u = lo;
    }
    VertexId v = static_cast<VertexId>(u + 1 + (idx - offsets[u]));
    g.set_edge(u, v);
  }
  return g;
}

Graph Graph::from_edges(VertexId n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    g.check_vertex(e.u, "from_edges");
    g.check_vertex(e.v, "from_edges");
    if (e.u == e.v) throw std::invalid_argument("from_edges: self-loop");
    if (g.adjacent(e.u, e.v))
      throw std::invalid_argument("from_edges: duplicate edge " +
                                  std::to_string(e.u) + " " + std::to_string(e.v));
    g.set_edge(e.u, e.v);
  }
  return g;
}

VertexId Graph::min_degree() const {
  if (n_ == 0) return 0;
  VertexId best = degrees_[0];
  for (VertexId v = 1; v < n_; ++v)
    if (degrees_[v] < best) best = degrees_[v];
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < n_; ++u) {
    const std::uint64_t* r = row(u);
    for (std::size_t w = (u + 1) >> 6; w < stride_; ++w) {
      std::uint64_t word = r[w];
      if (w == ((u + 1) >> 6) && ((u + 1) & 63))
        word &= ~0ULL << ((u + 1) & 63);
      while (word) {
        unsigned bit = __builtin_ctzll(word);
        word &= word - 1;
        out.push_back(Edge(u, static_cast<VertexId>(w * 64 + bit)));
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> Graph::common_neighbors(
    std::span<const VertexId> set) const {
  std::vector<std::uint64_t> acc(stride_, ~0ULL);
  if (stride_ > 0 && (n_ & 63)) acc[stride_ - 1] = (1ULL << (n_ & 63)) - 1;
  for (VertexId v : set) {
    check_vertex(v, "common_neighbors");
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w < stride_; ++w) acc[w] &= r[w];
  }
  return acc;
}

Graph::Induced Graph::induced(std::span<const VertexId> vertices) const {
  std::set<VertexId> seen;
  for (VertexId v : vertices) {
    check_vertex(v, "induced");
    if (!seen.insert(v).second)
      throw std::invalid_argument("induced: duplicate vertex " + std::to_string(v));
  }
  Induced out;
  out.to_host.assign(vertices.begin(), vertices.end());
  out.graph = Graph(static_cast<VertexId>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        out.graph.set_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return out;
}

Graph Graph::with_edits(std::span<const Edge> adds,
                        std::span<const Edge> removes) const {
  std::set<Edge> add_set, remove_set;
  for (const Edge& e : adds) {
    check_vertex(e.u, "with_edits add");
    check_vertex(e.v, "with_edits add");
    if (e.u == e.v) throw std::invalid_argument("with_edits: self-loop add");
    if (adjacent(e.u, e.v))
      throw std::invalid_argument("with_edits: add is already an edge");
    if (!add_set.insert(e).second)
      throw std::invalid_argument("with_edits: duplicate add");
  }
  for (const Edge& e : removes) {
    check_vertex(e.u, "with_edits remove");
    check_vertex(e.v, "with_edits remove");
    if (!adjacent(e.u, e.v))
      throw std::invalid_argument("with_edits: remove is not an edge");
    if (!remove_set.insert(e).second)
      throw std::invalid_argument("with_edits: duplicate remove");
    if (add_set.count(e))
      throw std::invalid_argument("with_edits: edge both added and removed");
  }
  Graph g = *this;
  for (const Edge& e : removes) g.clear_edge(e.u, e.v);
  for (const Edge& e : adds) g.set_edge(e.u, e.v);
  return g;
}

std::vector<VertexId> turan_part_sizes(VertexId n, unsigned r) {
  if (r == 0) throw std::invalid_argument("turan_part_sizes: r must be >= 1");
  std::vector<VertexId> sizes(r, n / r);
  for (unsigned i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

std::uint64_t turan_edge_count(VertexId n, unsigned r) {
  std::uint64_t total = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  for (VertexId s : turan_part_sizes(n, r))
    total -= static_cast<std::uint64_t>(s) * (s - 1) / 2;
  return total;
}

Graph planted_turan(VertexId n, unsigned r, std::uint64_t flips,
                    std::uint64_t seed) {
  Graph g = Graph::turan(n, r);
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  if (flips > pairs)
    throw std::invalid_argument("planted_turan: flips=" +
                                std::to_string(flips) + " exceeds C(n,2)=" +
                                std::to_string(pairs));
  std::mt19937_64 rng(seed);
  std::vector<Edge> adds;
  std::vector<Edge> removes;
  for (std::uint64_t idx : sample_prefix(pairs, flips, rng)) {
    VertexId u = 0;
    std::uint64_t rest = idx;
    while (rest >= static_cast<std::uint64_t>(n) - 1 - u) {
      rest -= n - 1 - u;
      ++u;
    }
    const Edge e(u, static_cast<VertexId>(u + 1 + rest));
    if (g.adjacent(e.u, e.v))
      removes.push_back(e);
    else
      adds.push_back(e);
  }
  return g.with_edits(adds, removes);
}

Graph read_edge_list(std::istream& in) {
  std::uint64_t n = 0, m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
  if (n > UINT32_MAX) throw std::invalid_argument("edge list: n too large");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0, v = 0;
    if (!(in >> u >> v))
      throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                  " edges, got " + std::to_string(i));
    if (u >= n || v >= n)
      throw std::invalid_argument("edge list: vertex out of range in edge " +
                                  std::to_string(i));
    if (u == v)
      throw std::invalid_argument("edge list: self-loop in edge " + std::to_string(i));
    if (u > v)
      throw std::invalid_argument("edge list: endpoints not in order u < v in edge " +
                                  std::to_string(i));
    edges.push_back(Edge(static_cast<VertexId>(u), static_cast<VertexId>(v)));
  }
  try {
    return Graph::from_edges(static_cast<VertexId>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("edge list: ") + e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path);
  write_edge_list(g, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace turan
