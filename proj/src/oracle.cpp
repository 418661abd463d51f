#include "turan/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "turan/numeric.hpp"

namespace turan::oracle {

namespace {

// Advances an ascending index combination over {0..n-1}; false when done.
// Callers guarantee idx.size() <= n.
bool next_combination(std::vector<VertexId>& idx, VertexId n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (idx[i] != n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool all_pairs_adjacent(const Graph& g, const std::vector<VertexId>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

}  // namespace

std::uint64_t count_cliques(const Graph& g, unsigned r) {
  if (r == 0) throw std::invalid_argument("count_cliques: r must be >= 1");
  const VertexId n = g.order();
  if (r > n) return 0;
  std::vector<VertexId> idx(r);
  for (unsigned i = 0; i < r; ++i) idx[i] = i;
  std::uint64_t count = 0;
  do {
    if (all_pairs_adjacent(g, idx)) count = checked_add(count, 1);
  } while (next_combination(idx, n));
  return count;
}

std::uint64_t cliques_on_edge(const Graph& g, Edge e, unsigned r) {
  if (r < 2) throw std::invalid_argument("cliques_on_edge: r must be >= 2");
  if (!g.adjacent(e.u, e.v))
    throw std::invalid_argument("cliques_on_edge: not an edge");
  if (r == 2) return 1;
  const VertexId n = g.order();
  std::vector<VertexId> others;
  for (VertexId v = 0; v < n; ++v)
    if (v != e.u && v != e.v) others.push_back(v);
  const unsigned k = r - 2;
  if (k > others.size()) return 0;
  std::vector<VertexId> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  std::uint64_t count = 0;
  do {
    std::vector<VertexId> clique = {e.u, e.v};
    for (VertexId i : idx) clique.push_back(others[i]);
    if (all_pairs_adjacent(g, clique)) count = checked_add(count, 1);
  } while (next_combination(idx, static_cast<VertexId>(others.size())));
  return count;
}

JointReport joint_size(const Graph& g, unsigned r) {
  if (r < 2) throw std::invalid_argument("joint_size: r must be >= 2");
  JointReport report;
  for (const Edge& e : g.edges()) {
    std::uint64_t c = oracle::cliques_on_edge(g, e, r);
    if (c > report.size) {
      report.size = c;
      report.witness = e;
    }
  }
  if (report.size == 0) report.witness.reset();
  return report;
}

TuranEdit edit_distance(const Graph& g, unsigned r) {
  if (r == 0) throw std::invalid_argument("edit_distance: r must be >= 1");
  const VertexId n = g.order();
  std::vector<VertexId> sizes = turan_part_sizes(n, r);

  // Reverse-lexicographic enumeration of assignment vectors with exactly
  // sizes[p] copies of p: start from the greatest arrangement.
  std::vector<VertexId> assign;
  for (unsigned p = r; p-- > 0;)
    assign.insert(assign.end(), sizes[p], static_cast<VertexId>(p));

  std::vector<VertexId> best;
  std::uint64_t best_count = UINT64_MAX;
  bool more = true;
  while (more) {
    std::uint64_t count = 0;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) {
        const bool same = assign[u] == assign[v];
        const bool edge = g.adjacent(u, v);
        if (same && edge) ++count;
        if (!same && !edge) ++count;
      }
    // Later candidates are lexicographically smaller, so ties also replace.
    if (count <= best_count) {
      best_count = count;
      best = assign;
    }
    more = std::prev_permutation(assign.begin(), assign.end());
  }

  TuranEdit edit;
  edit.partition.assign(r, {});
  for (VertexId v = 0; v < n; ++v) edit.partition[best[v]].push_back(v);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const bool same = best[u] == best[v];
      const bool edge = g.adjacent(u, v);
      if (same && edge) edit.removes.push_back(Edge(u, v));
      if (!same && !edge) edit.adds.push_back(Edge(u, v));
    }
  edit.count = edit.adds.size() + edit.removes.size();
  return edit;
}

namespace {

bool cross_complete(const Graph& g, const std::vector<VertexId>& a,
                    const std::vector<VertexId>& b) {
  for (VertexId x : a)
    for (VertexId y : b)
      if (!g.adjacent(x, y)) return false;
  return true;
}

bool search_classes(const Graph& g, const SizeProfile& profile,
                    std::vector<std::vector<VertexId>>& classes,
                    std::vector<bool>& used) {
  const VertexId n = g.order();
  const std::size_t done = classes.size();
  if (done == profile.classes()) return true;
  const VertexId want = (done < profile.r_small) ? profile.s : profile.t;

  std::vector<VertexId> avail;
  for (VertexId v = 0; v < n; ++v)
    if (!used[v]) avail.push_back(v);
  if (avail.size() < want) return false;

  std::vector<VertexId> idx(want);
  for (VertexId i = 0; i < want; ++i) idx[i] = i;
  do {
    std::vector<VertexId> cls;
    for (VertexId i : idx) cls.push_back(avail[i]);
    bool ok = true;
    for (const auto& prev : classes)
      if (!cross_complete(g, prev, cls)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    classes.push_back(cls);
    for (VertexId v : cls) used[v] = true;
    if (search_classes(g, profile, classes, used)) return true;
    for (VertexId v : cls) used[v] = false;
    classes.pop_back();
  } while (next_combination(idx, static_cast<VertexId>(avail.size())));
  return false;
}

}  // namespace

std::optional<MultipartiteWitness> find_multipartite(const Graph& g,
                                                     const SizeProfile& profile) {
  if (profile.total() > g.order()) return std::nullopt;
  std::vector<std::vector<VertexId>> classes;
  std::vector<bool> used(g.order(), false);
  if (!search_classes(g, profile, classes, used)) return std::nullopt;
  return MultipartiteWitness{classes};
}

namespace {

bool colorable(const Graph& g, const std::vector<VertexId>& vs, unsigned r,
               std::vector<unsigned>& color, std::size_t at) {
  if (at == vs.size()) return true;
  for (unsigned c = 0; c < r; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < at; ++j)
      if (color[j] == c && g.adjacent(vs[j], vs[at])) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[at] = c;
    if (colorable(g, vs, r, color, at + 1)) return true;
  }
  return false;
}

}  // namespace

VertexId max_induced_partite_order(const Graph& g, unsigned r) {
  const VertexId n = g.order();
  if (n > 20) throw std::invalid_argument("max_induced_partite_order: n too large");
  VertexId best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<VertexId> vs;
    for (VertexId v = 0; v < n; ++v)
      if (mask & (1u << v)) vs.push_back(v);
    if (vs.size() <= best) continue;
    std::vector<unsigned> color(vs.size(), 0);
    if (colorable(g, vs, r, color, 0)) best = static_cast<VertexId>(vs.size());
  }
  return best;
}

}  // namespace turan::oracle
