#include "turan/certifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "turan/rng.hpp"

namespace turan {

namespace {

// Deterministic seed for restart i >= 1 of either local search (restart 0 is
// always the canonical partition v mod r).
std::uint64_t restart_seed(unsigned i) { return splitmix64(i); }

// --- unconstrained move sweep (partite-core extraction) -------------------

// Number of retained neighbours of v in each part.
void neighbour_profile(const Graph& g, const std::vector<unsigned>& part,
                       const std::vector<char>& retained, VertexId v,
                       unsigned r, std::vector<VertexId>& cnt) {
  cnt.assign(r, 0);
  bits::for_each(g.row(v), g.words_per_row(), [&](VertexId u) {
    if (retained[u]) ++cnt[part[u]];
  });
}

// Single-vertex relocation sweeps to a fixed point: ascending vertex ids,
// each vertex moves to the part holding fewest of its retained neighbours
// (smallest part index on ties) when that strictly improves on its current
// part. Each applied move strictly lowers the intra-part edge total, so the
// loop terminates.
void move_sweep(const Graph& g, std::vector<unsigned>& part,
                const std::vector<char>& retained, unsigned r) {
  const VertexId n = g.order();
  std::vector<VertexId> cnt;
  bool changed = true;
  while (changed) {
    changed = false;
    for (VertexId v = 0; v < n; ++v) {
      if (!retained[v]) continue;
      neighbour_profile(g, part, retained, v, r, cnt);
      unsigned best = part[v];
      for (unsigned p = 0; p < r; ++p)
        if (cnt[p] < cnt[best]) best = p;
      if (best != part[v] && cnt[best] < cnt[part[v]]) {
        part[v] = best;
        changed = true;
      }
    }
  }
}

PartiteCore core_from_state(const Graph& g, const std::vector<unsigned>& part,
                            const std::vector<char>& retained, unsigned r) {
  PartiteCore core;
  core.parts.assign(r, {});
  for (VertexId v = 0; v < g.order(); ++v)
    if (retained[v]) {
      core.host_vertices.push_back(v);
      core.parts[part[v]].push_back(v);
    }
  core.order = static_cast<VertexId>(core.host_vertices.size());
  core.min_degree = 0;
  bool first = true;
  for (VertexId v : core.host_vertices) {
    VertexId d = 0;
    bits::for_each(g.row(v), g.words_per_row(), [&](VertexId u) {
      if (retained[u]) ++d;
    });
    if (first || d < core.min_degree) core.min_degree = d;
    first = false;
  }
  return core;
}

PartiteCore extract_core_one(const Graph& g, unsigned r,
                             std::vector<unsigned> part) {
  const VertexId n = g.order();
  std::vector<char> retained(n, 1);
  move_sweep(g, part, retained, r);
  for (;;) {
    // Retained vertex of largest same-part degree (ties: smallest id).
    VertexId worst = n;
    VertexId worst_deg = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (!retained[v]) continue;
      VertexId d = 0;
      bits::for_each(g.row(v), g.words_per_row(), [&](VertexId u) {
        if (retained[u] && part[u] == part[v]) ++d;
      });
      if (d > worst_deg) {
        worst_deg = d;
        worst = v;
      }
    }
    if (worst == n) break;  // no intra-part edge survives
    retained[worst] = 0;
    move_sweep(g, part, retained, r);
  }
  return core_from_state(g, part, retained, r);
}

// (order desc, min_degree desc, parts lexicographic asc).
bool core_better(const PartiteCore& a, const PartiteCore& b) {
  if (a.order != b.order) return a.order > b.order;
  if (a.min_degree != b.min_degree) return a.min_degree > b.min_degree;
  return a.parts < b.parts;
}

// --- size-preserving local search (Turan edit heuristic) ------------------

std::uint64_t intra_edges(const Graph& g, const std::vector<unsigned>& assign) {
  std::uint64_t total = 0;
  for (const Edge& e : g.edges())
    if (assign[e.u] == assign[e.v]) ++total;
  return total;
}

// First-improvement sweeps over single relocations (only between a
// ceiling-size and a floor-size part, which preserves the size multiset) and
// pairwise swaps, ascending ids, until a full pass changes nothing.
void constrained_search(const Graph& g, std::vector<unsigned>& assign,
                        unsigned r) {
  const VertexId n = g.order();
  std::vector<VertexId> size(r, 0);
  for (VertexId v = 0; v < n; ++v) ++size[assign[v]];
  const VertexId lo = n / r;
  const VertexId hi = lo + (n % r ? 1 : 0);

  std::vector<VertexId> cnt;
  std::vector<char> all(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    if (hi != lo) {
      for (VertexId v = 0; v < n; ++v) {
        if (size[assign[v]] != hi) continue;
        neighbour_profile(g, assign, all, v, r, cnt);
        for (unsigned q = 0; q < r; ++q) {
          if (size[q] != lo || q == assign[v]) continue;
          if (cnt[q] < cnt[assign[v]]) {
            --size[assign[v]];
            ++size[q];
            assign[v] = q;
            changed = true;
            break;
          }
        }
      }
    }
    for (VertexId u = 0; u < n; ++u)
      for (VertexId w = u + 1; w < n; ++w) {
        if (assign[u] == assign[w]) continue;
        const unsigned p = assign[u];
        const unsigned q = assign[w];
        // Same-part neighbour counts before/after the swap; an edge between
        // u and w stays cross-part either way.
        VertexId a = 0, b = 0, cc = 0, d = 0;
        bits::for_each(g.row(u), g.words_per_row(), [&](VertexId x) {
          if (assign[x] == p) ++a;
          if (assign[x] == q) ++b;
        });
        bits::for_each(g.row(w), g.words_per_row(), [&](VertexId x) {
          if (assign[x] == q) ++cc;
          if (assign[x] == p) ++d;
        });
        const long long adj = g.adjacent(u, w) ? 1 : 0;
        const long long delta = (long long)b + (long long)d - 2 * adj -
                                (long long)a - (long long)cc;
        if (delta < 0) {
          assign[u] = q;
          assign[w] = p;
          changed = true;
        }
      }
  }
}

std::vector<unsigned> canonical_assignment(VertexId n, unsigned r) {
  std::vector<unsigned> assign(n);
  for (VertexId v = 0; v < n; ++v) assign[v] = v % r;
  return assign;
}

std::vector<unsigned> shuffled_turan_assignment(VertexId n, unsigned r,
                                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::uint64_t> perm = sample_prefix(n, n, rng);
  const std::vector<VertexId> sizes = turan_part_sizes(n, r);
  std::vector<unsigned> assign(n);
  std::size_t at = 0;
  for (unsigned p = 0; p < r; ++p)
    for (VertexId i = 0; i < sizes[p]; ++i) assign[perm[at++]] = p;
  return assign;
}

std::vector<std::vector<VertexId>> partition_of(
    const std::vector<unsigned>& assign, unsigned r) {
  std::vector<std::vector<VertexId>> parts(r);
  for (VertexId v = 0; v < assign.size(); ++v) parts[assign[v]].push_back(v);
  return parts;
}

}  // namespace

std::pair<Real, Real> fact1_bounds(VertexId n, unsigned r, const Real& alpha,
                                   bool strict) {
  if (r < 2) throw std::invalid_argument("fact1_bounds: r must be >= 2");
  if (alpha < 0) throw std::domain_error("fact1_bounds: alpha must be >= 0");
  if (strict) {
    const Real limit = to_real(Rational(1, 8 * ipow(r, 8)));
    if (!(alpha > 0) || !(alpha < limit))
      throw std::domain_error(
          "fact1_bounds: alpha outside (0, r^-8/8) in strict mode");
    if (Int(n) <= ipow(r, 8))
      throw std::domain_error("fact1_bounds: n <= r^8 in strict mode");
  }
  const Real root = sqrt(2 * alpha);
  const Real order_bound = (1 - root) * n;
  const Real degree_bound = (1 - Real(1) / r - 2 * root) * n;
  return {order_bound, degree_bound};
}

PartiteCore extract_partite_core(const Graph& g, unsigned r, unsigned restarts,
                                 Exec exec) {
  if (r < 2) throw std::invalid_argument("extract_partite_core: r must be >= 2");
  if (restarts == 0) restarts = 1;
  const VertexId n = g.order();
  std::vector<PartiteCore> results(restarts);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (unsigned i = 0; i < restarts; ++i) {
    std::vector<unsigned> part(n);
    if (i == 0) {
      for (VertexId v = 0; v < n; ++v) part[v] = v % r;
    } else {
      std::mt19937_64 rng(restart_seed(i));
      for (VertexId v = 0; v < n; ++v)
        part[v] = static_cast<unsigned>(bounded(rng, r));
    }
    results[i] = extract_core_one(g, r, std::move(part));
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (core_better(results[i], results[best])) best = i;
  return results[best];
}

PartiteCore trim_to_size(const PartiteCore& core, const Graph& g,
                         VertexId target) {
  if (target == 0)
    throw std::invalid_argument("trim_to_size: target must be >= 1");
  for (const std::vector<VertexId>& part : core.parts)
    if (part.size() < target)
      throw std::invalid_argument("trim_to_size: part smaller than target");

  // Induced degrees within the original core.
  std::vector<char> in_core(g.order(), 0);
  for (VertexId v : core.host_vertices) in_core[v] = 1;
  auto induced_degree = [&](VertexId v, const std::vector<char>& mask) {
    VertexId d = 0;
    bits::for_each(g.row(v), g.words_per_row(), [&](VertexId u) {
      if (mask[u]) ++d;
    });
    return d;
  };

  PartiteCore out;
  out.parts.reserve(core.parts.size());
  for (const std::vector<VertexId>& part : core.parts) {
    std::vector<VertexId> keep = part;
    std::stable_sort(keep.begin(), keep.end(), [&](VertexId a, VertexId b) {
      const VertexId da = induced_degree(a, in_core);
      const VertexId db = induced_degree(b, in_core);
      if (da != db) return da > db;
      return a < b;
    });
    keep.resize(target);
    std::sort(keep.begin(), keep.end());
    out.parts.push_back(std::move(keep));
  }
  for (const std::vector<VertexId>& part : out.parts)
    out.host_vertices.insert(out.host_vertices.end(), part.begin(), part.end());
  std::sort(out.host_vertices.begin(), out.host_vertices.end());
  out.order = static_cast<VertexId>(out.host_vertices.size());

  std::vector<char> kept(g.order(), 0);
  for (VertexId v : out.host_vertices) kept[v] = 1;
  bool first = true;
  for (VertexId v : out.host_vertices) {
    const VertexId d = induced_degree(v, kept);
    if (first || d < out.min_degree) out.min_degree = d;
    first = false;
  }
  return out;
}

TuranEdit edits_from_partition(
    const Graph& g, const std::vector<std::vector<VertexId>>& partition,
    unsigned r) {
  const VertexId n = g.order();
  if (partition.size() != r)
    throw std::invalid_argument("edits_from_partition: expected r parts");
  std::vector<unsigned> assign(n, r);
  std::uint64_t covered = 0;
  for (unsigned p = 0; p < r; ++p)
    for (VertexId v : partition[p]) {
      if (v >= n)
        throw std::invalid_argument("edits_from_partition: vertex out of range");
      if (assign[v] != r)
        throw std::invalid_argument(
            "edits_from_partition: vertex in two parts");
      assign[v] = p;
      ++covered;
    }
  if (covered != n)
    throw std::invalid_argument("edits_from_partition: partition must cover "
                                "all vertices");
  std::vector<VertexId> have;
  for (const std::vector<VertexId>& part : partition)
    have.push_back(static_cast<VertexId>(part.size()));
  std::vector<VertexId> want = turan_part_sizes(n, r);
  std::vector<VertexId> have_sorted = have;
  std::sort(have_sorted.begin(), have_sorted.end());
  std::sort(want.begin(), want.end());
  if (have_sorted != want)
    throw std::invalid_argument(
        "edits_from_partition: part sizes are not the Turan profile");

  TuranEdit edit;
  edit.partition.assign(r, {});
  for (VertexId v = 0; v < n; ++v) edit.partition[assign[v]].push_back(v);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) {
      const bool same = assign[u] == assign[v];
      const bool edge = g.adjacent(u, v);
      if (same && edge) edit.removes.push_back(Edge(u, v));
      if (!same && !edge) edit.adds.push_back(Edge(u, v));
    }
  edit.count = edit.adds.size() + edit.removes.size();
  return edit;
}

namespace {

// Depth-first enumeration of capacity-constrained assignment vectors in
// ascending lexicographic order, pruned by the partial intra-edge count.
// Keeping only strict improvements makes the first minimum — the
// lexicographically least one — the final answer.
struct ExactState {
  const Graph& g;
  std::vector<VertexId> remaining;
  std::vector<unsigned> assign;
  std::uint64_t intra = 0;
  std::uint64_t best_intra = UINT64_MAX;
  std::vector<unsigned> best_assign;

  void dfs(VertexId v) {
    const VertexId n = g.order();
    if (v == n) {
      if (intra < best_intra) {
        best_intra = intra;
        best_assign = assign;
      }
      return;
    }
    for (unsigned p = 0; p < remaining.size(); ++p) {
      if (remaining[p] == 0) continue;
      std::uint64_t added = 0;
      for (VertexId u = 0; u < v; ++u)
        if (assign[u] == p && g.adjacent(u, v)) ++added;
      if (intra + added >= best_intra) continue;
      assign[v] = p;
      --remaining[p];
      intra += added;
      dfs(v + 1);
      intra -= added;
      ++remaining[p];
    }
  }
};

}  // namespace

std::optional<TuranEdit> edit_distance_exact(const Graph& g, unsigned r,
                                             VertexId max_n) {
  if (r == 0)
    throw std::invalid_argument("edit_distance_exact: r must be >= 1");
  const VertexId n = g.order();
  if (n > max_n) return std::nullopt;
  ExactState state{g, turan_part_sizes(n, r), std::vector<unsigned>(n, 0),
                   0, UINT64_MAX, {}};
  state.dfs(0);
  return edits_from_partition(g, partition_of(state.best_assign, r), r);
}

TuranEdit edit_distance_heuristic(const Graph& g, unsigned r, unsigned restarts,
                                  Exec exec) {
  if (r == 0)
    throw std::invalid_argument("edit_distance_heuristic: r must be >= 1");
  if (restarts == 0) restarts = 1;
  const VertexId n = g.order();
  std::vector<std::vector<unsigned>> results(restarts);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (unsigned i = 0; i < restarts; ++i) {
    std::vector<unsigned> assign =
        i == 0 ? canonical_assignment(n, r)
               : shuffled_turan_assignment(n, r, restart_seed(i));
    constrained_search(g, assign, r);
    results[i] = std::move(assign);
  }
  std::size_t best = 0;
  std::uint64_t best_cost = intra_edges(g, results[0]);
  for (std::size_t i = 1; i < results.size(); ++i) {
    const std::uint64_t cost = intra_edges(g, results[i]);
    if (cost < best_cost || (cost == best_cost && results[i] < results[best])) {
      best_cost = cost;
      best = i;
    }
  }
  return edits_from_partition(g, partition_of(results[best], r), r);
}

Real theorem_bound(VertexId n, unsigned r, const Real& eps, const Real& c) {
  if (r < 1) throw std::invalid_argument("theorem_bound: r must be >= 1");
  if (eps < 0 || c < 0)
    throw std::domain_error("theorem_bound: eps and c must be >= 0");
  const Real cube_root = pow(eps, Real(1) / 3);
  const Real other = pow(c, Real(1) / (3 * static_cast<int>(r) + 3));
  return (cube_root + other) * Real(n) * Real(n);
}

}  // namespace turan
