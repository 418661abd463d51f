#include "turan/cliques.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <vector>

namespace turan {

namespace {

// 128-bit accumulators make intermediate sums exact without per-add checks:
// each recursion step contributes at most 2^32, so a run would need more
// than 2^95 steps before an accumulator could wrap. The public entry points
// range-check the final value against 64 bits.
using Acc = unsigned __int128;

constexpr Acc kMaxU64 = static_cast<Acc>(UINT64_MAX);

// Counts cliques of size `need` (>= 1) inside the bit row at scratch[0],
// extending in ascending vertex order so each clique is counted once. The
// row at scratch[0] is consumed; scratch must hold `need` rows of `stride`
// words.
Acc count_level(const Graph& g, std::uint64_t* scratch, std::size_t stride,
                unsigned need) {
  std::uint64_t* cand = scratch;
  if (need == 1) return bits::popcount(cand, stride);
  std::uint64_t* next = scratch + stride;
  Acc total = 0;
  for (std::size_t w = 0; w < stride; ++w) {
    while (cand[w]) {
      const unsigned bit = __builtin_ctzll(cand[w]);
      cand[w] &= cand[w] - 1;  // cand now holds exactly the vertices > v
      const VertexId v = static_cast<VertexId>(w * 64 + bit);
      const std::uint64_t* row = g.row(v);
      unsigned pc = 0;
      for (std::size_t i = 0; i < stride; ++i) {
        next[i] = cand[i] & row[i];
        pc += __builtin_popcountll(next[i]);
      }
      if (pc < need - 1) continue;
      if (need == 2) {
        total += pc;
        continue;
      }
      total += count_level(g, next, stride, need - 1);
    }
  }
  return total;
}

// Sum over all start vertices u of the (r-1)-cliques among u's higher
// neighbours. Requires 2 <= r <= |G|.
Acc count_all(const Graph& g, unsigned r, Exec exec) {
  const VertexId n = g.order();
  const std::size_t stride = g.words_per_row();
  std::vector<Acc> partials;
#pragma omp parallel if (exec == Exec::Parallel)
  {
    std::vector<std::uint64_t> scratch(std::size_t(r - 1) * stride, 0);
    Acc local = 0;
#pragma omp for schedule(dynamic, 4) nowait
    for (VertexId u = 0; u < n; ++u) {
      const std::uint64_t* row = g.row(u);
      std::uint64_t* cand = scratch.data();
      const std::size_t uw = u >> 6;
      for (std::size_t i = 0; i < stride; ++i) cand[i] = i < uw ? 0 : row[i];
      cand[uw] &= (~0ULL << (u & 63)) << 1;  // keep bits strictly above u
      local += count_level(g, cand, stride, r - 1);
    }
#pragma omp critical
    partials.push_back(local);
  }
  Acc total = 0;
  for (Acc p : partials) total += p;
  return total;
}

// Count into caller-provided scratch of (r-2) rows; r >= 3, e validated.
Acc on_edge_into(const Graph& g, Edge e, unsigned r, std::uint64_t* scratch) {
  const std::size_t stride = g.words_per_row();
  const std::uint64_t* ru = g.row(e.u);
  const std::uint64_t* rv = g.row(e.v);
  for (std::size_t i = 0; i < stride; ++i) scratch[i] = ru[i] & rv[i];
  return count_level(g, scratch, stride, r - 2);
}

std::uint64_t narrow(Acc value, const char* what) {
  if (value > kMaxU64) throw std::overflow_error(what);
  return static_cast<std::uint64_t>(value);
}

}  // namespace

std::uint64_t count_cliques(const Graph& g, unsigned r, Exec exec) {
  if (r == 0) throw std::invalid_argument("count_cliques: r must be >= 1");
  const VertexId n = g.order();
  if (r > n) return 0;
  if (r == 1) return n;
  return narrow(count_all(g, r, exec), "count_cliques: count exceeds 64 bits");
}

std::uint64_t cliques_on_edge(const Graph& g, Edge e, unsigned r) {
  if (r < 2) throw std::invalid_argument("cliques_on_edge: r must be >= 2");
  if (!g.adjacent(e.u, e.v))
    throw std::invalid_argument("cliques_on_edge: not an edge");
  if (r == 2) return 1;
  std::vector<std::uint64_t> scratch(std::size_t(r - 2) * g.words_per_row());
  return narrow(on_edge_into(g, e, r, scratch.data()),
                "cliques_on_edge: count exceeds 64 bits");
}

std::vector<std::uint64_t> cliques_per_edge(const Graph& g,
                                            const std::vector<Edge>& edges,
                                            unsigned r, Exec exec) {
  if (r < 2) throw std::invalid_argument("cliques_per_edge: r must be >= 2");
  for (const Edge& e : edges)
    if (!g.adjacent(e.u, e.v))
      throw std::invalid_argument("cliques_per_edge: not an edge");
  std::vector<std::uint64_t> out(edges.size());
  if (r == 2) {
    std::fill(out.begin(), out.end(), 1);
    return out;
  }
  const std::size_t stride = g.words_per_row();
  std::atomic<bool> failed{false};
  std::exception_ptr err;
#pragma omp parallel if (exec == Exec::Parallel)
  {
    std::vector<std::uint64_t> scratch(std::size_t(r - 2) * stride, 0);
#pragma omp for schedule(dynamic, 16) nowait
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (failed.load(std::memory_order_relaxed)) continue;
      const Acc c = on_edge_into(g, edges[i], r, scratch.data());
      if (c > kMaxU64) {
#pragma omp critical
        {
          if (!failed.load(std::memory_order_relaxed)) {
            err = std::make_exception_ptr(std::overflow_error(
                "cliques_per_edge: count exceeds 64 bits"));
            failed.store(true, std::memory_order_relaxed);
          }
        }
        continue;
      }
      out[i] = static_cast<std::uint64_t>(c);
    }
  }
  if (failed.load()) std::rethrow_exception(err);
  return out;
}

JointReport joint_size(const Graph& g, unsigned r, Exec exec) {
  if (r < 2) throw std::invalid_argument("joint_size: r must be >= 2");
  const std::vector<Edge> edges = g.edges();
  JointReport report;
  if (edges.empty()) return report;
  const std::vector<std::uint64_t> counts = cliques_per_edge(g, edges, r, exec);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (counts[i] > report.size) {
      report.size = counts[i];
      report.witness = edges[i];
    }
  return report;
}

}  // namespace turan
