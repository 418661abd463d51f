// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion is self-contained and uses fixed seeds so the run
// is reproducible.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "turan/certifier.hpp"
#include "turan/cliques.hpp"
#include "turan/graph.hpp"
#include "turan/multipartite.hpp"
#include "turan/numeric.hpp"
#include "turan/oracle.hpp"
#include "turan/pipeline.hpp"
#include "turan/reduction.hpp"
#include "turan/rng.hpp"

using namespace turan;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int index, const char* label, bool ok, double seconds) {
  std::printf("%s criterion %d: %s (%.2f s)\n", ok ? "PASS" : "FAIL", index,
              label, seconds);
  if (!ok) ++g_failures;
}

struct Fail {
  bool ok = true;
  void expect(bool condition, const char* what) {
    if (!condition && ok) {
      std::printf("  first failure: %s\n", what);
      ok = false;
    } else if (!condition) {
      ok = false;
    }
  }
};

std::vector<Graph> seeded_corpus(std::uint64_t seed, int count, VertexId n_lo,
                                 VertexId n_hi) {
  std::vector<Graph> graphs;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    const VertexId n =
        n_lo + static_cast<VertexId>(bounded(rng, n_hi - n_lo + 1));
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t m = bounded(rng, pairs + 1);
    graphs.push_back(Graph::random(n, m, rng()));
  }
  return graphs;
}

// 1. Fast clique kernels equal the subset-enumeration reference on 200
//    seeded graphs with n <= 10, for r in {2,3,4}.
bool criterion1() {
  Fail f;
  const std::vector<Graph> corpus = seeded_corpus(101, 200, 4, 10);
  for (const Graph& g : corpus) {
    for (unsigned r = 2; r <= 4; ++r) {
      f.expect(count_cliques(g, r) == oracle::count_cliques(g, r),
               "count_cliques differs from the enumeration reference");
      const JointReport fast = joint_size(g, r);
      const JointReport ref = oracle::joint_size(g, r);
      f.expect(fast.size == ref.size && fast.witness == ref.witness,
               "joint_size differs from the enumeration reference");
      for (const Edge& e : g.edges())
        f.expect(cliques_on_edge(g, e, r) == oracle::cliques_on_edge(g, e, r),
                 "cliques_on_edge differs from the enumeration reference");
    }
  }
  return f.ok;
}

// 2. Handshake identity: per-edge counts sum to C(r,2) times the global
//    count on the same corpus.
bool criterion2() {
  Fail f;
  const std::vector<Graph> corpus = seeded_corpus(101, 200, 4, 10);
  for (const Graph& g : corpus) {
    for (unsigned r = 2; r <= 4; ++r) {
      std::uint64_t sum = 0;
      for (const Edge& e : g.edges()) sum += cliques_on_edge(g, e, r);
      const std::uint64_t pairs = static_cast<std::uint64_t>(r) * (r - 1) / 2;
      f.expect(sum == pairs * count_cliques(g, r), "handshake identity");
    }
  }
  return f.ok;
}

// 3. Reduction-loop contract on 100 seeded graphs with n <= 25, r in {2,3},
//    thresholds {0,1,2}; plus the K_4 fixture with trace sum exactly 4.
bool criterion3() {
  Fail f;
  std::mt19937_64 rng(303);
  for (int i = 0; i < 100; ++i) {
    const VertexId n = 10 + static_cast<VertexId>(bounded(rng, 16));
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t m = bounded(rng, pairs + 1);
    const Graph g = Graph::random(n, m, rng());
    const unsigned r = 2 + static_cast<unsigned>(bounded(rng, 2));
    const std::uint64_t threshold = static_cast<std::uint64_t>(i % 3);

    const ReductionResult res =
        run_procedure(g, r, Rational(static_cast<int>(threshold)));
    f.expect(joint_size(res.graph, r + 1).size <= threshold,
             "output joint size above threshold");
    f.expect(res.trace.sum() <= count_cliques(g, r + 1),
             "trace sum exceeds the input clique count");
    std::vector<Edge> removed;
    for (const RemovalStep& step : res.trace.steps)
      removed.push_back(step.edge);
    f.expect(g.with_edits({}, removed) == res.graph,
             "replaying the trace does not reproduce the output");
  }
  const ReductionResult k4 = run_procedure(Graph::turan(4, 4), 2, Rational(0));
  f.expect(k4.trace.sum() == 4, "K_4 trace sum is not 4");
  return f.ok;
}

// 4. Exact multipartite finder agrees with the disjoint-assignment
//    reference on 50 seeded instances (n <= 12, total class size <= 8);
//    greedy successes verify; the 5-cycle refutes (1,1,1).
bool criterion4() {
  Fail f;
  std::mt19937_64 rng(404);
  int instances = 0;
  while (instances < 50) {
    const VertexId n = 6 + static_cast<VertexId>(bounded(rng, 7));
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const std::uint64_t m = pairs / 2 + bounded(rng, pairs / 2 + 1);
    const Graph g = Graph::random(n, m, rng());
    const SizeProfile profile{
        static_cast<VertexId>(1 + bounded(rng, 2)),
        static_cast<VertexId>(1 + bounded(rng, 2)),
        static_cast<VertexId>(1 + bounded(rng, 3))};
    if (profile.total() > 8 || profile.total() > n) continue;
    ++instances;

    const SearchOutcome fast = find_multipartite_exact(g, profile);
    const std::optional<MultipartiteWitness> ref =
        oracle::find_multipartite(g, profile);
    f.expect(fast.status != SearchStatus::BudgetExhausted,
             "budget exhausted at reference scale");
    f.expect((fast.status == SearchStatus::Found) == ref.has_value(),
             "exact finder disagrees with the reference");
    if (fast.status == SearchStatus::Found)
      f.expect(verify_witness(g, *fast.witness, profile).ok,
               "exact witness fails verification");
    if (const std::optional<MultipartiteWitness> greedy =
            find_multipartite_greedy(g, profile)) {
      f.expect(verify_witness(g, *greedy, profile).ok,
               "greedy witness fails verification");
      f.expect(ref.has_value(), "greedy found a witness the reference denies");
    }
  }
  const std::vector<Edge> c5{Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(3, 4),
                             Edge(0, 4)};
  const SizeProfile triangle{2, 1, 1};
  f.expect(find_multipartite_exact(Graph::from_edges(5, c5), triangle)
                   .status == SearchStatus::NoneExists,
           "5-cycle should refute (1,1,1)");
  return f.ok;
}

// 5. Edit distance: exact equals the enumeration reference for n <= 8 (50
//    instances); heuristic never beats exact; Turan inputs cost 0; K_4 at
//    r=2 costs exactly 2.
bool criterion5() {
  Fail f;
  std::mt19937_64 rng(505);
  for (int i = 0; i < 50; ++i) {
    const VertexId n = 4 + static_cast<VertexId>(bounded(rng, 5));
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    const Graph g = Graph::random(n, bounded(rng, pairs + 1), rng());
    const unsigned r = 2 + static_cast<unsigned>(bounded(rng, 2));

    const std::optional<TuranEdit> exact = edit_distance_exact(g, r);
    if (!exact.has_value()) {
      f.expect(false, "exact edit distance refused a reference-scale input");
      continue;
    }
    const TuranEdit ref = oracle::edit_distance(g, r);
    f.expect(exact->count == ref.count,
             "exact edit distance differs from the reference");
    f.expect(exact->partition == ref.partition,
             "exact edit partition differs from the reference tie-break");
    f.expect(edit_distance_heuristic(g, r).count >= exact->count,
             "heuristic beat the exact minimum");
  }
  for (unsigned r = 2; r <= 4; ++r)
    for (VertexId n = r; n <= 10; ++n) {
      const std::optional<TuranEdit> e =
          edit_distance_exact(Graph::turan(n, r), r);
      f.expect(e.has_value() && e->count == 0,
               "Turan graph has nonzero edit distance");
    }
  const std::optional<TuranEdit> k4 =
      edit_distance_exact(Graph::turan(4, 4), 2);
  f.expect(k4.has_value() && k4->count == 2, "K_4 edit distance is not 2");
  return f.ok;
}

// 6. End-to-end dichotomy in relaxed mode: planted edits are recovered with
//    certificates that verify; a pinned dense fixture yields a multipartite
//    witness confirmed by the reference.
bool criterion6() {
  Fail f;

  // Small fixtures: certificate count equals the reference exact distance.
  for (std::uint64_t k = 1; k <= 3; ++k) {
    const Graph g12 = planted_turan(12, 3, k, 2000 + k);
    const Params p12{3, Rational(1, 10), Rational(1, 100), Mode::Relaxed, {}};
    const Certificate cert = analyze(g12, p12);
    const auto* payload = std::get_if<TuranEditPayload>(&cert.payload);
    f.expect(payload != nullptr, "planted 12-vertex fixture not an edit claim");
    if (payload) {
      f.expect(payload->edit.count == oracle::edit_distance(g12, 3).count,
               "12-vertex certificate count differs from the reference");
      f.expect(verify_certificate(g12, cert).ok,
               "12-vertex certificate fails verification");
    }

    const Graph g10 = planted_turan(10, 2, k, 3000 + k);
    const Params p10{2, Rational(1, 10), Rational(1, 100), Mode::Relaxed, {}};
    const Certificate cert10 = analyze(g10, p10);
    const auto* payload10 = std::get_if<TuranEditPayload>(&cert10.payload);
    f.expect(payload10 != nullptr,
             "planted 10-vertex fixture not an edit claim");
    if (payload10) {
      f.expect(payload10->edit.count == oracle::edit_distance(g10, 2).count,
               "10-vertex certificate count differs from the reference");
      f.expect(verify_certificate(g10, cert10).ok,
               "10-vertex certificate fails verification");
    }
  }

  // Stability at n = 30: k planted flips cost at most 2k edits.
  for (std::uint64_t k = 1; k <= 10; ++k) {
    const Graph g = planted_turan(30, 3, k, 1000 + k);
    const Params p{3, Rational(1, 10), Rational(1, 100), Mode::Relaxed, {}};
    const Certificate cert = analyze(g, p);
    const auto* payload = std::get_if<TuranEditPayload>(&cert.payload);
    f.expect(payload != nullptr, "planted 30-vertex fixture not an edit claim");
    if (payload) {
      f.expect(payload->edit.count <= 2 * k,
               "30-vertex certificate count exceeds twice the flip count");
      f.expect(verify_certificate(g, cert).ok,
               "30-vertex certificate fails verification");
    }
  }

  // Planted witness: the pinned dense fixture contains K(2,2,2) per the
  // reference, and the pipeline certifies it.
  const Graph dense = Graph::random(24, 262, 5);
  const SizeProfile octa{2, 2, 2};
  f.expect(oracle::find_multipartite(dense, octa).has_value(),
           "reference denies the pinned dense fixture its witness");
  Params pd{2, Rational(1, 100), Rational(1, 1000), Mode::Relaxed, {}};
  pd.overrides.profile = octa;
  const Certificate cert = analyze(dense, pd);
  f.expect(std::holds_alternative<MultipartitePayload>(cert.payload),
           "dense fixture did not produce a multipartite claim");
  f.expect(verify_certificate(dense, cert).ok,
           "dense fixture certificate fails verification");
  return f.ok;
}

// 7. High-precision arithmetic chain over 1000 admissible parameter
//    triples, plus closed-form spot checks.
bool criterion7() {
  Fail f;
  for (unsigned r = 2; r <= 3; ++r) {
    const Rational eps_cap(1, ipow(r, 24));
    const Rational c_cap(1, ipow(r, 3ULL * (r + 14) * (r + 1)));
    const Real degree_budget = to_real(Rational(1, 8 * ipow(r, 8)));
    const unsigned exponent = 3 * r + 3;
    for (int i = 0; i < 500; ++i) {
      const Rational u(i + 1, 501);
      const Rational w((i * 37) % 499 + 1, 500);
      const Rational eps = u * eps_cap;
      const Rational c = w * c_cap;

      const Real th = theta(c, r);
      const Real eps_r = to_real(eps);
      f.expect(eps_r + th < degree_budget,
               "eps + theta reaches the degree-slack budget");

      const Real lhs =
          th + (2 * static_cast<int>(r) * static_cast<int>(r) -
                static_cast<int>(r)) *
                   sqrt(2 * (eps_r + th));
      const Real rhs =
          pow(eps_r, Real(1) / 3) + pow(to_real(c), Real(1) / exponent);
      f.expect(lhs < rhs, "edit-count chain inequality fails");
    }
  }
  f.expect(abs(theta(Rational(1), 2) - Real(256)) < Real("1e-90"),
           "theta(1,2) spot check");
  const Real bound = theorem_bound(10, 3, to_real(Rational(1, 1000000)),
                                   to_real(Rational(1, Int("1000000000000"))));
  f.expect(abs(bound - Real(11)) < Real("1e-80"), "bound spot check");
  const SizeProfile fact2 = fact2_parameters(21, 2, Real(1));
  f.expect(fact2.r_small == 1 && fact2.s == 3 && fact2.t == 1,
           "class-size spot check");
  return f.ok;
}

// 8. Determinism: repeated analysis of every end-to-end fixture produces
//    byte-identical certificate JSON.
bool criterion8() {
  Fail f;
  std::vector<std::pair<Graph, Params>> fixtures;
  for (std::uint64_t k = 1; k <= 10; ++k)
    fixtures.emplace_back(
        planted_turan(30, 3, k, 1000 + k),
        Params{3, Rational(1, 10), Rational(1, 100), Mode::Relaxed, {}});
  for (std::uint64_t k = 1; k <= 3; ++k) {
    fixtures.emplace_back(
        planted_turan(12, 3, k, 2000 + k),
        Params{3, Rational(1, 10), Rational(1, 100), Mode::Relaxed, {}});
    fixtures.emplace_back(
        planted_turan(10, 2, k, 3000 + k),
        Params{2, Rational(1, 10), Rational(1, 100), Mode::Relaxed, {}});
  }
  {
    Params pd{2, Rational(1, 100), Rational(1, 1000), Mode::Relaxed, {}};
    pd.overrides.profile = SizeProfile{2, 2, 2};
    fixtures.emplace_back(Graph::random(24, 262, 5), pd);
  }
  fixtures.emplace_back(
      Graph::random(18, 60, 77),
      Params{2, Rational(1, 100), Rational(1, 1000), Mode::Relaxed, {}});
  fixtures.emplace_back(
      Graph(12), Params{2, Rational(1, 100), Rational(1, 1000), Mode::Relaxed,
                        {}});

  for (const auto& [g, p] : fixtures) {
    const std::string first = certificate_to_json(analyze(g, p));
    const std::string second = certificate_to_json(analyze(g, p));
    f.expect(first == second, "repeated analysis is not byte-identical");
  }
  return f.ok;
}

template <typename Fn>
void run(int index, const char* label, Fn&& fn, double limit_seconds = 0) {
  const auto start = Clock::now();
  bool ok = fn();
  const double seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  if (ok && limit_seconds > 0 && seconds > limit_seconds) {
    std::printf("  runtime %.2f s exceeds the %.0f s limit\n", seconds,
                limit_seconds);
    ok = false;
  }
  report(index, label, ok, seconds);
}

}  // namespace

int main() {
  run(1, "clique kernels match the enumeration reference", criterion1, 10);
  run(2, "per-edge counts satisfy the handshake identity", criterion2);
  run(3, "reduction loop honors threshold, accounting, and replay",
      criterion3);
  run(4, "multipartite finders agree with the reference and verify",
      criterion4);
  run(5, "edit distances match the reference and closed forms", criterion5);
  run(6, "end-to-end certificates recover planted structure", criterion6, 60);
  run(7, "high-precision arithmetic chain holds with spot checks",
      criterion7);
  run(8, "certificate JSON is byte-identical across repeated runs",
      criterion8);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
