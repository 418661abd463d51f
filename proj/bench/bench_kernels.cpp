// Compares the serial and OpenMP-parallel paths of the clique kernels and
// the partition heuristics on seeded dense graphs, checking that both paths
// return identical results while timing them.

#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <string>

#include "turan/certifier.hpp"
#include "turan/cliques.hpp"
#include "turan/graph.hpp"

namespace {

using namespace turan;
using Clock = std::chrono::steady_clock;

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto start = Clock::now();
  fn();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool match) {
  std::printf("%-28s %12.2f %12.2f %8.2fx   %s\n", name, serial_ms,
              parallel_ms, parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              match ? "match" : "MISMATCH");
}

void bench_graph(const Graph& g, unsigned r, const std::string& label) {
  std::printf("\n%s (n=%u, m=%" PRIu64 ", r=%u)\n", label.c_str(), g.order(),
              g.edge_count(), r);
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms",
              "speedup");

  {
    std::uint64_t a = 0, b = 0;
    const double ts = time_ms([&] { a = count_cliques(g, r + 1, Exec::Serial); });
    const double tp =
        time_ms([&] { b = count_cliques(g, r + 1, Exec::Parallel); });
    report("count_cliques", ts, tp, a == b);
  }
  {
    JointReport a, b;
    const double ts = time_ms([&] { a = joint_size(g, r + 1, Exec::Serial); });
    const double tp =
        time_ms([&] { b = joint_size(g, r + 1, Exec::Parallel); });
    report("joint_size", ts, tp,
           a.size == b.size && a.witness == b.witness);
  }
  {
    PartiteCore a, b;
    const double ts =
        time_ms([&] { a = extract_partite_core(g, r, 8, Exec::Serial); });
    const double tp =
        time_ms([&] { b = extract_partite_core(g, r, 8, Exec::Parallel); });
    report("extract_partite_core", ts, tp,
           a.host_vertices == b.host_vertices && a.parts == b.parts);
  }
  {
    TuranEdit a, b;
    const double ts =
        time_ms([&] { a = edit_distance_heuristic(g, r, 8, Exec::Serial); });
    const double tp =
        time_ms([&] { b = edit_distance_heuristic(g, r, 8, Exec::Parallel); });
    report("edit_distance_heuristic", ts, tp,
           a.count == b.count && a.partition == b.partition);
  }
}

}  // namespace

int main() {
  bench_graph(Graph::random(120, 5500, 1), 3, "random dense");
  bench_graph(Graph::turan(150, 4), 4, "turan");
  bench_graph(Graph::random(80, 3000, 7), 2, "random very dense");
  return 0;
}
