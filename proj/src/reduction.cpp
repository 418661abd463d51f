#include "turan/reduction.hpp"

#include <sstream>
#include <stdexcept>

namespace turan {

std::uint64_t RemovalTrace::sum() const {
  std::uint64_t total = 0;
  for (const RemovalStep& s : steps)
    total = checked_add(total, s.cliques_at_removal);
  return total;
}

std::string RemovalTrace::to_log() const {
  std::ostringstream out;
  for (const RemovalStep& s : steps)
    out << s.edge.u << ' ' << s.edge.v << ' ' << s.cliques_at_removal << '\n';
  return out.str();
}

Rational paper_threshold(VertexId n, unsigned r) {
  if (r < 2) throw std::invalid_argument("paper_threshold: r must be >= 2");
  return Rational(ipow(n, r - 1), ipow(r, r + 6));
}

Real theta(const Rational& c, unsigned r) {
  if (r < 2) throw std::invalid_argument("theta: r must be >= 2");
  if (c < 0) throw std::domain_error("theta: c must be >= 0");
  const Real root = pow(to_real(c), Real(1) / (r + 1));
  return root * to_real(Rational(ipow(r, r + 6)));
}

ReductionResult run_procedure(const Graph& g, unsigned r,
                              const Rational& threshold, Exec exec) {
  if (r < 2) throw std::invalid_argument("run_procedure: r must be >= 2");
  if (threshold < 0)
    throw std::invalid_argument("run_procedure: threshold must be >= 0");
  ReductionResult result{g, RemovalTrace{{}, threshold}};
  for (;;) {
    const JointReport js = joint_size(result.graph, r + 1, exec);
    if (Rational(js.size) <= threshold) break;
    result.graph = result.graph.with_edge_removed(*js.witness);
    result.trace.steps.push_back({*js.witness, js.size});
  }
  return result;
}

}  // namespace turan
