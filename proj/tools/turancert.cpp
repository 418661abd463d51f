// turancert — generate graphs, run the dichotomy pipeline, verify
// certificates, query brute-force oracles, and sweep parameter grids.
//
// File formats:
//   graphs        edge-list text: "n m" then one "u v" line per edge
//   certificates  JSON written by analyze, re-read by verify
//   trace logs    one "u v count" line per removed edge
//   sweep output  CSV with columns n,m,trace_len,trace_sum,outcome,
//                 edit_count,bound

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "turan/certifier.hpp"
#include "turan/cliques.hpp"
#include "turan/graph.hpp"
#include "turan/multipartite.hpp"
#include "turan/numeric.hpp"
#include "turan/oracle.hpp"
#include "turan/pipeline.hpp"
#include "turan/reduction.hpp"
#include "turan/rng.hpp"

namespace {

using namespace turan;

std::vector<std::uint64_t> parse_u64_list(const std::string& text,
                                          const char* what) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty())
      throw std::invalid_argument(std::string(what) + ": empty list entry");
    std::size_t used = 0;
    const unsigned long long value = std::stoull(item, &used);
    if (used != item.size())
      throw std::invalid_argument(std::string(what) + ": bad entry '" + item +
                                  "'");
    out.push_back(value);
  }
  if (out.empty())
    throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

std::vector<VertexId> parse_size_list(const std::string& text,
                                      const char* what) {
  std::vector<VertexId> out;
  for (std::uint64_t v : parse_u64_list(text, what)) {
    if (v > UINT32_MAX)
      throw std::invalid_argument(std::string(what) + ": entry too large");
    out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

// "s,s,...,s,t": all classes before the last share one size.
SizeProfile profile_from_csv(const std::string& text) {
  const std::vector<VertexId> sizes = parse_size_list(text, "profile");
  if (sizes.size() < 2)
    throw std::invalid_argument("profile: need at least two class sizes");
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i)
    if (sizes[i] != sizes[0])
      throw std::invalid_argument(
          "profile: all classes before the last must share one size");
  SizeProfile p;
  p.r_small = static_cast<VertexId>(sizes.size() - 1);
  p.s = sizes[0];
  p.t = sizes.back();
  return p;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* outcome_name(const Certificate& cert) {
  if (std::holds_alternative<MultipartitePayload>(cert.payload))
    return "multipartite";
  if (std::holds_alternative<TuranEditPayload>(cert.payload))
    return "turan_edit";
  return "inconclusive";
}

struct GenArgs {
  std::string kind;
  VertexId n = 0;
  unsigned r = 2;
  std::uint64_t m = 0;
  std::string sizes;
  std::uint64_t flips = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen(const GenArgs& a) {
  Graph g;
  if (a.kind == "turan") {
    g = Graph::turan(a.n, a.r);
  } else if (a.kind == "multipartite") {
    if (a.sizes.empty())
      throw std::invalid_argument("gen --kind multipartite requires --sizes");
    const std::vector<VertexId> sizes = parse_size_list(a.sizes, "sizes");
    g = Graph::complete_multipartite(sizes);
  } else if (a.kind == "random") {
    g = Graph::random(a.n, a.m, a.seed);
  } else {  // planted
    g = planted_turan(a.n, a.r, a.flips, a.seed);
  }
  write_edge_list_file(g, a.out);
  std::cout << "wrote " << a.out << ": n=" << g.order()
            << " m=" << g.edge_count() << "\n";
  return 0;
}

struct AnalyzeArgs {
  std::string graph;
  unsigned r = 2;
  std::string eps;
  std::string c;
  std::string mode;
  std::string threshold;
  std::string profile;
  std::string bound;
  std::string trace;
  std::string out;
};

int run_analyze(const AnalyzeArgs& a) {
  const Graph g = read_edge_list_file(a.graph);
  Params params;
  params.r = a.r;
  params.eps = parse_rational(a.eps);
  params.c = parse_rational(a.c);
  params.mode = a.mode == "paper" ? Mode::Paper : Mode::Relaxed;
  if (!a.threshold.empty())
    params.overrides.threshold = parse_rational(a.threshold);
  if (!a.profile.empty())
    params.overrides.profile = profile_from_csv(a.profile);
  if (!a.bound.empty())
    params.overrides.bound_multiplier = parse_rational(a.bound);

  RemovalTrace trace;
  const Certificate cert = analyze(g, params, &trace);
  write_text_file(a.out, certificate_to_json(cert));
  if (!a.trace.empty()) write_text_file(a.trace, trace.to_log());

  std::cout << "outcome: " << outcome_name(cert);
  if (const auto* ip = std::get_if<InconclusivePayload>(&cert.payload))
    std::cout << " (" << ip->reason << ")";
  else if (const auto* tp = std::get_if<TuranEditPayload>(&cert.payload))
    std::cout << " (count " << tp->edit.count << ")";
  std::cout << "\n";
  return 0;
}

struct VerifyArgs {
  std::string graph;
  std::string cert;
};

int run_verify(const VerifyArgs& a) {
  const Graph g = read_edge_list_file(a.graph);
  const Certificate cert = certificate_from_json(read_text_file(a.cert));
  const CertificateCheck check = verify_certificate(g, cert);
  if (check.ok) {
    std::cout << "valid\n";
    return 0;
  }
  std::cout << "invalid: " << check.reason << "\n";
  return 1;
}

struct OracleArgs {
  std::string graph;
  std::string op;
  unsigned r = 2;
  std::string profile;
};

int run_oracle(const OracleArgs& a) {
  const Graph g = read_edge_list_file(a.graph);
  if (a.op == "kcliques") {
    std::cout << oracle::count_cliques(g, a.r) << "\n";
  } else if (a.op == "js") {
    const JointReport report = oracle::joint_size(g, a.r);
    std::cout << report.size;
    if (report.witness)
      std::cout << " " << report.witness->u << " " << report.witness->v;
    std::cout << "\n";
  } else if (a.op == "editdist") {
    const TuranEdit edit = oracle::edit_distance(g, a.r);
    std::cout << edit.count << "\n";
  } else {  // findkpartite
    if (a.profile.empty())
      throw std::invalid_argument("oracle --op findkpartite requires --profile");
    const SizeProfile profile = profile_from_csv(a.profile);
    const std::optional<MultipartiteWitness> witness =
        oracle::find_multipartite(g, profile);
    if (witness)
      std::cout << witness->to_text();
    else
      std::cout << "none\n";
  }
  return 0;
}

struct SweepArgs {
  unsigned r = 2;
  std::string n_list;
  std::string density_list;
  std::uint64_t seed = 0;
  std::string eps = "1/100";
  std::string c = "1/1000";
  std::string out;
};

int run_sweep(const SweepArgs& a) {
  const std::vector<std::uint64_t> ns = parse_u64_list(a.n_list, "n-list");
  std::vector<Rational> densities;
  {
    std::stringstream ss(a.density_list);
    std::string item;
    while (std::getline(ss, item, ','))
      densities.push_back(parse_rational(item));
    if (densities.empty())
      throw std::invalid_argument("density-list: empty list");
  }

  Params params;
  params.r = a.r;
  params.eps = parse_rational(a.eps);
  params.c = parse_rational(a.c);
  params.mode = Mode::Relaxed;

  std::ostringstream csv;
  csv << "n,m,trace_len,trace_sum,outcome,edit_count,bound\n";
  std::uint64_t row = 0;
  for (std::uint64_t n64 : ns) {
    if (n64 > UINT32_MAX) throw std::invalid_argument("n-list: entry too large");
    const VertexId n = static_cast<VertexId>(n64);
    const std::uint64_t pairs =
        static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    for (const Rational& density : densities) {
      // Edge count: density * C(n,2), rounded half up in exact arithmetic.
      Int m_int = floor_rational(density * Rational(pairs) + Rational(1, 2));
      if (m_int < 0) m_int = 0;
      if (m_int > Int(pairs)) m_int = Int(pairs);
      const std::uint64_t m = m_int.convert_to<std::uint64_t>();

      const Graph g = Graph::random(n, m, splitmix64(a.seed + row));
      const Certificate cert = analyze(g, params);

      csv << n << "," << m << "," << cert.trace.length << ","
          << cert.trace.sum << "," << outcome_name(cert) << ",";
      if (const auto* tp = std::get_if<TuranEditPayload>(&cert.payload))
        csv << tp->edit.count << "," << format_real(tp->bound);
      else
        csv << ",";
      csv << "\n";
      ++row;
    }
  }
  write_text_file(a.out, csv.str());
  std::cout << "wrote " << a.out << ": " << row << " rows\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "turancert: clique-threshold reduction, complete multipartite "
      "witnesses, and edit certificates against the Turan graph"};
  app.require_subcommand(1);

  GenArgs gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an edge-list graph");
  gen_cmd->add_option("--kind", gen.kind, "turan|multipartite|random|planted")
      ->required()
      ->check(CLI::IsMember({"turan", "multipartite", "random", "planted"}));
  gen_cmd->add_option("--n", gen.n, "vertex count");
  gen_cmd->add_option("--r", gen.r, "part count (turan, planted)");
  gen_cmd->add_option("--m", gen.m, "edge count (random)");
  gen_cmd->add_option("--sizes", gen.sizes,
                      "comma-separated part sizes (multipartite)");
  gen_cmd->add_option("--flips", gen.flips,
                      "number of toggled vertex pairs (planted)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed (random, planted)");
  gen_cmd->add_option("--out", gen.out, "output edge-list path")->required();

  AnalyzeArgs an;
  CLI::App* an_cmd =
      app.add_subcommand("analyze", "Run the dichotomy pipeline");
  an_cmd->add_option("--graph", an.graph, "input edge-list path")->required();
  an_cmd->add_option("--r", an.r, "part count (>= 2)")->required();
  an_cmd->add_option("--eps", an.eps, "density slack (rational or decimal)")
      ->required();
  an_cmd->add_option("--c", an.c, "density parameter (rational or decimal)")
      ->required();
  an_cmd->add_option("--mode", an.mode, "paper|relaxed")
      ->required()
      ->check(CLI::IsMember({"paper", "relaxed"}));
  an_cmd->add_option("--threshold", an.threshold,
                     "removal-threshold override (relaxed mode)");
  an_cmd->add_option("--profile", an.profile,
                     "witness-profile override s,...,s,t (relaxed mode)");
  an_cmd->add_option("--bound", an.bound,
                     "edit-bound multiplier override (relaxed mode)");
  an_cmd->add_option("--trace", an.trace, "also write the removal trace log");
  an_cmd->add_option("--out", an.out, "certificate JSON path")->required();

  VerifyArgs ver;
  CLI::App* ver_cmd = app.add_subcommand(
      "verify", "Re-check a certificate against a graph (exit 0 iff valid)");
  ver_cmd->add_option("--graph", ver.graph, "input edge-list path")->required();
  ver_cmd->add_option("--cert", ver.cert, "certificate JSON path")->required();

  OracleArgs orc;
  CLI::App* orc_cmd = app.add_subcommand(
      "oracle", "Brute-force reference computations for cross-checking");
  orc_cmd->add_option("--graph", orc.graph, "input edge-list path")->required();
  orc_cmd->add_option("--op", orc.op, "kcliques|js|editdist|findkpartite")
      ->required()
      ->check(CLI::IsMember({"kcliques", "js", "editdist", "findkpartite"}));
  orc_cmd->add_option(
      "--r", orc.r, "clique order (kcliques, js) or part count (editdist)");
  orc_cmd->add_option("--profile", orc.profile,
                      "class sizes s,...,s,t (findkpartite)");

  SweepArgs sw;
  CLI::App* sw_cmd = app.add_subcommand(
      "sweep", "Analyze a seeded grid of random graphs, write a CSV map");
  sw_cmd->add_option("--r", sw.r, "part count (>= 2)")->required();
  sw_cmd->add_option("--n-list", sw.n_list, "comma-separated vertex counts")
      ->required();
  sw_cmd->add_option("--density-list", sw.density_list,
                     "comma-separated edge densities in [0,1]")
      ->required();
  sw_cmd->add_option("--seed", sw.seed, "base RNG seed");
  sw_cmd->add_option("--eps", sw.eps, "density slack (default 1/100)");
  sw_cmd->add_option("--c", sw.c, "density parameter (default 1/1000)");
  sw_cmd->add_option("--out", sw.out, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (an_cmd->parsed()) return run_analyze(an);
    if (ver_cmd->parsed()) return run_verify(ver);
    if (orc_cmd->parsed()) return run_oracle(orc);
    if (sw_cmd->parsed()) return run_sweep(sw);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
