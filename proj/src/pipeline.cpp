#include "turan/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace turan {

namespace {

using ojson = nlohmann::ordered_json;

Certificate fail(Certificate cert, std::string reason,
                 std::vector<std::pair<std::string, std::string>> diag = {}) {
  cert.payload = InconclusivePayload{std::move(reason), std::move(diag)};
  return cert;
}

// Paper-mode parameter gate; returns the violated inequality, if any.
std::optional<std::string> paper_gate(VertexId n, const Params& p) {
  if (p.overrides.threshold || p.overrides.profile ||
      p.overrides.bound_multiplier)
    return "overrides are not permitted in paper mode";
  if (!(p.eps > 0)) return "eps <= 0";
  if (!(p.eps < Rational(1, ipow(p.r, 24)))) return "eps >= r^-24";
  const std::uint64_t expo =
      3ULL * (p.r + 14ULL) * (p.r + 1ULL);  // 3(r+14)(r+1)
  if (!(p.c < Rational(1, ipow(p.r, expo)))) return "c >= r^-(3(r+14)(r+1))";
  if (n < 2 || !(to_real(p.c) > Real(1) / log(Real(n)))) return "c <= 1/ln n";
  return std::nullopt;
}

// Grows the trimmed parts into a partition of all vertices with the Turan
// size profile: unassigned vertices in ascending id order each go to the
// part (smallest index on ties, capacities respected) that adds the fewest
// edits — intra edges to already-placed same-part vertices plus missing
// cross pairs to already-placed other-part vertices.
std::vector<std::vector<VertexId>> extend_partition(
    const Graph& g, const std::vector<std::vector<VertexId>>& parts,
    unsigned r) {
  const VertexId n = g.order();
  const std::vector<VertexId> cap = turan_part_sizes(n, r);
  std::vector<unsigned> assign(n, r);
  std::vector<VertexId> size(r, 0);
  for (unsigned p = 0; p < parts.size(); ++p)
    for (VertexId v : parts[p]) {
      assign[v] = p;
      ++size[p];
    }
  for (VertexId v = 0; v < n; ++v) {
    if (assign[v] != r) continue;
    unsigned best = r;
    std::uint64_t best_cost = UINT64_MAX;
    for (unsigned p = 0; p < r; ++p) {
      if (size[p] >= cap[p]) continue;
      std::uint64_t cost = 0;
      for (VertexId u = 0; u < n; ++u) {
        if (u == v || assign[u] == r) continue;
        const bool adj = g.adjacent(u, v);
        if (assign[u] == p)
          cost += adj ? 1 : 0;
        else
          cost += adj ? 0 : 1;
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = p;
      }
    }
    assign[v] = best;
    ++size[best];
  }
  std::vector<std::vector<VertexId>> out(r);
  for (VertexId v = 0; v < n; ++v) out[assign[v]].push_back(v);
  return out;
}

std::string u64_str(std::uint64_t x) { return std::to_string(x); }

}  // namespace

HypothesisReport check_hypothesis(const Graph& g, unsigned r,
                                  const Rational& eps) {
  if (r == 0)
    throw std::invalid_argument("check_hypothesis: r must be >= 1");
  HypothesisReport report;
  report.checked = true;
  report.edges = g.edge_count();
  const Int n2 = Int(g.order()) * Int(g.order());
  const Rational frac = Rational(1) - Rational(1, r) - eps;
  report.threshold = ceil_rational(frac * Rational(n2, 2));
  report.margin = Int(report.edges) - report.threshold;
  report.holds = report.margin >= 0;
  return report;
}

namespace {

Certificate analyze_impl(const Graph& g, const Params& params,
                         RemovalTrace* trace_out) {
  Certificate cert;
  cert.params = params;

  if (params.r < 2) return fail(cert, "invalid parameters: r must be >= 2");
  if (params.eps < 0)
    return fail(cert, "invalid parameters: eps must be >= 0");
  if (params.c < 0) return fail(cert, "invalid parameters: c must be >= 0");
  if (params.overrides.threshold && *params.overrides.threshold < 0)
    return fail(cert, "invalid parameters: threshold override must be >= 0");
  if (params.overrides.bound_multiplier &&
      !(*params.overrides.bound_multiplier > 0))
    return fail(cert,
                "invalid parameters: bound multiplier override must be > 0");
  if (params.overrides.profile) {
    const SizeProfile& prof = *params.overrides.profile;
    if (prof.r_small < 1 || prof.s < 1 || prof.t < 1)
      return fail(cert, "invalid parameters: profile sizes must be >= 1");
    if (prof.classes() != params.r + 1)
      return fail(cert,
                  "invalid parameters: profile must have r + 1 classes");
  }

  const VertexId n = g.order();

  if (params.mode == Mode::Paper) {
    if (auto violated = paper_gate(n, params))
      return fail(cert, "parameter range violated: " + *violated);
  }

  cert.hypothesis = check_hypothesis(g, params.r, params.eps);
  if (!cert.hypothesis.holds)
    return fail(cert, "hypothesis violated",
                {{"edges", u64_str(cert.hypothesis.edges)},
                 {"threshold", format_rational(Rational(cert.hypothesis.threshold))}});

  // Reduction loop.
  const Rational threshold = params.overrides.threshold
                                 ? *params.overrides.threshold
                                 : paper_threshold(n, params.r);
  const ReductionResult reduction = run_procedure(g, params.r, threshold);
  if (trace_out) *trace_out = reduction.trace;
  cert.trace.threshold = threshold;
  cert.trace.length = reduction.trace.steps.size();
  cert.trace.sum = reduction.trace.sum();

  // Case split.
  const Real th = theta(params.c, params.r);
  bool branch_a;
  if (params.mode == Mode::Paper) {
    // Removed-edge count against ceil(theta n^2), the product ceiled in
    // high precision.
    const Int removed_target = ceil_real(th * Real(n) * Real(n));
    branch_a = Int(cert.trace.length) >= removed_target;
  } else {
    // Destroyed-clique total against c^{1/(r+1)} n^{r+1}.
    const Real clique_target =
        pow(to_real(params.c), Real(1) / (params.r + 1)) *
        to_real(Rational(ipow(n, params.r + 1)));
    branch_a = Real(cert.trace.sum) > clique_target;
  }

  if (branch_a) {
    cert.trace.branch = "a";
    SizeProfile profile;
    if (params.overrides.profile) {
      profile = *params.overrides.profile;
    } else {
      try {
        profile = theorem1_profile(n, params.r, to_real(params.c));
      } catch (const std::exception& e) {
        return fail(cert, "condition (a): profile construction failed",
                    {{"error", e.what()}});
      }
    }
    // The witness certifies the input graph, so the search runs on it, not
    // on the reduced graph.
    const SearchOutcome found =
        find_multipartite_exact(g, profile, kDefaultSearchBudget);
    if (found.status == SearchStatus::Found) {
      cert.payload = MultipartitePayload{profile, *found.witness};
    } else if (found.status == SearchStatus::BudgetExhausted) {
      const std::optional<MultipartiteWitness> greedy =
          find_multipartite_greedy(g, profile);
      if (greedy) {
        cert.payload = MultipartitePayload{profile, *greedy};
      } else {
        return fail(cert,
                    "condition (a): search budget exhausted and greedy "
                    "search found no witness",
                    {{"nodes", u64_str(found.nodes)}});
      }
    } else {
      return fail(cert,
                  "condition (a): no witness with the requested profile",
                  {{"nodes", u64_str(found.nodes)}});
    }
  } else {
    cert.trace.branch = "b";
    const PartiteCore core = extract_partite_core(reduction.graph, params.r);
    VertexId min_part = n;
    for (const std::vector<VertexId>& part : core.parts)
      min_part = std::min(min_part, static_cast<VertexId>(part.size()));

    // Trim target: the proof's ceil((1/r - 2(r-1) sqrt(2(eps+theta))) n) in
    // paper mode; in relaxed mode the formula is clamped into what the core
    // and the Turan capacities allow, or skipped (= keep whole parts) when
    // it degenerates below 1.
    const Real formula =
        (Real(1) / params.r -
         2 * (static_cast<int>(params.r) - 1) * sqrt(2 * (to_real(params.eps) + th))) *
        n;
    const Int f = ceil_real(formula);
    const VertexId floor_cap = n / params.r;
    VertexId target;
    if (params.mode == Mode::Paper) {
      if (f < 1 || f > Int(min_part) || f > Int(floor_cap))
        return fail(cert, "condition (b): trim target out of range",
                    {{"target", format_rational(Rational(f))},
                     {"min_part", u64_str(min_part)}});
      target = f.convert_to<VertexId>();
    } else {
      VertexId clamp = std::min(min_part, floor_cap);
      if (f >= 1 && Int(clamp) > f) clamp = f.convert_to<VertexId>();
      target = clamp;
      if (target == 0)
        return fail(cert, "condition (b): core has an empty part",
                    {{"core_order", u64_str(core.order)}});
    }

    PartiteCore trimmed;
    try {
      trimmed = trim_to_size(core, reduction.graph, target);
    } catch (const std::exception& e) {
      return fail(cert, "condition (b): trim failed", {{"error", e.what()}});
    }

    TuranEdit edit;
    try {
      edit = edits_from_partition(
          g, extend_partition(g, trimmed.parts, params.r), params.r);
    } catch (const std::exception& e) {
      return fail(cert, "condition (b): partition extension failed",
                  {{"error", e.what()}});
    }
    // The core extension is the primary construction; the local-search
    // partition (whose restarts include the canonical one) and, at small n,
    // the exact minimum replace it only when strictly better.
    {
      const TuranEdit local = edit_distance_heuristic(g, params.r);
      if (local.count < edit.count) edit = local;
    }
    if (const std::optional<TuranEdit> exact = edit_distance_exact(g, params.r))
      if (exact->count < edit.count) edit = *exact;

    Real bound = theorem_bound(n, params.r, to_real(params.eps),
                               to_real(params.c));
    if (params.overrides.bound_multiplier)
      bound *= to_real(*params.overrides.bound_multiplier);
    if (!(Real(edit.count) < bound))
      return fail(cert, "condition (b): edit count not below the bound",
                  {{"count", u64_str(edit.count)},
                   {"bound", format_real(bound)}});
    cert.payload = TuranEditPayload{std::move(edit), bound};
  }

  const CertificateCheck check = verify_certificate(g, cert);
  if (!check.ok)
    return fail(cert, "self-verification failed", {{"reason", check.reason}});
  return cert;
}

}  // namespace

Certificate analyze(const Graph& g, const Params& params,
                    RemovalTrace* trace_out) {
  try {
    return analyze_impl(g, params, trace_out);
  } catch (const std::exception& e) {
    Certificate cert;
    cert.params = params;
    return fail(std::move(cert), "internal error", {{"error", e.what()}});
  }
}

CertificateCheck verify_certificate(const Graph& g, const Certificate& cert) {
  CertificateCheck check;
  if (std::holds_alternative<InconclusivePayload>(cert.payload)) {
    check.ok = true;  // not a claim
    return check;
  }
  if (const auto* mp = std::get_if<MultipartitePayload>(&cert.payload)) {
    if (mp->profile.classes() != cert.params.r + 1) {
      check.reason = "witness profile must have r + 1 classes";
      return check;
    }
    const WitnessCheck wc = verify_witness(g, mp->witness, mp->profile);
    if (!wc.ok) {
      check.reason = wc.reason;
      return check;
    }
    check.ok = true;
    return check;
  }
  const auto& tp = std::get<TuranEditPayload>(cert.payload);
  TuranEdit expected;
  try {
    expected = edits_from_partition(g, tp.edit.partition, cert.params.r);
  } catch (const std::exception& e) {
    check.reason = std::string("bad partition: ") + e.what();
    return check;
  }
  std::vector<Edge> adds = tp.edit.adds;
  std::vector<Edge> removes = tp.edit.removes;
  std::sort(adds.begin(), adds.end());
  std::sort(removes.begin(), removes.end());
  if (adds != expected.adds) {
    check.reason = "adds do not match the cross-part non-edges";
    return check;
  }
  if (removes != expected.removes) {
    check.reason = "removes do not match the intra-part edges";
    return check;
  }
  if (tp.edit.count != expected.count) {
    check.reason = "edit count does not equal |adds| + |removes|";
    return check;
  }
  Real bound = theorem_bound(g.order(), cert.params.r,
                             to_real(cert.params.eps), to_real(cert.params.c));
  if (cert.params.overrides.bound_multiplier)
    bound *= to_real(*cert.params.overrides.bound_multiplier);
  if (format_real(bound) != format_real(tp.bound)) {
    check.reason = "stated bound does not match the recomputed bound";
    return check;
  }
  if (!(Real(tp.edit.count) < bound)) {
    check.reason = "edit count is not below the bound";
    return check;
  }
  check.ok = true;
  return check;
}

namespace {

ojson profile_to_json(const SizeProfile& p) {
  ojson j;
  j["r_small"] = p.r_small;
  j["s"] = p.s;
  j["t"] = p.t;
  return j;
}

SizeProfile profile_from_json(const ojson& j) {
  SizeProfile p;
  p.r_small = j.at("r_small").get<VertexId>();
  p.s = j.at("s").get<VertexId>();
  p.t = j.at("t").get<VertexId>();
  return p;
}

ojson edges_to_json(const std::vector<Edge>& edges) {
  ojson arr = ojson::array();
  for (const Edge& e : edges) arr.push_back(ojson::array({e.u, e.v}));
  return arr;
}

std::vector<Edge> edges_from_json(const ojson& arr) {
  std::vector<Edge> out;
  for (const ojson& item : arr) {
    if (!item.is_array() || item.size() != 2)
      throw std::runtime_error("certificate: edge must be a [u, v] pair");
    out.push_back(Edge(item.at(0).get<VertexId>(), item.at(1).get<VertexId>()));
  }
  return out;
}

ojson parts_to_json(const std::vector<std::vector<VertexId>>& parts) {
  ojson arr = ojson::array();
  for (const std::vector<VertexId>& part : parts) arr.push_back(part);
  return arr;
}

std::vector<std::vector<VertexId>> parts_from_json(const ojson& arr) {
  std::vector<std::vector<VertexId>> out;
  for (const ojson& item : arr)
    out.push_back(item.get<std::vector<VertexId>>());
  return out;
}

long long int_to_ll(const Int& x, const char* what) {
  if (x > Int(INT64_MAX) || x < Int(INT64_MIN))
    throw std::overflow_error(std::string(what) + " exceeds 64 bits");
  return x.convert_to<long long>();
}

}  // namespace

std::string certificate_to_json(const Certificate& cert) {
  ojson j;
  j["version"] = 1;

  ojson params;
  params["r"] = cert.params.r;
  params["eps"] = format_rational(cert.params.eps);
  params["c"] = format_rational(cert.params.c);
  params["mode"] = cert.params.mode == Mode::Paper ? "paper" : "relaxed";
  ojson overrides;
  overrides["threshold"] =
      cert.params.overrides.threshold
          ? ojson(format_rational(*cert.params.overrides.threshold))
          : ojson(nullptr);
  overrides["profile"] = cert.params.overrides.profile
                             ? profile_to_json(*cert.params.overrides.profile)
                             : ojson(nullptr);
  overrides["bound_multiplier"] =
      cert.params.overrides.bound_multiplier
          ? ojson(format_rational(*cert.params.overrides.bound_multiplier))
          : ojson(nullptr);
  params["overrides"] = overrides;
  j["params"] = params;

  ojson hyp;
  hyp["checked"] = cert.hypothesis.checked;
  hyp["holds"] = cert.hypothesis.holds;
  hyp["edges"] = cert.hypothesis.edges;
  hyp["threshold"] = int_to_ll(cert.hypothesis.threshold, "hypothesis threshold");
  hyp["margin"] = int_to_ll(cert.hypothesis.margin, "hypothesis margin");
  j["hypothesis"] = hyp;

  ojson payload;
  if (const auto* mp = std::get_if<MultipartitePayload>(&cert.payload)) {
    j["outcome"] = "multipartite";
    payload["profile"] = profile_to_json(mp->profile);
    payload["parts"] = parts_to_json(mp->witness.parts);
  } else if (const auto* tp = std::get_if<TuranEditPayload>(&cert.payload)) {
    j["outcome"] = "turan_edit";
    payload["partition"] = parts_to_json(tp->edit.partition);
    payload["adds"] = edges_to_json(tp->edit.adds);
    payload["removes"] = edges_to_json(tp->edit.removes);
    payload["count"] = tp->edit.count;
    payload["bound"] = format_real(tp->bound);
  } else {
    const auto& ip = std::get<InconclusivePayload>(cert.payload);
    j["outcome"] = "inconclusive";
    payload["reason"] = ip.reason;
    ojson diag = ojson::object();
    for (const auto& [key, value] : ip.diagnostics) diag[key] = value;
    payload["diagnostics"] = diag;
  }
  j["payload"] = payload;

  ojson ts;
  ts["threshold"] = format_rational(cert.trace.threshold);
  ts["length"] = cert.trace.length;
  ts["sum"] = cert.trace.sum;
  ts["case"] = cert.trace.branch;
  j["trace_summary"] = ts;

  return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
  const ojson j = ojson::parse(text);
  if (!j.is_object()) throw std::runtime_error("certificate: not an object");
  if (j.at("version").get<int>() != 1)
    throw std::runtime_error("certificate: unsupported version");

  Certificate cert;
  const ojson& params = j.at("params");
  cert.params.r = params.at("r").get<unsigned>();
  cert.params.eps = parse_rational(params.at("eps").get<std::string>());
  cert.params.c = parse_rational(params.at("c").get<std::string>());
  const std::string mode = params.at("mode").get<std::string>();
  if (mode == "paper")
    cert.params.mode = Mode::Paper;
  else if (mode == "relaxed")
    cert.params.mode = Mode::Relaxed;
  else
    throw std::runtime_error("certificate: unknown mode " + mode);
  const ojson& overrides = params.at("overrides");
  if (!overrides.at("threshold").is_null())
    cert.params.overrides.threshold =
        parse_rational(overrides.at("threshold").get<std::string>());
  if (!overrides.at("profile").is_null())
    cert.params.overrides.profile =
        profile_from_json(overrides.at("profile"));
  if (!overrides.at("bound_multiplier").is_null())
    cert.params.overrides.bound_multiplier =
        parse_rational(overrides.at("bound_multiplier").get<std::string>());

  const ojson& hyp = j.at("hypothesis");
  cert.hypothesis.checked = hyp.at("checked").get<bool>();
  cert.hypothesis.holds = hyp.at("holds").get<bool>();
  cert.hypothesis.edges = hyp.at("edges").get<std::uint64_t>();
  cert.hypothesis.threshold = Int(hyp.at("threshold").get<long long>());
  cert.hypothesis.margin = Int(hyp.at("margin").get<long long>());

  const std::string outcome = j.at("outcome").get<std::string>();
  const ojson& payload = j.at("payload");
  if (outcome == "multipartite") {
    MultipartitePayload mp;
    mp.profile = profile_from_json(payload.at("profile"));
    mp.witness.parts = parts_from_json(payload.at("parts"));
    cert.payload = std::move(mp);
  } else if (outcome == "turan_edit") {
    TuranEditPayload tp;
    tp.edit.partition = parts_from_json(payload.at("partition"));
    tp.edit.adds = edges_from_json(payload.at("adds"));
    tp.edit.removes = edges_from_json(payload.at("removes"));
    tp.edit.count = payload.at("count").get<std::uint64_t>();
    tp.bound = Real(payload.at("bound").get<std::string>());
    cert.payload = std::move(tp);
  } else if (outcome == "inconclusive") {
    InconclusivePayload ip;
    ip.reason = payload.at("reason").get<std::string>();
    for (const auto& [key, value] : payload.at("diagnostics").items())
      ip.diagnostics.emplace_back(key, value.get<std::string>());
    cert.payload = std::move(ip);
  } else {
    throw std::runtime_error("certificate: unknown outcome " + outcome);
  }

  const ojson& ts = j.at("trace_summary");
  cert.trace.threshold = parse_rational(ts.at("threshold").get<std::string>());
  cert.trace.length = ts.at("length").get<std::uint64_t>();
  cert.trace.sum = ts.at("sum").get<std::uint64_t>();
  cert.trace.branch = ts.at("case").get<std::string>();
  return cert;
}

}  // namespace turan
