#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "turan/certifier.hpp"
#include "turan/graph.hpp"
#include "turan/multipartite.hpp"
#include "turan/numeric.hpp"
#include "turan/reduction.hpp"

namespace turan {

/// Paper mode enforces the strict admissible parameter ranges (which force
/// astronomically large n); relaxed mode runs the same pipeline with
/// desk-scale parameters and records every override in the certificate.
enum class Mode { Paper, Relaxed };

struct Overrides {
  std::optional<Rational> threshold;  // removal threshold of the reduction loop
  std::optional<SizeProfile> profile;  // witness profile for condition (a)
  std::optional<Rational> bound_multiplier;  // scales the edit-count bound
};

struct Params {
  unsigned r = 2;
  Rational eps = 0;
  Rational c = 0;
  Mode mode = Mode::Relaxed;
  Overrides overrides;
};

/// Result of the density hypothesis e(G) >= ceil((1 - 1/r - eps) n^2 / 2),
/// decided in exact rational arithmetic.
struct HypothesisReport {
  bool checked = false;  // false when parameter validation rejected the run
  bool holds = false;
  std::uint64_t edges = 0;
  Int threshold = 0;  // ceil((1 - 1/r - eps) n^2 / 2)
  Int margin = 0;     // edges - threshold (negative when the check fails)
};

HypothesisReport check_hypothesis(const Graph& g, unsigned r,
                                  const Rational& eps);

/// Condition (a): a complete multipartite witness with the stated profile.
struct MultipartitePayload {
  SizeProfile profile;
  MultipartiteWitness witness;
};

/// Condition (b): an edit set to the Turan graph with count < bound.
struct TuranEditPayload {
  TuranEdit edit;
  Real bound;
};

/// Honest failure: the stage that failed and key/value diagnostics.
struct InconclusivePayload {
  std::string reason;
  std::vector<std::pair<std::string, std::string>> diagnostics;
};

/// Reduction-loop provenance stamped into every certificate.
struct TraceSummary {
  Rational threshold = 0;       // removal threshold actually used
  std::uint64_t length = 0;     // number of removals
  std::uint64_t sum = 0;        // total per-removal clique counts
  std::string branch = "none";  // case split taken: "a", "b", or "none"
};

struct Certificate {
  Params params;
  HypothesisReport hypothesis;
  std::variant<MultipartitePayload, TuranEditPayload, InconclusivePayload>
      payload;
  TraceSummary trace;

  bool conclusive() const {
    return !std::holds_alternative<InconclusivePayload>(payload);
  }
};

/// Full dichotomy pipeline: parameter gate (paper mode), density hypothesis,
/// reduction loop, case split, then condition (a) — multipartite search on
/// the input graph — or condition (b) — partite core of the reduced graph,
/// trim, extension to a Turan-size partition, edit set against the bound.
/// Every failure path returns an inconclusive certificate naming its stage;
/// no semantic failure surfaces as an exception. Claim certificates are
/// self-verified before being returned. Deterministic: identical inputs give
/// identical certificates.
Certificate analyze(const Graph& g, const Params& params,
                    RemovalTrace* trace_out = nullptr);

struct CertificateCheck {
  bool ok = false;
  std::string reason;  // empty when ok
  explicit operator bool() const { return ok; }
};

/// Re-validates a certificate against g from scratch, sharing no state with
/// analyze: witness checks for multipartite claims; structural edit
/// soundness, exact edit-set recomputation and the recomputed bound for
/// turan_edit claims. Inconclusive certificates are not claims and verify
/// trivially.
CertificateCheck verify_certificate(const Graph& g, const Certificate& cert);

/// Fixed-schema JSON rendering: top-level keys {version, params, hypothesis,
/// outcome, payload, trace_summary} in that order; integers as JSON numbers,
/// rationals as canonical "p/q" strings, reals as 50-significant-digit
/// strings, vertex ids 0-based, edges as [u, v] pairs with u < v.
/// Byte-identical for equal certificates.
std::string certificate_to_json(const Certificate& cert);

/// Strict parser for the schema above; throws std::runtime_error (or a
/// JSON parse error) on malformed input.
Certificate certificate_from_json(const std::string& text);

}  // namespace turan
