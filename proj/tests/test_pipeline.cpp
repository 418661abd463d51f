#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>
#include <variant>
#include <vector>

#include "doctest.h"
#include "turan/graph.hpp"
#include "turan/numeric.hpp"
#include "turan/oracle.hpp"
#include "turan/pipeline.hpp"

using namespace turan;

namespace {

Params relaxed(unsigned r, const Rational& eps, const Rational& c) {
  Params p;
  p.r = r;
  p.eps = eps;
  p.c = c;
  p.mode = Mode::Relaxed;
  return p;
}

const std::string& reason_of(const Certificate& cert) {
  return std::get<InconclusivePayload>(cert.payload).reason;
}

}  // namespace

TEST_CASE("density hypothesis with exact rational threshold") {
  const HypothesisReport t2 = check_hypothesis(Graph::turan(10, 2), 2,
                                               Rational(1, 100));
  CHECK(t2.holds);
  CHECK(t2.edges == 25);
  CHECK(t2.threshold == 25);  // ceil((1/2 - 1/100) * 50) = ceil(24.5)
  CHECK(t2.margin == 0);

  CHECK_FALSE(check_hypothesis(Graph(10), 2, Rational(1, 100)).holds);

  const HypothesisReport t3 = check_hypothesis(Graph::turan(9, 3), 3,
                                               Rational(0));
  CHECK(t3.holds);
  CHECK(t3.threshold == 27);
  CHECK(t3.margin == 0);
}

TEST_CASE("paper mode rejects out-of-range parameters by name") {
  const Graph g = Graph::turan(10, 2);

  Params p;
  p.r = 2;
  p.mode = Mode::Paper;

  p.eps = Rational(0);
  p.c = Rational(1, 1000);
  Certificate cert = analyze(g, p);
  CHECK(reason_of(cert) == "parameter range violated: eps <= 0");
  CHECK_FALSE(cert.hypothesis.checked);  // rejected before any graph work

  p.eps = Rational(1);
  cert = analyze(g, p);
  CHECK(reason_of(cert) == "parameter range violated: eps >= r^-24");

  p.eps = Rational(1, 100000000);  // within (0, 2^-24)
  p.c = Rational(1, 2);
  cert = analyze(g, p);
  CHECK(reason_of(cert) ==
        "parameter range violated: c >= r^-(3(r+14)(r+1))");

  // Any c below the upper range fails 1/ln n < c at desk scale.
  p.c = Rational(1, Int("100000000000000000000000000000000000000000000"));
  cert = analyze(g, p);
  CHECK(reason_of(cert) == "parameter range violated: c <= 1/ln n");

  Params with_override = p;
  with_override.overrides.threshold = Rational(1);
  cert = analyze(g, with_override);
  CHECK(reason_of(cert) ==
        "parameter range violated: overrides are not permitted in paper mode");
}

TEST_CASE("relaxed mode rejects malformed parameters") {
  const Graph g = Graph::turan(10, 2);

  Certificate cert = analyze(g, relaxed(1, Rational(1, 10), Rational(1, 10)));
  CHECK(reason_of(cert) == "invalid parameters: r must be >= 2");

  cert = analyze(g, relaxed(2, Rational(-1), Rational(1, 10)));
  CHECK(reason_of(cert) == "invalid parameters: eps must be >= 0");

  Params p = relaxed(2, Rational(1, 10), Rational(1, 10));
  p.overrides.bound_multiplier = Rational(0);
  cert = analyze(g, p);
  CHECK(reason_of(cert) ==
        "invalid parameters: bound multiplier override must be > 0");

  p = relaxed(2, Rational(1, 10), Rational(1, 10));
  p.overrides.profile = SizeProfile{3, 2, 2};  // 4 classes, but r + 1 = 3
  cert = analyze(g, p);
  CHECK(reason_of(cert) ==
        "invalid parameters: profile must have r + 1 classes");
}

TEST_CASE("hypothesis violation is an inconclusive certificate") {
  const Certificate cert =
      analyze(Graph(12), relaxed(2, Rational(1, 100), Rational(1, 1000)));
  CHECK(reason_of(cert) == "hypothesis violated");
  CHECK(cert.hypothesis.checked);
  CHECK_FALSE(cert.hypothesis.holds);
  CHECK_FALSE(cert.conclusive());
}

TEST_CASE("planted edits route to an edit certificate matching the reference") {
  const Graph g = planted_turan(12, 3, 2, 5);
  const Params p = relaxed(3, Rational(1, 10), Rational(1, 100));
  RemovalTrace trace;
  const Certificate cert = analyze(g, p, &trace);

  REQUIRE(std::holds_alternative<TuranEditPayload>(cert.payload));
  const TuranEditPayload& payload = std::get<TuranEditPayload>(cert.payload);
  CHECK(payload.edit.count == oracle::edit_distance(g, 3).count);
  CHECK(Real(payload.edit.count) < payload.bound);
  CHECK(cert.trace.branch == "b");
  CHECK(cert.hypothesis.holds);
  CHECK(verify_certificate(g, cert).ok);

  // The exposed trace matches the recorded summary.
  CHECK(trace.steps.size() == cert.trace.length);
  CHECK(trace.sum() == cert.trace.sum);
}

TEST_CASE("a dense graph routes to a multipartite witness") {
  const Graph g = Graph::random(24, 262, 5);
  Params p = relaxed(2, Rational(1, 100), Rational(1, 1000));
  p.overrides.profile = SizeProfile{2, 2, 2};
  const Certificate cert = analyze(g, p);

  REQUIRE(std::holds_alternative<MultipartitePayload>(cert.payload));
  CHECK(cert.trace.branch == "a");
  CHECK(verify_certificate(g, cert).ok);

  const MultipartitePayload& payload =
      std::get<MultipartitePayload>(cert.payload);
  CHECK(payload.profile.classes() == 3);
}

TEST_CASE("claims degrade to inconclusive instead of breaking the bound") {
  const Graph g = planted_turan(12, 3, 2, 5);
  Params p = relaxed(3, Rational(1, 10), Rational(1, 100));
  p.overrides.bound_multiplier = Rational(1, 1000000);
  const Certificate cert = analyze(g, p);
  REQUIRE(std::holds_alternative<InconclusivePayload>(cert.payload));
  CHECK(reason_of(cert) == "condition (b): edit count not below the bound");
}

TEST_CASE("verification re-checks claims from scratch") {
  const Graph g = planted_turan(12, 3, 2, 5);
  const Params p = relaxed(3, Rational(1, 10), Rational(1, 100));
  Certificate cert = analyze(g, p);
  REQUIRE(std::holds_alternative<TuranEditPayload>(cert.payload));
  CHECK(verify_certificate(g, cert).ok);

  SUBCASE("tampered edit count") {
    std::get<TuranEditPayload>(cert.payload).edit.count += 1;
    CHECK_FALSE(verify_certificate(g, cert).ok);
  }
  SUBCASE("dropped add") {
    TuranEdit& edit = std::get<TuranEditPayload>(cert.payload).edit;
    if (!edit.adds.empty()) {
      edit.adds.pop_back();
      CHECK_FALSE(verify_certificate(g, cert).ok);
    }
  }
  SUBCASE("tampered bound") {
    std::get<TuranEditPayload>(cert.payload).bound += 1;
    CHECK_FALSE(verify_certificate(g, cert).ok);
  }
  SUBCASE("wrong graph") {
    const Graph other = planted_turan(12, 3, 4, 99);
    const CertificateCheck check = verify_certificate(other, cert);
    // The partition no longer reproduces the stored edit set.
    CHECK_FALSE(check.ok);
  }
}

TEST_CASE("multipartite claims fail verification against a damaged host") {
  const Graph g = Graph::random(24, 262, 5);
  Params p = relaxed(2, Rational(1, 100), Rational(1, 1000));
  p.overrides.profile = SizeProfile{2, 2, 2};
  const Certificate cert = analyze(g, p);
  REQUIRE(std::holds_alternative<MultipartitePayload>(cert.payload));

  const MultipartiteWitness& w =
      std::get<MultipartitePayload>(cert.payload).witness;
  const Edge cross(w.parts[0][0], w.parts[1][0]);
  const Graph damaged = g.with_edge_removed(cross);
  CHECK_FALSE(verify_certificate(damaged, cert).ok);
}

TEST_CASE("inconclusive certificates verify trivially") {
  const Certificate cert =
      analyze(Graph(12), relaxed(2, Rational(1, 100), Rational(1, 1000)));
  CHECK(verify_certificate(Graph(12), cert).ok);
  CHECK(verify_certificate(Graph::turan(9, 3), cert).ok);
}

TEST_CASE("certificates serialize deterministically and round-trip") {
  const Graph g = planted_turan(12, 3, 2, 5);
  Params p = relaxed(3, Rational(1, 10), Rational(1, 100));
  p.overrides.bound_multiplier = Rational(2);

  const Certificate a = analyze(g, p);
  const Certificate b = analyze(g, p);
  const std::string ja = certificate_to_json(a);
  const std::string jb = certificate_to_json(b);
  CHECK(ja == jb);

  const Certificate back = certificate_from_json(ja);
  CHECK(certificate_to_json(back) == ja);
  CHECK(verify_certificate(g, back).ok);

  // Key order is fixed.
  CHECK(ja.find("\"version\"") < ja.find("\"params\""));
  CHECK(ja.find("\"params\"") < ja.find("\"hypothesis\""));
  CHECK(ja.find("\"hypothesis\"") < ja.find("\"outcome\""));
  CHECK(ja.find("\"outcome\"") < ja.find("\"payload\""));
  CHECK(ja.find("\"payload\"") < ja.find("\"trace_summary\""));
}

TEST_CASE("serialization covers every outcome kind") {
  // Multipartite.
  const Graph dense = Graph::random(24, 262, 5);
  Params pa = relaxed(2, Rational(1, 100), Rational(1, 1000));
  pa.overrides.profile = SizeProfile{2, 2, 2};
  const Certificate ma = analyze(dense, pa);
  REQUIRE(std::holds_alternative<MultipartitePayload>(ma.payload));
  const Certificate ma_back = certificate_from_json(certificate_to_json(ma));
  CHECK(certificate_to_json(ma_back) == certificate_to_json(ma));
  CHECK(verify_certificate(dense, ma_back).ok);

  // Inconclusive with diagnostics.
  const Certificate inc =
      analyze(Graph(12), relaxed(2, Rational(1, 100), Rational(1, 1000)));
  const Certificate inc_back = certificate_from_json(certificate_to_json(inc));
  CHECK(certificate_to_json(inc_back) == certificate_to_json(inc));
}

TEST_CASE("analyze never throws on pathological inputs") {
  CHECK_NOTHROW(analyze(Graph(0), relaxed(2, Rational(0), Rational(0))));
  CHECK_NOTHROW(analyze(Graph(1), relaxed(5, Rational(0), Rational(0))));
  Params weird = relaxed(2, Rational(0), Rational(0));
  weird.overrides.threshold = Rational(-5);
  CHECK_NOTHROW(analyze(Graph::turan(6, 2), weird));
}
