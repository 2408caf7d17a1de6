#include <doctest.h>

#include "cfdim/spectrum.hpp"

using namespace cfdim;

namespace {

SolverConfig quick() {
  SolverConfig cfg;
  cfg.mesh_size = 80;
  cfg.bisection_tol = 2e-4;
  cfg.truncate = 25;
  return cfg;
}

}  // namespace

TEST_CASE("certificates round-trip bit-exactly through the text format") {
  Certificate c = spectrum::certify_critical_breakpoint(11);
  c.seconds = 1.25;
  std::string text = serialize(c);
  Certificate back = parse_certificate(text);
  CHECK(serialize(back) == text);
  CHECK(back.statement_id == "critical-bp");
  CHECK(back.verdict == "verified");
  CHECK(back.find("tau")->enclosure.lo == c.find("tau")->enclosure.lo);
  CHECK(back.seconds == 1.25);
}

TEST_CASE("certificate bodies are deterministic, timings aside") {
  SolverConfig cfg = quick();
  Certificate a = spectrum::certify_pstar_gap(3, 1, cfg);
  a.seconds = 0.5;
  Certificate b = spectrum::certify_pstar_gap(3, 1, cfg);
  b.seconds = 99.0;
  CHECK(serialize(a, false) == serialize(b, false));
  CHECK(serialize(a) != serialize(b));
}

TEST_CASE("json mirror carries the same fields") {
  Certificate c = spectrum::certify_critical_breakpoint(11);
  std::string j = to_json(c);
  CHECK(j.find("\"statement\": \"critical-bp\"") != std::string::npos);
  CHECK(j.find("\"verdict\": \"verified\"") != std::string::npos);
  CHECK(j.find("\"tau\"") != std::string::npos);
}

TEST_CASE("fresh certificates re-verify; tampering is caught") {
  SolverConfig cfg = quick();
  Certificate c = spectrum::certify_pstar_gap(3, 1, cfg);
  auto ok = spectrum::verify_certificate(c);
  CHECK(ok.ok);

  // tamper: shrink the stored mu upper endpoint below the recomputed one
  Certificate tampered = c;
  for (auto& r : tampered.results)
    if (r.name == "mu") r.enclosure.hi -= 3e-3;
  auto bad = spectrum::verify_certificate(tampered);
  CHECK_FALSE(bad.ok);
  CHECK(bad.diff.find("mu") != std::string::npos);

  // tamper the other way: a widened endpoint flips internal consistency
  Certificate widened = c;
  for (auto& r : widened.results)
    if (r.name == "fsharp-gamma-refined") r.enclosure.hi = 1.5;
  auto bad2 = spectrum::verify_certificate(widened);
  CHECK_FALSE(bad2.ok);
}

TEST_CASE("re-verification at a refined config nests inside the stored record") {
  SolverConfig cfg = quick();
  Certificate c = spectrum::certify_pstar_gap(3, 1, cfg);
  SolverConfig fine = cfg;
  fine.mesh_size *= 2;
  fine.max_subdivision_depth += 2;
  auto outcome = spectrum::verify_certificate(c, fine);
  CHECK(outcome.ok);
  // recomputed enclosures must be contained in the stored ones
  for (const auto& r : c.results) {
    if (r.kind == "note") continue;
    const auto* m = outcome.recomputed.find(r.name);
    REQUIRE(m != nullptr);
    CHECK(m->enclosure.lo >= r.enclosure.lo - 1e-12);
    CHECK(m->enclosure.hi <= r.enclosure.hi + 1e-12);
  }
}

TEST_CASE("dimension certificates") {
  SolverConfig cfg = quick();
  Certificate c = spectrum::certify_dimension(Alphabet::from_ints({1, 2}), cfg);
  CHECK(c.verdict == "verified");
  CHECK(c.find("dim")->enclosure.intersects(Interval(0.531277, 0.531281)));
  auto ok = spectrum::verify_certificate(c);
  CHECK(ok.ok);
}

TEST_CASE("verdict exit codes") {
  CHECK(verdict_exit_code("verified") == 0);
  CHECK(verdict_exit_code("inconclusive") == 2);
  CHECK(verdict_exit_code("failed") == 1);
}

TEST_CASE("parse rejects foreign and mangled inputs") {
  CHECK_THROWS_AS(parse_certificate("not a certificate"), ParamError);
  CHECK_THROWS_AS(parse_certificate("cfdim-certificate v2\nstatement: x\n"),
                  ParamError);
  Certificate c = spectrum::certify_critical_breakpoint(11);
  std::string text = serialize(c);
  CHECK_THROWS_AS(parse_certificate("junk\n" + text), ParamError);
}

TEST_CASE("certify dispatcher maps statement ids") {
  SolverConfig cfg = quick();
  std::map<std::string, std::string> p{{"q", "11"}};
  Certificate c = spectrum::certify("critical-bp", p, cfg);
  CHECK(c.statement_id == "critical-bp");
  CHECK_THROWS_AS(spectrum::certify("nope", p, cfg), ParamError);
  std::map<std::string, std::string> missing;
  CHECK_THROWS_AS(spectrum::certify("critical-bp", missing, cfg), ParamError);
}
