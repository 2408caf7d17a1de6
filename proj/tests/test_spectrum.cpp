#include <doctest.h>

#include "cfdim/spectrum.hpp"

using namespace cfdim;
using namespace cfdim::spectrum;

namespace {

SolverConfig quick() {
  SolverConfig cfg;
  cfg.mesh_size = 80;
  cfg.bisection_tol = 2e-4;
  cfg.truncate = 25;
  return cfg;
}

}  // namespace

TEST_CASE("derived alphabets have the right shape") {
  CHECK(pstar_initial_segment(3, 1).elements() == std::vector<BigInt>{1, 3});
  CHECK(pstar_initial_segment(2, 2).elements() == std::vector<BigInt>{1, 2, 4});

  Alphabet mu1 = pstar_without_power(3, 1, 3);
  CHECK(mu1.elements() == std::vector<BigInt>{1, 9, 27, 81});
  CHECK(mu1.tail_infinite());

  Alphabet mu2 = pstar_without_power(2, 2, 2);
  CHECK(mu2.elements() == std::vector<BigInt>{1, 2, 8, 16});

  Alphabet m6 = mq_without(6, 2, 5);
  CHECK(m6.elements() ==
        std::vector<BigInt>{1, 729, 4096, 15625});
  CHECK(m6.tail_infinite());
  CHECK_THROWS_AS(mq_without(6, 2, 2), ParamError);
}

TEST_CASE("strict break point for the power-star family at s=0.3") {
  SolverConfig cfg = quick();
  Alphabet parent = Alphabet::power_star(2, 16);
  auto rec = find_strict_break_point(parent, Alphabet::from_ints({1}), 0.3, cfg);
  REQUIRE(rec.status == BreakPointRecord::Status::ok);
  CHECK(rec.break_element == 8);  // dim({1,8}) ~ 0.3336 >= 0.3 > dim({1,16}) ~ 0.281
  CHECK(rec.dim_f.hi < 0.3);
  CHECK(rec.dim_with_break.lo >= 0.3);
  CHECK(rec.dim_with_next.hi < 0.3);
}

TEST_CASE("strict break point over the integers") {
  SolverConfig cfg = quick();
  Alphabet parent = Alphabet::monomial(1, 40);
  auto rec = find_strict_break_point(parent, Alphabet::from_ints({1, 2}), 0.6, cfg);
  REQUIRE(rec.status == BreakPointRecord::Status::ok);
  CHECK(rec.dim_with_break.lo >= 0.6);
  CHECK(rec.dim_with_next.hi < 0.6);
  CHECK(rec.break_element > 2);
}

TEST_CASE("no break point when s is out of reach") {
  SolverConfig cfg = quick();
  Alphabet parent = Alphabet::monomial(1, 10);
  CHECK_THROWS_AS(
      find_strict_break_point(parent, Alphabet::from_ints({1}), 0.99, cfg),
      NoBreakPointError);
}

TEST_CASE("greedy construction approaches s from below on P_2") {
  SolverConfig cfg = quick();
  auto res = greedy_spectrum_construct(Alphabet::power(2, 2), 0.4, 3, cfg);
  CHECK_FALSE(res.hypothesis_violation);
  CHECK_FALSE(res.inconclusive);
  REQUIRE(res.rounds.size() == 3);
  for (std::size_t i = 1; i < res.rounds.size(); ++i)
    CHECK(res.rounds[i].dim_f.lo > res.rounds[i - 1].dim_f.lo);
  for (const auto& r : res.rounds) {
    CHECK(r.dim_f.hi < 0.4);
    CHECK(r.hypothesis_ok);
  }
  CHECK(res.rounds.back().dim_f.lo > 0.4 - 0.02);
}

TEST_CASE("greedy construction reports the hypothesis violation inside the gap") {
  SolverConfig cfg = quick();
  // certified gap (mu^1, nu^1) for q=3; pick its midpoint
  Certificate gap = certify_pstar_gap(3, 1, cfg);
  REQUIRE(gap.verdict == "verified");
  double mu_hi = gap.find("mu")->enclosure.hi;
  double nu_lo = gap.find("nu")->enclosure.lo;
  REQUIRE(mu_hi < nu_lo);
  double mid = 0.5 * (mu_hi + nu_lo);
  auto res = greedy_spectrum_construct(Alphabet::power_star(3, 2), mid, 2, cfg);
  CHECK(res.hypothesis_violation);
  CHECK(res.violation_round == 0);
  CHECK(res.rounds.at(0).break_element == 3);
}

TEST_CASE("pstar gap certificates") {
  SolverConfig cfg = quick();
  Certificate c31 = certify_pstar_gap(3, 1, cfg);
  CHECK(c31.verdict == "verified");
  CHECK(c31.find("mu")->enclosure.lo > 0.0);
  CHECK(c31.find("nu")->enclosure.intersects(Interval(0.454487, 0.454490)));

  Certificate c22 = certify_pstar_gap(2, 2, cfg);
  CHECK(c22.verdict == "verified");
  CHECK(c22.find("nu")->enclosure.intersects(Interval(0.669217, 0.669223)));

  CHECK_THROWS_AS(certify_pstar_gap(2, 1, cfg), ParamError);
}

TEST_CASE("f-sharp contraction certificates for small q") {
  SolverConfig cfg = quick();
  for (int q : {3, 4, 5}) {
    Certificate c = certify_fsharp_contraction(q, cfg);
    CHECK(c.verdict == "verified");
    CHECK(c.find("dim-fsharp")->enclosure.hi < c.find("dim-f")->enclosure.lo);
  }
}

TEST_CASE("mq structure certificate for q=6: one gap") {
  SolverConfig cfg = quick();
  Certificate c = certify_mq_structure(6, cfg);
  CHECK(c.verdict == "verified");
  CHECK(c.find("gap1-left")->enclosure.hi < c.find("gap1-right")->enclosure.lo);
  CHECK(c.find("gap1-right")->enclosure.intersects(Interval(0.215370, 0.215371)));
  CHECK(c.find("two-pow-gap") != nullptr);
  CHECK(c.find("two-pow-gap")->verdict == "below");
}

TEST_CASE("mq structure certificate for q=5: full spectrum with base comparison") {
  SolverConfig cfg = quick();
  Certificate c = certify_mq_structure(5, cfg);
  CHECK(c.verdict == "verified");
  CHECK(c.find("dim-1-2pow5")->enclosure.hi < c.find("dim-1-3pow5-100pow5")->enclosure.lo);
  CHECK(c.find("dim-1-2pow5")->enclosure.intersects(Interval(0.243375, 0.243377)));
  CHECK(c.find("dim-1-3pow5-100pow5")->enclosure.intersects(Interval(0.243455, 0.243456)));
}

TEST_CASE("mq structure certificate for q=1 (integers) stays sound") {
  SolverConfig cfg = quick();
  Certificate c = certify_mq_structure(1, cfg);
  CHECK(c.verdict == "verified");
  // the endpoint enclosure cannot exclude 1
  CHECK(c.find("dim-mq")->enclosure.hi == 1.0);
  CHECK(c.find("dim-mq")->enclosure.lo > 0.9);
}

TEST_CASE("critical break point certificates") {
  Certificate c11 = certify_critical_breakpoint(11);
  CHECK(c11.verdict == "verified");
  CHECK(c11.find("tau")->enclosure.lo >= 1.112);

  Certificate c50 = certify_critical_breakpoint(50);
  CHECK(c50.verdict == "verified");

  CHECK_THROWS_AS(certify_critical_breakpoint(10), ParamError);
}

TEST_CASE("submultiplicativity certificates") {
  Certificate ok = certify_submultiplicative(Alphabet::power(2, 20), 20);
  CHECK(ok.verdict == "verified");
  CHECK(ok.find("scope") != nullptr);  // range-limited note for families

  Certificate bad =
      certify_submultiplicative(Alphabet::from_ints({2, 3, 100, 101}), 3);
  CHECK(bad.verdict == "failed");
  CHECK(bad.find("violation") != nullptr);
}

TEST_CASE("scan: attainable below the P_2 dimension, empty inside the gap") {
  SolverConfig cfg = quick();
  auto low = scan_spectrum(Alphabet::power(2, 10), {0.2, 0.3}, 4, cfg, 0.01);
  for (const auto& p : low) {
    CHECK(p.attained);
    CHECK(p.witness.has_value());
  }

  Certificate gap = certify_pstar_gap(3, 1, cfg);
  double mu_hi = gap.find("mu")->enclosure.hi;
  double nu_lo = gap.find("nu")->enclosure.lo;
  double a = mu_hi + 0.25 * (nu_lo - mu_hi);
  double b = mu_hi + 0.75 * (nu_lo - mu_hi);
  auto in_gap = scan_spectrum(Alphabet::power_star(3, 10), {a, 0.5 * (a + b), b}, 4,
                              cfg, 0.005);
  for (const auto& p : in_gap) CHECK_FALSE(p.attained);
}
