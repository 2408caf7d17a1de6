// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Run from the repository root (reads data/table1.txt).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "cfdim/spectrum.hpp"
#include "cfdim/table.hpp"

using namespace cfdim;

namespace {

int g_failures = 0;

struct Criterion {
  const char* name;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string note;

  explicit Criterion(const char* n) : name(n) {}
  void check(bool cond, const std::string& why) {
    if (!cond && ok) {
      ok = false;
      note = why;
    } else if (!cond) {
      note += "; " + why;
    }
  }
  void finish() {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %-28s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", name, secs,
                note.empty() ? "" : "  -- ", note.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

void criterion1_table() {
  Criterion c("1 table-regression");
  SolverConfig cfg;  // defaults: mesh 200, tol 1e-6
  auto rows = load_table("data/table1.txt");
  c.check(rows.size() == 20, "expected 20 rows");
  auto outcomes = run_table(rows, cfg);
  for (const auto& o : outcomes) {
    c.check(o.computed.intersects(o.row.band),
            o.row.key + " misses band " + to_string(o.row.band, 6) + " with " +
                to_string(o.computed, 6));
    c.check(o.computed.width() <= 1e-4,
            o.row.key + " width " + decimal_up(o.computed.width(), 7) + " > 1e-4");
  }
  c.finish();
}

void criterion2_analytic_oracle() {
  Criterion c("2 analytic-oracle");
  SolverConfig cfg;
  cfg.mesh_size = 128;
  cfg.bisection_tol = 4e-9;  // per-cell target 1e-9
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<long> K(1, 50);
  std::uniform_real_distribution<double> S(0.05, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    long k = K(rng);
    double s = S(rng);
    auto pair = closed_form_eigenpair(static_cast<double>(k), s);
    TransferOperator op(Alphabet::from_elements({BigInt(k)}), s);
    Interval r = radius_enclosure(op, pair.eigenfunction, cfg);
    c.check(r.lo <= pair.eigenvalue.lo && pair.eigenvalue.hi <= r.hi,
            "eigenvalue not contained at k=" + std::to_string(k));
    c.check(r.width() < 1e-8,
            "width " + decimal_up(r.width(), 12) + " at k=" + std::to_string(k) +
                " s=" + exact_decimal(s));
  }
  c.finish();
}

void criterion3_counting_anchor() {
  Criterion c("3 counting-anchor");
  SolverConfig cfg;
  cfg.mesh_size = 64;
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BigInt> elems;
    int sz = 1 + static_cast<int>(rng() % 8);
    for (int i = 0; i < sz; ++i) elems.emplace_back(1 + static_cast<long>(rng() % 1000));
    Alphabet f = Alphabet::from_elements(std::move(elems));
    TransferOperator op(f, 0.0);
    GridFunction w = power_iterate(op, cfg);
    Interval r = radius_enclosure(op, w, cfg);
    c.check(r.contains(static_cast<double>(f.size())),
            "|F| not contained for " + f.to_text());
  }
  c.finish();
}

void criterion4_golden_sandwich() {
  Criterion c("4 golden-sandwich");
  SolverConfig cfg;
  auto g4 = bounds::golden_bounds(4);
  c.check(g4.s_minus >= 0.379998, "s_minus(4) < 0.379998");
  std::vector<long> ns{2, 3, 4};
  for (int p = 3; p <= 11; ++p) ns.push_back(1L << p);
  for (long n : ns) {
    auto g = bounds::golden_bounds(n);
    auto d = dimension(Alphabet::from_elements({BigInt(1), BigInt(n)}), cfg);
    c.check(g.s_minus - 1e-9 <= d.enclosure.lo,
            "s_minus exceeds dim.lo at n=" + std::to_string(n));
    c.check(d.enclosure.hi <= g.s_plus + 1e-9,
            "dim.hi exceeds s_plus at n=" + std::to_string(n));
  }
  c.finish();
}

void criterion5_scalar_checks() {
  Criterion c("5 paper-scalar-checks");
  using namespace bounds;
  Interval g1 = gamma_break(1, 2, Interval(1.0));
  c.check(g1.contains(1369.0 / 900.0) && g1.width() < 1e-12, "gamma(1,2,1)");
  c.check(gamma_break(2, 2, Interval(0.4112)).lo >= 2.5, "gamma(2,2,0.4112)");
  c.check(gamma_break(3, 3, Interval(0.485)).lo >= 1.1, "gamma(3,3,0.485)");
  c.check(gamma_break(4, 3, Interval(0.38)).lo >= 1.01, "gamma(4,3,0.38)");
  c.check(gamma_break(5, 4, Interval(0.31)).lo >= 1.4, "gamma(5,4,0.31)");
  c.check(gamma_break(6, 4, Interval(0.265)).lo > 1.3, "gamma(6,4,0.265)");
  c.check(gamma_prime_break(8, 3, Interval(0.192786)).lo > 1.004,
          "gamma'(8,3,0.192786)");
  c.check(gamma_break(9, 3, Interval(0.162510)).lo > 1.09, "gamma(9,3,0.162510)");
  c.check(gamma_break(10, 3, Interval(0.150820)).lo > 1.02, "gamma(10,3,0.150820)");
  c.check(tau(11).lo >= 1.112, "tau(11)");
  c.check(pstar_gap_refined(3, 1, Interval(0.454, 0.455)).hi < 0.899,
          "refined P* sum q=3 k=1");
  c.check(pstar_gap_refined(2, 2, Interval(0.669, 0.67)).hi < 0.984,
          "refined P* sum q=2 k=2");
  struct BandCheck { int q; Interval band; };
  const BandCheck two_pow[] = {
      {6, Interval(0.215370, 0.215371)},  {7, Interval(0.193748, 0.193749)},
      {8, Interval(0.176544, 0.176545)},  {9, Interval(0.162508, 0.162510)},
      {10, Interval(0.150819, 0.150820)}, {11, Interval(0.140914, 0.140915)}};
  for (const auto& t : two_pow) {
    auto r = mq_gap_two_pow(t.q, t.band);
    c.check(r.verdict == BoundReport::Verdict::below,
            "two-pow gap bound q=" + std::to_string(t.q));
  }
  c.check(mq_gap_three_pow(9, 8, Interval(0.176528, 0.176529)).verdict ==
              BoundReport::Verdict::below,
          "beta(s9,9,8)");
  c.check(mq_gap_three_pow(10, 8, Interval(0.163106, 0.163107)).verdict ==
              BoundReport::Verdict::below,
          "beta(s10,10,8)");
  for (int q = 2; q <= 10; ++q)
    c.check(mq_crude_upper(q).verdict == BoundReport::Verdict::below,
            "alpha(q,s_q) q=" + std::to_string(q));
  c.check(corollary_h(Interval(constant("golden-lower-c")), Interval(4.0)).lo > 1.0,
          "h(4) at c=0.52679");
  c.check(corollary_h(Interval(constant("pow2-lower-c")), Interval(4096.0)).lo >
              constant("pow2-h-threshold"),
          "h(2^12) at c=1.0571");
  c.check(mq_upper_g(11).lo > 0.0, "g(11)");
  c.finish();
}

void criterion6_gap_certificates() {
  Criterion c("6 gap-certificates");
  SolverConfig cfg;  // truncate default 40 <= 60
  Certificate t31 = spectrum::certify_pstar_gap(3, 1, cfg);
  c.check(t31.verdict == "verified", "thm2 q=3 k=1 verdict " + t31.verdict);
  c.check(t31.find("mu")->enclosure.hi < t31.find("nu")->enclosure.lo,
          "thm2 q=3 k=1 no margin");

  Certificate t22 = spectrum::certify_pstar_gap(2, 2, cfg);
  c.check(t22.verdict == "verified", "thm2 q=2 k=2 verdict " + t22.verdict);
  c.check(t22.find("mu")->enclosure.hi < t22.find("nu")->enclosure.lo,
          "thm2 q=2 k=2 no margin");

  Certificate m6 = spectrum::certify_mq_structure(6, cfg);
  c.check(m6.verdict == "verified", "mq-structure q=6 verdict " + m6.verdict);
  c.check(m6.find("gap1-left")->enclosure.hi < m6.find("gap1-right")->enclosure.lo,
          "mq q=6 gap not separated");

  Certificate m9 = spectrum::certify_mq_structure(9, cfg);
  c.check(m9.verdict == "verified", "mq-structure q=9 verdict " + m9.verdict);
  c.check(m9.find("gap1-left")->enclosure.hi < m9.find("gap1-right")->enclosure.lo,
          "mq q=9 gap1 not separated");
  c.check(m9.find("gap2-left")->enclosure.hi < m9.find("gap2-right")->enclosure.lo,
          "mq q=9 gap2 not separated");
  c.finish();
}

void criterion7_perturbation() {
  Criterion c("7 perturbation-bounds");
  SolverConfig cfg;
  auto base = dimension(Alphabet::from_ints({1, 2}), cfg);
  double sigma = base.enclosure.mid();
  auto pc = bounds::perturbation_constants(2, sigma);
  for (long n : {10L, 50L, 100L, 500L}) {
    if (n <= pc.n_threshold) continue;  // the bound only applies past the threshold
    auto d = dimension(Alphabet::from_elements({BigInt(1), BigInt(2), BigInt(n)}), cfg);
    double shift = std::pow(static_cast<double>(n), -2.0 * sigma);
    double tol = d.enclosure.width() + base.enclosure.width();
    c.check(d.enclosure.lo >= sigma + shift / pc.c_f - tol,
            "lower window violated at n=" + std::to_string(n));
    c.check(d.enclosure.hi <= sigma + pc.c_f * shift + tol,
            "upper window violated at n=" + std::to_string(n));
  }
  c.finish();
}

void criterion8_greedy() {
  Criterion c("8 greedy-spectrum");
  SolverConfig cfg;

  auto check_run = [&](const Alphabet& parent, double s, const char* tag) {
    auto res = spectrum::greedy_spectrum_construct(parent, s, 3, cfg);
    c.check(!res.inconclusive && !res.hypothesis_violation,
            std::string(tag) + " did not complete");
    if (res.rounds.size() == 3) {
      c.check(res.rounds[0].dim_f.lo < res.rounds[1].dim_f.lo &&
                  res.rounds[1].dim_f.lo < res.rounds[2].dim_f.lo,
              std::string(tag) + " lower endpoints not strictly increasing");
      c.check(res.rounds[2].dim_f.lo > s - 0.02,
              std::string(tag) + " final value not within 0.02 of s");
      for (const auto& r : res.rounds)
        c.check(r.dim_f.hi < s, std::string(tag) + " round overshot s");
    } else {
      c.check(false, std::string(tag) + " produced fewer than 3 rounds");
    }
  };
  check_run(Alphabet::power(2, 2), 0.4, "P_2@0.4");
  check_run(Alphabet::monomial(1, 2), 0.7, "N@0.7");

  Certificate gap = spectrum::certify_pstar_gap(3, 1, cfg);
  double mid = 0.5 * (gap.find("mu")->enclosure.hi + gap.find("nu")->enclosure.lo);
  auto res = spectrum::greedy_spectrum_construct(Alphabet::power_star(3, 2), mid, 1, cfg);
  c.check(res.hypothesis_violation, "P*_3 gap midpoint: violation not reported");
  c.finish();
}

void criterion9_refinement_nesting() {
  Criterion c("9 refinement-nesting");
  SolverConfig cfg;
  SolverConfig doubled = cfg;
  doubled.mesh_size *= 2;
  doubled.max_subdivision_depth += 2;

  Certificate t31 = spectrum::certify_pstar_gap(3, 1, cfg);
  auto v1 = spectrum::verify_certificate(t31, doubled);
  c.check(v1.ok, "thm2 q=3 k=1: " + v1.diff);

  Certificate cbp = spectrum::certify_critical_breakpoint(11);
  auto v2 = spectrum::verify_certificate(cbp, doubled);
  c.check(v2.ok, "critical-bp q=11: " + v2.diff);

  Certificate dim12 = spectrum::certify_dimension(Alphabet::from_ints({1, 2}), cfg);
  auto v3 = spectrum::verify_certificate(dim12, doubled);
  c.check(v3.ok, "dim {1,2}: " + v3.diff);

  Certificate m6 = spectrum::certify_mq_structure(6, cfg);
  auto v4 = spectrum::verify_certificate(m6, doubled);
  c.check(v4.ok, "mq-structure q=6: " + v4.diff);
  c.finish();
}

}  // namespace

int main() {
  std::printf("acceptance suite (threads: %d)\n", thread_cap());
  criterion1_table();
  criterion2_analytic_oracle();
  criterion3_counting_anchor();
  criterion4_golden_sandwich();
  criterion5_scalar_checks();
  criterion6_gap_certificates();
  criterion7_perturbation();
  criterion8_greedy();
  criterion9_refinement_nesting();
  if (g_failures == 0) {
    std::printf("all criteria pass\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
