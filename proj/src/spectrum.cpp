#include "cfdim/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace cfdim::spectrum {

namespace {

BigInt pow_big(long base, long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(e));
  return r;
}

std::string margin_text(double margin) {
  return exact_decimal(margin);
}

enum class Cmp3 { below, above, straddle };

struct Classified {
  Cmp3 cmp;
  Interval enc;
};

// dim(a) vs s with one refinement retry on a straddle
Classified classify_dim(const Alphabet& a, double s, const SolverConfig& cfg) {
  DimensionResult d = dimension(a, cfg);
  if (d.enclosure.hi < s) return {Cmp3::below, d.enclosure};
  if (d.enclosure.lo >= s) return {Cmp3::above, d.enclosure};
  SolverConfig refined = cfg;
  refined.mesh_size *= 2;
  refined.max_subdivision_depth += 2;
  refined.bisection_tol = cfg.bisection_tol / 50.0;
  d = dimension(a, refined);
  if (d.enclosure.hi < s) return {Cmp3::below, d.enclosure};
  if (d.enclosure.lo >= s) return {Cmp3::above, d.enclosure};
  return {Cmp3::straddle, d.enclosure};
}

// Premise checks compare solver enclosures against cutoffs sitting ~2e-6
// above the true dimensions, so they always run at full resolution.
SolverConfig tight_config(const SolverConfig& cfg) {
  SolverConfig t = cfg;
  t.mesh_size = std::max(cfg.mesh_size, 200);
  t.bisection_tol = std::min(cfg.bisection_tol, 1.5e-6);
  t.truncate = std::max(cfg.truncate, 40);
  return t;
}

int require_int(const std::map<std::string, std::string>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ParamError("missing parameter '" + key + "'");
  return std::stoi(it->second);
}

}  // namespace

Alphabet pstar_initial_segment(int q, int k) {
  if (q < 2 || k < 0) throw ParamError("initial segment needs q >= 2, k >= 0");
  return Alphabet::power_star(q, k + 1);
}

Alphabet pstar_without_power(int q, int k, int truncate) {
  if (q < 2 || k < 1) throw ParamError("needs q >= 2, k >= 1");
  if (truncate < 1) throw ParamError("truncate must be >= 1");
  std::vector<BigInt> elems;
  elems.emplace_back(1);
  for (int j = 1; j <= k - 1; ++j) elems.push_back(pow_big(q, j));
  for (int j = k + 1; j <= k + truncate; ++j) elems.push_back(pow_big(q, j));
  return Alphabet::from_elements(std::move(elems))
      .adopt_family(Alphabet::power_star(q, 2))
      .with_infinite_tail();
}

Alphabet mq_without(int q, int remove, int truncate) {
  if (q < 1 || remove < 2) throw ParamError("needs q >= 1, remove >= 2");
  if (truncate <= remove) throw ParamError("truncate must exceed the removed base");
  std::vector<BigInt> elems;
  for (int n = 1; n <= truncate; ++n)
    if (n != remove) elems.push_back(pow_big(n, q));
  return Alphabet::from_elements(std::move(elems))
      .adopt_family(Alphabet::monomial(q, 1))
      .with_infinite_tail();
}

BreakPointRecord find_strict_break_point(const Alphabet& parent, const Alphabet& f,
                                         double s, const SolverConfig& cfg) {
  if (!(s > 0.0 && s < 1.0)) throw ParamError("s must lie in (0,1)");
  BreakPointRecord rec;
  rec.f = f;
  rec.s = s;

  Classified base = classify_dim(f, s, cfg);
  rec.dim_f = base.enc;
  if (base.cmp == Cmp3::above || base.cmp == Cmp3::straddle)
    throw ParamError("dim(f) must lie certifiably below s");

  // dim(f u {a}) decreases in a, so the first candidate decides existence
  BigInt cursor = f.max();
  BigInt candidate = parent.family_elements_above(cursor, 1).at(0);
  Classified cur = classify_dim(f.with_element(candidate), s, cfg);
  if (cur.cmp == Cmp3::below)
    throw NoBreakPointError("no parent element pushes dim past s = " +
                            exact_decimal(s));
  if (cur.cmp == Cmp3::straddle) {
    rec.status = BreakPointRecord::Status::inconclusive;
    rec.dim_with_break = cur.enc;
    return rec;
  }

  for (int steps = 0; steps < 500; ++steps) {
    BigInt next = parent.family_elements_above(candidate, 1).at(0);
    Classified nxt = classify_dim(f.with_element(next), s, cfg);
    if (nxt.cmp == Cmp3::above) {
      candidate = next;
      cur = nxt;
      continue;
    }
    if (nxt.cmp == Cmp3::straddle) {
      rec.status = BreakPointRecord::Status::inconclusive;
      rec.dim_with_break = cur.enc;
      rec.dim_with_next = nxt.enc;
      return rec;
    }
    rec.status = BreakPointRecord::Status::ok;
    rec.break_element = candidate;
    rec.dim_with_break = cur.enc;
    rec.dim_with_next = nxt.enc;
    return rec;
  }
  rec.status = BreakPointRecord::Status::inconclusive;
  return rec;
}

GreedyResult greedy_spectrum_construct(const Alphabet& parent, double s, int rounds,
                                       const SolverConfig& cfg) {
  if (!(s > 0.0 && s < 1.0)) throw ParamError("s must lie in (0,1)");
  if (rounds < 1) throw ParamError("rounds must be >= 1");
  if (parent.family() == Family::Explicit)
    throw ParamError("greedy construction needs a family parent");

  GreedyResult out;
  BigInt cursor = parent.gamma();
  Alphabet f = Alphabet::from_elements({cursor}).adopt_family(parent);
  Interval dim_f(0.0, 0.0);

  for (int round = 0; round < rounds; ++round) {
    // grow by consecutive parent elements to the crossing
    BigInt crossing;
    bool crossed = false;
    for (int g = 0; g < 400 && !crossed; ++g) {
      BigInt next = parent.family_elements_above(cursor, 1).at(0);
      Classified c = classify_dim(f.with_element(next), s, cfg);
      switch (c.cmp) {
        case Cmp3::below:
          f = f.with_element(next);
          cursor = next;
          dim_f = c.enc;
          break;
        case Cmp3::above:
          crossing = next;
          crossed = true;
          break;
        case Cmp3::straddle:
          out.inconclusive = true;
          return out;
      }
    }
    if (!crossed) {
      out.inconclusive = true;
      return out;
    }

    // strict break point: last element keeping dim >= s
    BigInt bp = crossing;
    for (int steps = 0;; ++steps) {
      if (steps >= 500) {
        out.inconclusive = true;
        return out;
      }
      BigInt next = parent.family_elements_above(bp, 1).at(0);
      Classified c = classify_dim(f.with_element(next), s, cfg);
      if (c.cmp == Cmp3::above) {
        bp = next;
        continue;
      }
      if (c.cmp == Cmp3::straddle) {
        out.inconclusive = true;
        return out;
      }
      break;
    }

    // hypothesis: dim(f u T) > s for T = everything past the break point
    GreedyRound rec;
    rec.f = f;
    rec.dim_f = dim_f;
    rec.break_element = bp;
    Alphabet with_tail = f;
    for (BigInt& e : parent.family_elements_above(bp, cfg.truncate))
      with_tail = with_tail.with_element(e);
    with_tail = with_tail.adopt_family(parent).with_infinite_tail();
    DimensionResult t = dimension(with_tail, cfg);
    rec.tail_enclosure = t.enclosure;
    rec.hypothesis_ok = t.enclosure.lo > s;
    rec.hypothesis_violated = t.enclosure.hi <= s;
    out.rounds.push_back(rec);

    if (rec.hypothesis_violated) {
      out.hypothesis_violation = true;
      out.violation_round = round;
      return out;
    }
    cursor = bp;  // skip past the break point; it is not added to f
  }
  return out;
}

Certificate certify_pstar_gap(int q, int k, const SolverConfig& cfg) {
  if (!((q >= 3 && k >= 1) || (q == 2 && k >= 2)))
    throw ParamError("theorem range: q >= 3 with k >= 1, or q = 2 with k >= 2");
  Certificate cert;
  cert.statement_id = "thm2";
  cert.add_input("q", std::to_string(q));
  cert.add_input("k", std::to_string(k));
  cert.add_input("config", cfg.to_text());

  Alphabet nu_alpha = pstar_initial_segment(q, k);
  DimensionResult nu = dimension(nu_alpha, cfg);
  Alphabet mu_alpha = pstar_without_power(q, k, cfg.truncate);
  DimensionResult mu = dimension(mu_alpha, cfg);
  TransferOperator op_probe(mu_alpha, 0.5);  // materializes the tail majorant
  cert.add_enclosure("nu", nu.enclosure, nu_alpha.to_text());
  cert.add_enclosure("mu", mu.enclosure,
                     mu_alpha.to_text() + " tail:" + op_probe.tail->to_text());

  bool refined = (q == 3 && k == 1) || (q == 2 && k == 2);
  Interval gamma_value = refined
                             ? bounds::pstar_gap_refined(q, k, nu.enclosure)
                             : bounds::pstar_gap_gamma(q, k, nu.enclosure);
  std::ostringstream gin;
  gin << "q=" << q << " k=" << k << " s=" << to_string(nu.enclosure, 9);
  cert.add_report(bounds::make_report(
      refined ? "fsharp-gamma-refined" : "fsharp-gamma", gin.str(), gamma_value, 1.0));

  bool separated = mu.enclosure.hi < nu.enclosure.lo;
  bool contraction = gamma_value.hi < 1.0;
  cert.add_note("separation",
                separated ? "mu.hi < nu.lo by " +
                                margin_text(nu.enclosure.lo - mu.enclosure.hi)
                          : "not separated");
  bool positive = mu.enclosure.lo > 0.0;
  cert.verdict = (separated && contraction && positive) ? "verified" : "inconclusive";
  return cert;
}

Certificate certify_fsharp_contraction(int q, const SolverConfig& cfg) {
  if (q < 2) throw ParamError("needs q >= 2");
  Certificate cert;
  cert.statement_id = "fsharp";
  cert.add_input("q", std::to_string(q));
  cert.add_input("config", cfg.to_text());

  Alphabet f = (q >= 3) ? Alphabet::from_elements({BigInt(1), BigInt(q)})
                        : Alphabet::from_ints({1, 2, 4});
  int k = (q >= 3) ? 1 : 2;
  Alphabet parent = Alphabet::power_star(q, k + 2);
  Alphabet sharp = f_sharp(f, parent, cfg.truncate);

  DimensionResult df = dimension(f, cfg);
  DimensionResult ds = dimension(sharp, cfg);
  cert.add_enclosure("dim-f", df.enclosure, f.to_text());
  TransferOperator probe(sharp, 0.5);
  cert.add_enclosure("dim-fsharp", ds.enclosure,
                     sharp.to_text() + " tail:" + probe.tail->to_text());

  bool refined = (q == 3) || (q == 2);
  Interval gamma_value = refined ? bounds::pstar_gap_refined(q, k, df.enclosure)
                                 : bounds::pstar_gap_gamma(q, k, df.enclosure);
  std::ostringstream gin;
  gin << "q=" << q << " k=" << k << " s=" << to_string(df.enclosure, 9);
  cert.add_report(bounds::make_report(
      refined ? "fsharp-gamma-refined" : "fsharp-gamma", gin.str(), gamma_value, 1.0));

  bool contracted = ds.enclosure.hi < df.enclosure.lo;
  cert.add_note("contraction",
                contracted ? "dim(f-sharp).hi < dim(f).lo by " +
                                 margin_text(df.enclosure.lo - ds.enclosure.hi)
                           : "not separated");
  cert.verdict = (contracted && gamma_value.hi < 1.0) ? "verified" : "inconclusive";
  return cert;
}

namespace {

struct Ingredient {
  int n0;
  double s_pt;
  bool prime_variant;            // use the six-term gamma
  std::string premise_alphabet;  // empty when the crude upper bound is the premise
};

// break-point ingredients for the interval interiors of DS(M_q)
std::vector<Ingredient> mq_ingredients(int q) {
  switch (q) {
    case 1: return {{2, 1.0, false, ""}};
    case 2: return {{2, 0.4112, false, "explicit:[1,4]"}, {3, 0.67, false, ""}};
    case 3: return {{2, 0.334, false, "explicit:[1,8]"}, {3, 0.485, false, ""}};
    case 4: return {{2, 0.281, false, "explicit:[1,16]"}, {3, 0.38, false, ""}};
    case 5:
      return {{3, 0.273, false, "explicit:[1,32,243]"}, {4, 0.31, false, ""}};
    case 6:
      return {{3, 0.238626, false, "explicit:[1,64,729]"}, {4, 0.265, false, ""}};
    case 7:
      return {{3, 0.212933, false, "explicit:[1,128,2187]"}, {4, 0.234, false, ""}};
    case 8:
      return {{3, 0.192786, true, "explicit:[1,256,6561]"}, {4, 0.21, false, ""}};
    case 9:
      return {{3, 0.162510, false, "explicit:[1,512]"}, {4, 0.191, false, ""}};
    case 10:
      return {{3, 0.150820, false, "explicit:[1,1024]"}, {4, 0.175, false, ""}};
    default: return {};
  }
}

}  // namespace

Certificate certify_mq_structure(int q, const SolverConfig& cfg) {
  if (q < 1) throw ParamError("needs q >= 1");
  Certificate cert;
  cert.statement_id = "mq-structure";
  cert.add_input("q", std::to_string(q));
  cert.add_input("config", cfg.to_text());

  bool all_ok = true;

  if (q >= 11) {
    Interval t = bounds::tau(q);
    cert.add_report(bounds::make_report("tau", "q=" + std::to_string(q), t, 1.0));
    auto upper = bounds::mq_upper(q);
    cert.add_report(upper);
    bool ok = t.lo > 1.0 && upper.verdict == bounds::BoundReport::Verdict::below;
    cert.add_note("structure", "finite union of nontrivial closed intervals; "
                               "critical break point value 2q");
    cert.verdict = ok ? "verified" : "inconclusive";
    return cert;
  }

  // break-point ingredients shared by every interval interior
  for (const Ingredient& ing : mq_ingredients(q)) {
    Interval value = ing.prime_variant
                         ? bounds::gamma_prime_break(q, ing.n0, Interval(ing.s_pt))
                         : bounds::gamma_break(q, ing.n0, Interval(ing.s_pt));
    std::ostringstream gin;
    gin << "q=" << q << " n0=" << ing.n0 << " s=" << exact_decimal(ing.s_pt);
    std::string name = (ing.prime_variant ? "gamma-prime-break-n0-" : "gamma-break-n0-") +
                       std::to_string(ing.n0);
    cert.add_report(bounds::make_report(name, gin.str(), value, 1.0));
    if (!(value.lo > 1.0)) all_ok = false;

    if (ing.premise_alphabet.empty()) {
      if (q >= 2) {
        auto crude = bounds::mq_crude_upper(q);
        // the evaluation point must be the certified upper bound
        if (bounds::mq_crude_exponent(q) != ing.s_pt) all_ok = false;
        cert.add_report(crude);
        if (crude.verdict != bounds::BoundReport::Verdict::below) all_ok = false;
      }
    } else {
      Alphabet premise = Alphabet::parse(ing.premise_alphabet);
      DimensionResult d = dimension(premise, tight_config(cfg));
      cert.add_enclosure("premise-dim-n0-" + std::to_string(ing.n0), d.enclosure,
                         ing.premise_alphabet);
      if (!(d.enclosure.hi <= ing.s_pt)) all_ok = false;
    }
  }

  // endpoint dim(M_q)
  Alphabet mq = Alphabet::monomial(q, cfg.truncate).with_infinite_tail();
  DimensionResult dmq = dimension(mq, cfg);
  cert.add_enclosure("dim-mq", dmq.enclosure, mq.to_text());

  if (q <= 5) {
    if (q == 5) {
      // the removed-2^5 comparison: dim({1,2^5}) < dim({1,3^5..100^5});
      // the true margin is ~8e-5, so this needs full resolution
      DimensionResult left = dimension(Alphabet::from_ints({1, 32}), tight_config(cfg));
      std::vector<BigInt> big{BigInt(1)};
      for (int n = 3; n <= 100; ++n) big.push_back(pow_big(n, 5));
      DimensionResult right =
          dimension(Alphabet::from_elements(std::move(big)), tight_config(cfg));
      cert.add_enclosure("dim-1-2pow5", left.enclosure, "explicit:[1,32]");
      cert.add_enclosure("dim-1-3pow5-100pow5", right.enclosure,
                         "explicit:[1,3^5..100^5]");
      bool sep = left.enclosure.hi < right.enclosure.lo;
      cert.add_note("base-comparison",
                    sep ? "dim({1,2^5}) < dim({1,3^5..100^5}) by " +
                              margin_text(right.enclosure.lo - left.enclosure.hi)
                        : "not separated");
      if (!sep) all_ok = false;
    }
    cert.add_note("structure", "full spectrum: DS = [0, dim-mq]");
    cert.verdict = all_ok ? "verified" : "inconclusive";
    return cert;
  }

  // gap 1: dim(M_q \ {2^q}) < dim({1, 2^q})
  Alphabet right1_alpha =
      Alphabet::from_elements({BigInt(1), pow_big(2, q)});
  DimensionResult right1 = dimension(right1_alpha, cfg);
  Alphabet left1_alpha = mq_without(q, 2, cfg.truncate);
  DimensionResult left1 = dimension(left1_alpha, cfg);
  cert.add_enclosure("gap1-left", left1.enclosure, left1_alpha.to_text());
  cert.add_enclosure("gap1-right", right1.enclosure, right1_alpha.to_text());
  auto gap1_report = bounds::mq_gap_two_pow(q, right1.enclosure);
  cert.add_report(gap1_report);
  if (gap1_report.verdict != bounds::BoundReport::Verdict::below) all_ok = false;
  bool sep1 = left1.enclosure.hi < right1.enclosure.lo;
  cert.add_note("gap1-separation",
                sep1 ? "separated by " +
                           margin_text(right1.enclosure.lo - left1.enclosure.hi)
                     : "not separated");
  if (!sep1) all_ok = false;

  if (q <= 8) {
    cert.add_note("structure", "two intervals: [0, gap1-left] u [gap1-right, dim-mq]");
    cert.verdict = all_ok ? "verified" : "inconclusive";
    return cert;
  }

  // gap 2 (q in {9,10}): dim(M_q \ {3^q}) < dim({1, 2^q, 3^q})
  Alphabet right2_alpha =
      Alphabet::from_elements({BigInt(1), pow_big(2, q), pow_big(3, q)});
  DimensionResult right2 = dimension(right2_alpha, cfg);
  Alphabet left2_alpha = mq_without(q, 3, cfg.truncate);
  DimensionResult left2 = dimension(left2_alpha, cfg);
  cert.add_enclosure("gap2-left", left2.enclosure, left2_alpha.to_text());
  cert.add_enclosure("gap2-right", right2.enclosure, right2_alpha.to_text());
  auto gap2_report = bounds::mq_gap_three_pow(q, 8, right2.enclosure);
  cert.add_report(gap2_report);
  if (gap2_report.verdict != bounds::BoundReport::Verdict::below) all_ok = false;
  bool sep2 = left2.enclosure.hi < right2.enclosure.lo;
  cert.add_note("gap2-separation",
                sep2 ? "separated by " +
                           margin_text(right2.enclosure.lo - left2.enclosure.hi)
                     : "not separated");
  if (!sep2) all_ok = false;

  cert.add_note("structure",
                "three intervals: [0, gap1-left] u [gap1-right, gap2-left] u "
                "[gap2-right, dim-mq]");
  cert.verdict = all_ok ? "verified" : "inconclusive";
  return cert;
}

Certificate certify_critical_breakpoint(int q) {
  if (q < 11) throw ParamError("critical break point certificate needs q >= 11");
  Certificate cert;
  cert.statement_id = "critical-bp";
  cert.add_input("q", std::to_string(q));
  Interval t = bounds::tau(q);
  cert.add_report(bounds::make_report("tau", "q=" + std::to_string(q), t, 1.0));
  auto upper = bounds::mq_upper(q);
  cert.add_report(upper);
  Interval g11 = bounds::mq_upper_g(11);
  cert.add_report(bounds::make_report("mu-monotonicity-g", "x=11", g11, 0.0));
  bool ok = t.lo > 1.0 && upper.verdict == bounds::BoundReport::Verdict::below &&
            g11.lo > 0.0;
  cert.add_note("conclusion", "critical break point value 2q; DS(M_q) is a "
                              "finite union of nontrivial closed intervals");
  cert.verdict = ok ? "verified" : "inconclusive";
  return cert;
}

Certificate certify_submultiplicative(const Alphabet& a, int max_index) {
  Certificate cert;
  cert.statement_id = "submult";
  cert.add_input("alphabet", a.to_text());
  cert.add_input("max-index", std::to_string(max_index));
  SubmultiplicativeCheck chk = check_submultiplicative(a, max_index);
  if (chk.range_limited)
    cert.add_note("scope", "empirical range check up to index " +
                               std::to_string(max_index) + "; not a proof");
  for (const auto& v : chk.violations)
    cert.add_note("violation", "a_" + std::to_string(v.n) + " * a_" +
                                   std::to_string(v.m) + " = " +
                                   BigInt(v.an * v.am).get_str() + " < a_" +
                                   std::to_string(v.n + v.m) + " = " +
                                   v.anm.get_str());
  cert.add_note("condition", chk.holds ? "a_n a_m >= a_{n+m} holds on the range"
                                       : "violated");
  cert.verdict = chk.holds ? "verified" : "failed";
  return cert;
}

Certificate certify_monotonicity(const Alphabet& a, const Alphabet& b,
                                 const SolverConfig& cfg) {
  Certificate cert;
  cert.statement_id = "monotone";
  cert.add_input("a", a.to_text());
  cert.add_input("b", b.to_text());
  cert.add_input("config", cfg.to_text());
  MonotonicityCheck chk = dimension_monotonicity_check(a, b, cfg);
  cert.add_enclosure("dim-a", chk.dim_a, chk.a_text);
  cert.add_enclosure("dim-b", chk.dim_b, chk.b_text);
  cert.add_note("consistency", chk.consistent
                                   ? "dim(b).lo <= dim(a).hi as required"
                                   : "violated: solver bug");
  cert.verdict = chk.consistent ? "verified" : "failed";
  return cert;
}

Certificate certify_dimension(const Alphabet& a, const SolverConfig& cfg) {
  Certificate cert;
  cert.statement_id = "dim";
  cert.add_input("alphabet", a.to_text());
  cert.add_input("config", cfg.to_text());
  DimensionResult d = dimension(a, cfg);
  std::string detail = a.to_text();
  if (a.tail_infinite()) {
    TransferOperator probe(a, 0.5);
    detail += " tail:" + probe.tail->to_text();
  }
  cert.add_enclosure("dim", d.enclosure, detail);
  cert.add_note("tolerance", d.tolerance_met ? "met" : "widest certified enclosure");
  cert.verdict = d.tolerance_met ? "verified" : "inconclusive";
  return cert;
}

Certificate certify(const std::string& statement_id,
                    const std::map<std::string, std::string>& params,
                    const SolverConfig& cfg) {
  if (statement_id == "thm2")
    return certify_pstar_gap(require_int(params, "q"), require_int(params, "k"), cfg);
  if (statement_id == "mq-structure")
    return certify_mq_structure(require_int(params, "q"), cfg);
  if (statement_id == "critical-bp")
    return certify_critical_breakpoint(require_int(params, "q"));
  if (statement_id == "fsharp")
    return certify_fsharp_contraction(require_int(params, "q"), cfg);
  if (statement_id == "submult") {
    auto it = params.find("alphabet");
    if (it == params.end()) throw ParamError("missing parameter 'alphabet'");
    return certify_submultiplicative(Alphabet::parse(it->second),
                                     require_int(params, "max-index"));
  }
  if (statement_id == "dim") {
    auto it = params.find("alphabet");
    if (it == params.end()) throw ParamError("missing parameter 'alphabet'");
    return certify_dimension(Alphabet::parse(it->second), cfg);
  }
  if (statement_id == "monotone") {
    auto ia = params.find("a"), ib = params.find("b");
    if (ia == params.end() || ib == params.end())
      throw ParamError("monotone needs parameters 'a' and 'b'");
    return certify_monotonicity(Alphabet::parse(ia->second),
                                Alphabet::parse(ib->second), cfg);
  }
  throw ParamError("unknown statement id '" + statement_id + "'");
}

VerifyOutcome verify_certificate(const Certificate& stored,
                                 const std::optional<SolverConfig>& override_cfg) {
  VerifyOutcome out;
  std::ostringstream diff;

  // internal consistency of stored report verdicts
  for (const auto& r : stored.results) {
    if (!r.is_report()) continue;
    std::string expect;
    if (r.enclosure.lo > r.threshold) expect = "above";
    else if (r.enclosure.hi < r.threshold) expect = "below";
    else expect = "inconclusive";
    if (expect != r.verdict)
      diff << "stored report '" << r.name << "' verdict " << r.verdict
           << " does not match its own value/threshold (" << expect << ")\n";
  }

  // recompute from stored inputs
  std::map<std::string, std::string> params(stored.inputs.begin(), stored.inputs.end());
  SolverConfig cfg;
  if (override_cfg) cfg = *override_cfg;
  else if (!stored.input("config").empty()) cfg = SolverConfig::parse(stored.input("config"));
  if (params.count("max-index") == 0 && stored.statement_id == "submult")
    diff << "submult certificate missing max-index\n";

  Certificate rec;
  try {
    rec = certify(stored.statement_id, params, cfg);
  } catch (const Error& e) {
    diff << "recomputation failed: " << e.what() << "\n";
    out.ok = false;
    out.verdict = "failed";
    out.diff = diff.str();
    return out;
  }

  const double slack = 1e-12;
  for (const auto& r : stored.results) {
    if (r.kind == "note") continue;
    const Certificate::Result* m = rec.find(r.name);
    if (!m) {
      diff << "missing recomputed result '" << r.name << "'\n";
      continue;
    }
    if (m->enclosure.lo < r.enclosure.lo - slack ||
        m->enclosure.hi > r.enclosure.hi + slack)
      diff << "result '" << r.name << "': recomputed " << to_string(m->enclosure, 9)
           << " not contained in stored " << to_string(r.enclosure, 9) << "\n";
    if (r.is_report()) {
      if (m->threshold != r.threshold)
        diff << "result '" << r.name << "': threshold changed\n";
      if (m->verdict != r.verdict)
        diff << "result '" << r.name << "': verdict " << r.verdict << " -> "
             << m->verdict << "\n";
    }
  }
  if (rec.verdict != stored.verdict)
    diff << "overall verdict " << stored.verdict << " -> " << rec.verdict << "\n";

  out.recomputed = rec;
  out.diff = diff.str();
  out.ok = out.diff.empty();
  out.verdict = out.ok ? "verified" : "failed";
  return out;
}

std::vector<ScanPoint> scan_spectrum(const Alphabet& parent,
                                     const std::vector<double>& grid,
                                     int max_subset_size, const SolverConfig& cfg,
                                     double attain_tol) {
  if (max_subset_size < 1) throw ParamError("max_subset_size must be >= 1");
  SolverConfig fast = cfg;
  fast.mesh_size = 48;
  fast.bisection_tol = std::min(1e-3, attain_tol / 2);
  fast.power_iters = 30;

  const auto& elems = parent.elements();
  std::vector<ScanPoint> out;
  out.reserve(grid.size());
  for (double s : grid) {
    ScanPoint pt;
    pt.s = s;
    pt.nearest = 0.0;
    long budget = 600;

    // DFS over index-increasing subsets; supersets only raise the dimension,
    // so a branch already above s+tol cannot come back
    std::function<void(std::vector<std::size_t>&, std::size_t)> rec =
        [&](std::vector<std::size_t>& chosen, std::size_t start) {
          if (pt.attained || budget <= 0) return;
          for (std::size_t i = start; i < elems.size(); ++i) {
            chosen.push_back(i);
            std::vector<BigInt> sub;
            for (std::size_t idx : chosen) sub.push_back(elems[idx]);
            Alphabet a = Alphabet::from_elements(std::move(sub));
            double d = dimension_fast(a, fast).enclosure.mid();
            --budget;
            if (std::abs(d - s) < std::abs(pt.nearest - s)) pt.nearest = d;
            if (std::abs(d - s) <= attain_tol) {
              pt.attained = true;
              pt.witness = a;
              chosen.pop_back();
              return;
            }
            if (d < s + attain_tol &&
                chosen.size() < static_cast<std::size_t>(max_subset_size))
              rec(chosen, i + 1);
            chosen.pop_back();
            if (pt.attained || budget <= 0) return;
          }
        };
    std::vector<std::size_t> chosen;
    rec(chosen, 0);
    out.push_back(std::move(pt));
  }
  return out;
}

}  // namespace cfdim::spectrum
