#include "cfdim/bounds.hpp"

#include <cmath>
#include <sstream>

#include "cfdim/errors.hpp"

namespace cfdim::bounds {

namespace {

Interval golden_ratio() {
  return (Interval::one() + sqrt(Interval(5.0))) / Interval(2.0);
}

Interval pow2i(int q) {
  Interval r = Interval::one();
  for (int i = 0; i < q; ++i) r = r * Interval(2.0);
  return r;
}

Interval powni(long n, int q) {
  Interval r = Interval::one();
  Interval b(static_cast<double>(n));
  for (int i = 0; i < q; ++i) r = r * b;
  return r;
}

// Hull of f over the band, evaluated on `pieces` subintervals. Dependency
// slack of one-shot interval evaluation scales with the band width; the
// cover restores it to the subinterval width.
template <class F>
Interval eval_banded(F f, const Interval& band, int pieces) {
  if (band.is_point() || pieces <= 1) return f(band);
  Interval acc = f(Interval(band.lo, band.lo + band.width() / pieces));
  for (int i = 1; i < pieces; ++i) {
    double a = band.lo + band.width() * i / pieces;
    double b = (i + 1 == pieces) ? band.hi : band.lo + band.width() * (i + 1) / pieces;
    acc = hull(acc, f(Interval(a, b)));
  }
  return acc;
}

}  // namespace

std::string BoundReport::verdict_text() const {
  switch (verdict) {
    case Verdict::above: return "above";
    case Verdict::below: return "below";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

BoundReport make_report(std::string name, std::string inputs, Interval value,
                        double threshold) {
  BoundReport r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.value = value;
  r.threshold = threshold;
  if (value.lo > threshold) r.verdict = BoundReport::Verdict::above;
  else if (value.hi < threshold) r.verdict = BoundReport::Verdict::below;
  else r.verdict = BoundReport::Verdict::inconclusive;
  return r;
}

const std::vector<std::pair<std::string, double>>& constants_table() {
  static const std::vector<std::pair<std::string, double>> table = {
      {"golden-lower-c", 0.52679},
      {"pow2-lower-c", 1.0571},
      {"pow2-lower-weak", 1.525},
      {"pow2-h-threshold", 1.005},
      {"pstar-refined-q3k1", 0.899},
      {"pstar-refined-q2k2", 0.984},
      {"pstar-plain-q3k2", 0.92},
      {"two-pow-gap-q6", 0.96},
      {"two-pow-gap-q7", 0.85},
      {"two-pow-gap-q8", 0.78},
      {"two-pow-gap-q9", 0.72},
      {"two-pow-gap-q10", 0.67},
      {"two-pow-gap-q11", 0.63},
      {"two-pow-gap-tail", 0.98},
      {"three-pow-gap-q9", 0.99},
      {"three-pow-gap-q10", 0.94},
      {"tau-11", 1.112},
      {"mq-crude-s2", 0.67},
      {"mq-crude-s3", 0.485},
      {"mq-crude-s4", 0.38},
      {"mq-crude-s5", 0.31},
      {"mq-crude-s6", 0.265},
      {"mq-crude-s7", 0.234},
      {"mq-crude-s8", 0.21},
      {"mq-crude-s9", 0.191},
      {"mq-crude-s10", 0.175},
      {"mq-crude-alpha2", 0.986},
      {"mq-crude-alpha3", 0.967},
      {"mq-crude-alpha4", 0.975},
      {"mq-crude-alpha5", 0.995},
      {"mq-crude-alpha6", 0.99985},
      {"mq-crude-alpha7", 0.9983},
      {"mq-crude-alpha8", 0.998},
      {"mq-crude-alpha9", 0.998},
      {"mq-crude-alpha10", 0.99891},
      {"gamma-q1-n2-s1", 1369.0 / 900.0},
      {"gamma-q2-n2", 2.5},
      {"gamma-q2-n3", 1.3},
      {"gamma-q3-n2", 1.5},
      {"gamma-q3-n3", 1.1},
      {"gamma-q4-n2", 1.14},
      {"gamma-q4-n3", 1.01},
      {"gamma-q5-n3", 1.25},
      {"gamma-q5-n4", 1.4},
      {"gamma-q6-n3", 1.13},
      {"gamma-q6-n4", 1.3},
      {"gamma-q7-n3", 1.05},
      {"gamma-q7-n4", 1.2},
      {"gamma-q8-n4", 1.2},
      {"gamma-prime-q8-n3", 1.004},
      {"gamma-q9-n3", 1.09},
      {"gamma-q9-n4", 1.1},
      {"gamma-q10-n3", 1.02},
      {"gamma-q10-n4", 1.1},
  };
  return table;
}

double constant(const std::string& id) {
  for (const auto& [key, value] : constants_table())
    if (key == id) return value;
  throw ParamError("unknown constant id '" + id + "'");
}

GoldenBounds golden_bounds(long n) {
  if (n < 2) throw ParamError("golden_bounds needs n >= 2");
  Interval lambda = golden_ratio();
  Interval nn(static_cast<double>(n));

  auto lower_test = [&](double s) {  // lambda^{-2s} (1 + (lambda/(n+lambda-1))^{2s})
    Interval two_s(2.0 * s);
    return pow(lambda, -two_s) *
           (Interval::one() + pow(lambda / (nn + lambda - Interval::one()), two_s));
  };
  auto upper_test = [&](double s) {  // lambda^{-2s} (1 + ((lambda+1)/(n+lambda))^{2s})
    Interval two_s(2.0 * s);
    return pow(lambda, -two_s) *
           (Interval::one() + pow((lambda + Interval::one()) / (nn + lambda), two_s));
  };

  // both tests are strictly decreasing in s with value 2 at s = 0
  double a = 0.0, b = 1.0;
  for (int it = 0; it < 200 && b - a > 1e-10; ++it) {
    double m = 0.5 * (a + b);
    if (lower_test(m).lo >= 1.0) a = m;
    else b = m;  // also on straddle: only a must stay certified
  }
  double s_minus = a;

  a = 0.0;
  b = 1.0;
  for (int it = 0; it < 200 && b - a > 1e-10; ++it) {
    double m = 0.5 * (a + b);
    if (upper_test(m).hi <= 1.0) b = m;
    else a = m;
  }
  double s_plus = b;
  if (!(s_minus <= s_plus)) throw Error("internal: golden bounds crossed");
  return {s_minus, s_plus};
}

double generic_lower(long n) {
  if (n < 4) throw ParamError("generic_lower needs n >= 4");
  return (Interval(constant("golden-lower-c")) /
          log(Interval(static_cast<double>(n))))
      .lo;
}

Interval corollary_h(Interval c, Interval x) {
  Interval lambda = golden_ratio();
  Interval two_s = 2.0 * (c / log(x));
  return pow(lambda, -two_s) + pow(x + lambda - Interval::one(), -two_s);
}

PowerLower power_lower_2q(int q) {
  if (q < 12) throw ParamError("power_lower_2q needs q >= 12");
  Interval qd(static_cast<double>(q));
  PowerLower out;
  out.strong = (Interval(constant("pow2-lower-c")) / (qd * log(Interval(2.0)))).lo;
  out.weak = (Interval(constant("pow2-lower-weak")) / qd).lo;
  return out;
}

BoundReport mq_upper(int q) {
  if (q < 11) throw ParamError("mq_upper needs q >= 11");
  Interval lambda = golden_ratio();
  Interval s = Interval(2.0) / sqrt(Interval(static_cast<double>(q)));
  Interval two_s = 2.0 * s;
  Interval two_qs = two_s * static_cast<double>(q);
  Interval mu = pow(lambda, -two_s) +
                pow(lambda / pow2i(q), two_s) *
                    (Interval::one() + Interval(2.0) / (two_qs - Interval::one()));
  std::ostringstream in;
  in << "q=" << q << " s=2/sqrt(q)";
  return make_report("mq-upper-mu", in.str(), mu, 1.0);
}

Interval mq_upper_g(int x) {
  Interval lambda = golden_ratio();
  Interval sq11 = sqrt(Interval(11.0));
  Interval xi(static_cast<double>(x));
  Interval first = pow(lambda, Interval(-8.0) / sq11) *
                   pow(Interval(2.0), Interval(4.0) * sqrt(xi));
  Interval bracket =
      (Interval::one() + Interval(2.0) / (Interval(4.0) * sq11 - Interval::one())) *
          (log(Interval(2.0)) / log(lambda) * xi + Interval::one()) +
      Interval(2.0) / (log(lambda) * (Interval(16.0) - Interval(8.0) / sq11));
  return first - bracket;
}

double mq_crude_exponent(int q) {
  if (q < 2 || q > 10) throw ParamError("mq_crude exponent defined for q in 2..10");
  return constant("mq-crude-s" + std::to_string(q));
}

BoundReport mq_crude_upper(int q) {
  double s = mq_crude_exponent(q);
  Interval lambda = golden_ratio();
  Interval two_s(2.0 * s);
  Interval two_qs = two_s * static_cast<double>(q);
  Interval lp1 = lambda + Interval::one();
  Interval alpha =
      pow(lambda, -two_s) *
      (Interval::one() + pow(lp1 / (pow2i(q) + Interval::one()), two_s) +
       pow(lp1 / (powni(3, q) + Interval::one()), two_s) +
       pow(lp1 / (powni(4, q) + Interval::one()), two_s) +
       pow(lp1, two_s) * pow(Interval(4.0), Interval::one() - two_qs) /
           (two_qs - Interval::one()));
  std::ostringstream in;
  in << "q=" << q << " s=" << s;
  return make_report("mq-crude-alpha", in.str(), alpha, 1.0);
}

Interval gamma_break(int q, int n0, Interval s) {
  if (n0 < 2) throw ParamError("gamma_break needs n0 >= 2");
  if (!(2.0 * q * s.lo > 1.0)) throw DivergentTailError("gamma_break needs 2qs > 1");
  auto f = [&](Interval si) {
    Interval two_qs = 2.0 * si * static_cast<double>(q);
    Interval n(static_cast<double>(n0));
    Interval acc = Interval::zero();
    for (int i = 1; i <= 3; ++i)
      acc = acc + pow(n / (n + Interval(static_cast<double>(i))), two_qs);
    return acc + pow(n / (n + Interval(4.0)), two_qs) * (n + Interval(4.0)) /
                     (two_qs - Interval::one());
  };
  return eval_banded(f, s, 16);
}

Interval gamma_prime_break(int q, int n0, Interval s) {
  if (n0 < 2) throw ParamError("gamma_prime_break needs n0 >= 2");
  if (!(2.0 * q * s.lo > 1.0))
    throw DivergentTailError("gamma_prime_break needs 2qs > 1");
  auto f = [&](Interval si) {
    Interval two_qs = 2.0 * si * static_cast<double>(q);
    Interval n(static_cast<double>(n0));
    Interval acc = Interval::zero();
    for (int i = 1; i <= 5; ++i)
      acc = acc + pow(n / (n + Interval(static_cast<double>(i))), two_qs);
    return acc + pow(n / (n + Interval(6.0)), two_qs) * (n + Interval(6.0)) /
                     (two_qs - Interval::one());
  };
  return eval_banded(f, s, 16);
}

Interval tau(int q) {
  if (q < 11) throw ParamError("tau needs q >= 11");
  Interval qd(static_cast<double>(q));
  Interval four_sqrt = Interval(4.0) * sqrt(qd);
  Interval ratio = (2.0 * qd + Interval::one()) / (2.0 * qd + Interval(2.0));
  return pow(ratio, four_sqrt) * (2.0 * qd + Interval(2.0)) /
         (four_sqrt - Interval::one());
}

Interval pstar_gap_gamma(int q, int k, Interval s) {
  if (q < 2 || k < 1) throw ParamError("pstar_gap_gamma needs q >= 2, k >= 1");
  if (!(s.lo > 0.0)) throw DivergentTailError("pstar_gap_gamma needs s > 0");
  Interval qk = powni(q, k);
  auto f = [&](Interval si) {
    Interval two_s = 2.0 * si;
    Interval inner = exp(Interval::one() / qk) * (Interval::one() + Interval::one() / qk);
    return pow(inner, two_s) /
           (pow(Interval(static_cast<double>(q)), two_s) - Interval::one());
  };
  return eval_banded(f, s, 16);
}

Interval pstar_gap_refined(int q, int k, Interval s) {
  if (!(s.lo > 0.0)) throw DivergentTailError("refined sum needs s > 0");
  if (q == 3 && k == 1) {
    auto f = [&](Interval si) {
      Interval two_s = 2.0 * si;
      Interval t1 = pow(exp(Interval(2.0) / Interval(9.0)) / Interval(10.0), two_s);
      Interval t2 = pow(exp(Interval(8.0) / Interval(27.0)) / Interval(28.0), two_s);
      Interval t3 = pow(exp(Interval::one() / Interval(3.0)) / Interval(27.0), two_s) /
                    (pow(Interval(3.0), two_s) - Interval::one());
      return pow(Interval(4.0), two_s) * (t1 + t2 + t3);
    };
    return eval_banded(f, s, 32);
  }
  if (q == 2 && k == 2) {
    auto f = [&](Interval si) {
      Interval two_s = 2.0 * si;
      Interval t1 = pow(exp(Interval::one() / Interval(8.0)) / Interval(9.0), two_s);
      Interval t2 = pow(exp(Interval(3.0) / Interval(16.0)) / Interval(17.0), two_s);
      Interval t3 = pow(exp(Interval::one() / Interval(4.0)) / Interval(16.0), two_s) /
                    (pow(Interval(2.0), two_s) - Interval::one());
      return pow(Interval(5.0), two_s) * (t1 + t2 + t3);
    };
    return eval_banded(f, s, 32);
  }
  throw ParamError("refined sums defined only for (q=3,k=1) and (q=2,k=2)");
}

BoundReport mq_gap_two_pow(int q, Interval s_band) {
  if (q < 6) throw ParamError("two-power gap needs q >= 6");
  if (q >= 12) return mq_gap_two_pow_tail(q);
  double threshold = constant("two-pow-gap-q" + std::to_string(q));
  auto f = [&](Interval si) {
    Interval two_s = 2.0 * si;
    Interval p2 = pow2i(q), p3 = powni(3, q), p4 = powni(4, q);
    Interval head = exp(two_s / p2);
    Interval t1 = pow((p2 + Interval::one()) / (p3 + Interval::one()), two_s);
    Interval t2 = pow((p2 + Interval::one()) / (p4 + Interval::one()), two_s);
    Interval t3 = pow((p2 + Interval::one()) / p4, two_s) * Interval(4.0) /
                  (two_s * static_cast<double>(q) - Interval::one());
    return head * (t1 + t2 + t3);
  };
  Interval value = eval_banded(f, s_band, 32);
  std::ostringstream in;
  in << "q=" << q << " s=" << to_string(s_band, 9);
  return make_report("two-pow-gap", in.str(), value, threshold);
}

BoundReport mq_gap_two_pow_tail(int q) {
  if (q < 12) throw ParamError("coarse two-power bound needs q >= 12");
  // evaluated at the certified minimum s = 1.525/q; the form decreases in s
  Interval s = Interval(constant("pow2-lower-weak")) / Interval(static_cast<double>(q));
  Interval two_s = 2.0 * s;
  Interval value = Interval(2.0) * exp(2.0 * two_s / pow2i(q)) /
                   (two_s * static_cast<double>(q) - Interval::one());
  std::ostringstream in;
  in << "q=" << q << " s=1.525/q";
  return make_report("two-pow-gap-tail", in.str(), value,
                     constant("two-pow-gap-tail"));
}

BoundReport mq_gap_three_pow(int q, int k_terms, Interval s_band) {
  if (q != 9 && q != 10) throw ParamError("three-power gap defined for q in {9,10}");
  if (k_terms < 5) throw ParamError("need k >= 5 retained terms");
  double threshold = constant("three-pow-gap-q" + std::to_string(q));
  auto f = [&](Interval si) {
    Interval two_s = 2.0 * si;
    Interval p3 = powni(3, q);
    Interval head = exp(two_s / p3);
    Interval acc = Interval::zero();
    for (int n = 4; n <= k_terms; ++n)
      acc = acc + pow((p3 + Interval::one()) / (powni(n, q) + Interval::one()), two_s);
    Interval rem = pow((p3 + Interval::one()) / powni(k_terms, q), two_s) *
                   Interval(static_cast<double>(k_terms)) /
                   (two_s * static_cast<double>(q) - Interval::one());
    return head * (acc + rem);
  };
  Interval value = eval_banded(f, s_band, 32);
  std::ostringstream in;
  in << "q=" << q << " k=" << k_terms << " s=" << to_string(s_band, 9);
  return make_report("three-pow-gap", in.str(), value, threshold);
}

PerturbationConstants perturbation_constants(int f_size, double sigma) {
  if (f_size < 2) throw ParamError("perturbation constants need |F| >= 2");
  if (!(sigma > 0.0 && sigma < 1.0)) throw ParamError("sigma must lie in (0,1)");
  PerturbationConstants out;
  Interval e3 = exp(Interval(3.0));
  out.c1 = (e3 / log(Interval(2.0))).hi * (1.0 + 1e-6);
  Interval c2 = Interval(sigma) /
                (Interval(2.0) * exp(Interval(4.0)) *
                 log(Interval(static_cast<double>(f_size + 1))));
  out.c2 = c2.lo;
  Interval thr = pow(Interval(out.c1) / (Interval::one() - Interval(sigma)),
                     Interval::one() / (2.0 * Interval(sigma)));
  out.n_threshold = static_cast<long>(std::ceil(thr.hi));
  out.c_f = std::max(out.c1, 1.0 / out.c2);
  return out;
}

Interval thm3_initial_constant(int q) {
  if (q < 2) throw ParamError("thm3_initial_constant needs q >= 2");
  return log(Interval(2.0)) / (2.0 * log(Interval(static_cast<double>(q))));
}

}  // namespace cfdim::bounds
