#ifndef CFDIM_BOUNDS_HPP
#define CFDIM_BOUNDS_HPP

#include <string>
#include <vector>

#include "cfdim/interval.hpp"

namespace cfdim::bounds {

// One checkable scalar inequality, evaluated in interval arithmetic.
struct BoundReport {
  std::string name;
  std::string inputs;
  Interval value;
  double threshold = 0.0;
  enum class Verdict { above, below, inconclusive };
  Verdict verdict = Verdict::inconclusive;

  bool conclusive() const { return verdict != Verdict::inconclusive; }
  std::string verdict_text() const;
};

BoundReport make_report(std::string name, std::string inputs, Interval value,
                        double threshold);

// Shared table of the named scalar constants and thresholds the certificate
// functions quote; single provenance point for all of them.
double constant(const std::string& id);
const std::vector<std::pair<std::string, double>>& constants_table();

// Two-sided golden-ratio bounds for dim(J_{1,n}): the returned s_minus is a
// certified point with the lower test function still >= 1, s_plus one with
// the upper test function already <= 1, each located to 1e-10.
struct GoldenBounds {
  double s_minus;
  double s_plus;
};
GoldenBounds golden_bounds(long n);

// 0.52679 / ln n, rounded down; valid lower bound for dim(J_{1,n}), n >= 4.
double generic_lower(long n);

// h(x) = lambda^{-2s} + (x+lambda-1)^{-2s} with s = c/ln x; the root test
// behind the generic lower bounds.
Interval corollary_h(Interval c, Interval x);

// Lower bounds for dim(J_{1,2^q}), q >= 12: 1.0571/(q ln 2) and the weaker
// 1.525/q.
struct PowerLower {
  double strong;
  double weak;
};
PowerLower power_lower_2q(int q);

// mu(2/sqrt(q)) < 1 certifies dim(J_{M_q}) <= 2/sqrt(q) for q >= 11.
BoundReport mq_upper(int q);
// monotonicity witness used alongside mq_upper; positive at 11
Interval mq_upper_g(int x);

// alpha(q, s_q) < 1 certifies dim(J_{M_q}) <= s_q for q in 2..10, with the
// tabulated s_q exponents.
BoundReport mq_crude_upper(int q);
double mq_crude_exponent(int q);

// gamma(q, n0, s): three explicit terms plus integral remainder; > 1 makes
// the tail past n0 heavy enough to recross s. Needs 2qs > 1.
Interval gamma_break(int q, int n0, Interval s);
// six-term refinement, remainder from n0+6; dominates gamma_break
Interval gamma_prime_break(int q, int n0, Interval s);

// tau(q) = ((2q+1)/(2q+2))^{4 sqrt q} (2q+2)/(4 sqrt q - 1), q >= 11.
Interval tau(int q);

// gamma(k,q,s) = (e^{1/q^k}(1+1/q^k))^{2s} / (q^{2s}-1): tail-vs-anchor
// contraction ratio for power tails. Needs s > 0.
Interval pstar_gap_gamma(int q, int k, Interval s);
// sharper three-term variants; only (q=3,k=1) and (q=2,k=2) are defined
Interval pstar_gap_refined(int q, int k, Interval s);

// e^{2s/2^q}[ ((2^q+1)/(3^q+1))^{2s} + ((2^q+1)/(4^q+1))^{2s}
//             + ((2^q+1)/4^q)^{2s} * 4/(2sq-1) ] < threshold certifies the
// two-power gap. q in 6..11 evaluates at the given s band; q >= 12 uses the
// coarse 2 e^{4s/2^q}/(2sq-1) form at s = 1.525/q.
BoundReport mq_gap_two_pow(int q, Interval s_band);
BoundReport mq_gap_two_pow_tail(int q);

// beta(s, q, k) variant for the three-power gap, q in {9, 10}.
BoundReport mq_gap_three_pow(int q, int k_terms, Interval s_band);

struct PerturbationConstants {
  double c1;
  double c2;
  long n_threshold;
  double c_f;  // max(c1, 1/c2)
};
PerturbationConstants perturbation_constants(int f_size, double sigma);

// ln 2 / (2 ln q): left endpoint guarantee for the spectrum of P*_q.
Interval thm3_initial_constant(int q);

}  // namespace cfdim::bounds

#endif
