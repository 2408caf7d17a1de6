#ifndef CFDIM_TRANSFER_HPP
#define CFDIM_TRANSFER_HPP

#include <optional>

#include "cfdim/alphabet.hpp"
#include "cfdim/dual.hpp"
#include "cfdim/grid.hpp"
#include "cfdim/interval.hpp"

namespace cfdim {

// Closed-form upper bound for the operator mass of an infinite alphabet tail
// sitting above `anchor` (the last retained element):
//   tail(x) <= coefficient(s) * (anchor+x)^{-2s} * w(1/(anchor+x))
// for any candidate w satisfying the log-Lipschitz bound with gamma = min F.
struct TailMajorant {
  enum class Kind { Geometric, Monomial };
  Kind kind;
  long q = 0;       // geometric ratio base, or monomial exponent
  long order = 0;   // geometric: anchor = q^order; monomial: anchor = order^q
  BigInt anchor;

  // throws DivergentTailError when the series diverges at this s
  Interval coefficient(const Interval& s, const BigInt& gamma) const;

  static TailMajorant for_family(const Alphabet& tagged);
  std::string to_text() const;
};

// Perron-Frobenius operator for a finite snapshot, optionally carrying the
// family tail. s may be an interval during certification.
struct TransferOperator {
  Alphabet alphabet;
  Interval s;
  std::optional<TailMajorant> tail;

  TransferOperator(Alphabet a, double s_val) : TransferOperator(std::move(a), Interval(s_val)) {}
  TransferOperator(Alphabet a, Interval s_val);

  const BigInt& gamma() const { return alphabet.gamma(); }
};

// Sum_{n in F} (n+x)^{-2s} f(1/(n+x)), plain floating point (never used
// inside certificates). Tail ignored.
double apply(const TransferOperator& op, const GridFunction& f, double x);

// Certified enclosure of the operator value; when a tail is present the
// lower endpoint is the retained sum and the upper adds the tail majorant
// (f must be log-Lipschitz certified in that case).
Interval apply_enclosure(const TransferOperator& op, const GridFunction& f, double x);

// Sum over pairs (a,b) of ((theta_a . theta_b)'(x))^s f(theta_a(theta_b(x)))
// with (theta_a . theta_b)'(x) = (a(b+x)+1)^{-2}; finite alphabets only.
double apply_squared(const TransferOperator& op, const GridFunction& f, double x);

// Candidate eigenfunction v(x) = (lambda + x)^{-2s} evaluable to full
// precision at any point; used instead of a grid sample when the exact
// eigenpair is known (singleton alphabets).
struct ClosedFormCandidate {
  Interval lambda;
  Interval two_s;
  DI operator()(const DI& t) const { return pow(DI::cst(lambda) + t, -two_s); }
  double at(double x) const { return ((*this)(DI::cst(Interval(x)))).v.mid(); }
};

// Exact eigenpair of the one-map operator with parameter mu > 0:
// lambda = (mu + sqrt(mu^2+4))/2, eigenvalue lambda^{-2s},
// eigenfunction (lambda+x)^{-2s}.
struct ClosedFormEigenpair {
  Interval lambda_root;
  Interval eigenvalue;
  ClosedFormCandidate eigenfunction;
};

ClosedFormEigenpair closed_form_eigenpair(double mu, double s);

// e^{2s|x-y|/gamma}: rigorous upper bound for v(x)/v(y) of the true
// eigenfunction; returned as the upper endpoint of the interval evaluation.
double log_lipschitz_factor(const TransferOperator& op, double x, double y);

}  // namespace cfdim

#endif
