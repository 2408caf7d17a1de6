#include "cfdim/transfer.hpp"

#include <cmath>
#include <sstream>

namespace cfdim {

Interval TailMajorant::coefficient(const Interval& s, const BigInt& gamma) const {
  Interval two_s = 2.0 * s;
  Interval a = to_interval(anchor);
  Interval ga = to_interval(gamma) * a;
  // e^{2s/(gamma*anchor)}: slack for moving every tail term's w-argument to
  // the anchor's
  Interval lip = exp(two_s / ga);
  Interval one_plus = Interval::one() + Interval::one() / a;
  if (kind == Kind::Geometric) {
    if (!(s.lo > 0.0))
      throw DivergentTailError("geometric tail needs s > 0");
    Interval qs = pow(Interval(static_cast<double>(q)), two_s);
    return lip * pow(one_plus, two_s) / (qs - Interval::one());
  }
  // monomial: sum_{n>m} ((m^q+x)/(n^q+x))^{2s} <= (1+1/anchor)^{2s} m/(2qs-1)
  Interval two_qs = two_s * static_cast<double>(q);
  if (!(two_qs.lo > 1.0))
    throw DivergentTailError("monomial tail needs 2qs > 1");
  return lip * pow(one_plus, two_s) *
         Interval(static_cast<double>(order)) / (two_qs - Interval::one());
}

TailMajorant TailMajorant::for_family(const Alphabet& tagged) {
  if (!tagged.tail_infinite())
    throw ParamError("alphabet is not marked tail-infinite");
  TailMajorant t;
  t.anchor = tagged.max();
  switch (tagged.family()) {
    case Family::PowerQ:
    case Family::PowerQStar: {
      t.kind = Kind::Geometric;
      t.q = tagged.param_q();
      BigInt v = t.anchor;
      long k = 0;
      while (v > 1) {
        if (v % t.q != 0)
          throw ParamError("tail anchor is not a power of q");
        v /= t.q;
        ++k;
      }
      t.order = k;
      return t;
    }
    case Family::MonomialQ: {
      t.kind = Kind::Monomial;
      t.q = tagged.param_q();
      BigInt root;
      if (mpz_root(root.get_mpz_t(), t.anchor.get_mpz_t(),
                   static_cast<unsigned long>(t.q)) == 0)
        throw ParamError("tail anchor is not a q-th power");
      t.order = root.get_si();
      return t;
    }
    case Family::Progression:
    case Family::Primes: {
      // no closed form for these tails; the all-integers tail dominates
      t.kind = Kind::Monomial;
      t.q = 1;
      if (!mpz_fits_slong_p(t.anchor.get_mpz_t()))
        throw ParamError("tail anchor too large");
      t.order = t.anchor.get_si();
      return t;
    }
    case Family::Explicit:
      throw ParamError("explicit alphabets have no tail");
  }
  throw ParamError("unreachable");
}

std::string TailMajorant::to_text() const {
  std::ostringstream os;
  if (kind == Kind::Geometric)
    os << "geometric(q=" << q << ",k=" << order << ",anchor=" << anchor.get_str() << ")";
  else
    os << "monomial(q=" << q << ",m=" << order << ",anchor=" << anchor.get_str() << ")";
  return os.str();
}

TransferOperator::TransferOperator(Alphabet a, Interval s_val)
    : alphabet(std::move(a)), s(s_val) {
  if (alphabet.size() == 0) throw ParamError("empty alphabet");
  if (s.lo < 0.0 || s.hi > 1.0) throw ParamError("s must lie in [0,1]");
  if (alphabet.tail_infinite()) tail = TailMajorant::for_family(alphabet);
}

double apply(const TransferOperator& op, const GridFunction& f, double x) {
  if (x < 0.0 || x > 1.0) throw DomainError("x outside [0,1]");
  double two_s = 2.0 * op.s.mid();
  double acc = 0.0;
  for (const BigInt& n : op.alphabet.elements()) {
    double nd = mpz_get_d(n.get_mpz_t());
    acc += std::exp(-two_s * std::log(nd + x)) * f(1.0 / (nd + x));
  }
  return acc;
}

Interval apply_enclosure(const TransferOperator& op, const GridFunction& f, double x) {
  if (x < 0.0 || x > 1.0) throw DomainError("x outside [0,1]");
  Interval two_s = 2.0 * op.s;
  Interval acc = Interval::zero();
  Interval anchor_term = Interval::zero();
  DI xi = DI::cst(Interval(x));
  for (const BigInt& n : op.alphabet.elements()) {
    DI base = DI::cst(to_interval(n)) + xi;
    DI term = pow(base, -two_s) * f.eval(DI::cst(Interval::one()) / base);
    acc = acc + term.v;
    anchor_term = term.v;
  }
  if (!op.tail) return acc;
  if (!f.log_lipschitz())
    throw ParamError("tail bound needs a log-Lipschitz certified candidate");
  Interval coeff = op.tail->coefficient(op.s, op.gamma());
  return {acc.lo, (acc + coeff * anchor_term).hi};
}

double apply_squared(const TransferOperator& op, const GridFunction& f, double x) {
  if (op.tail) throw ParamError("apply_squared unsupported with a tail");
  if (x < 0.0 || x > 1.0) throw DomainError("x outside [0,1]");
  double s = op.s.mid();
  double acc = 0.0;
  for (const BigInt& a : op.alphabet.elements()) {
    double ad = mpz_get_d(a.get_mpz_t());
    for (const BigInt& b : op.alphabet.elements()) {
      double bd = mpz_get_d(b.get_mpz_t());
      double d = ad * (bd + x) + 1.0;           // 1/(theta_a . theta_b)'
      double y = 1.0 / (ad + 1.0 / (bd + x));   // theta_a(theta_b(x))
      acc += std::exp(-2.0 * s * std::log(d)) * f(y);
    }
  }
  return acc;
}

ClosedFormEigenpair closed_form_eigenpair(double mu, double s) {
  if (!(mu > 0.0)) throw ParamError("mu must be positive");
  if (s < 0.0 || s > 1.0) throw ParamError("s must lie in [0,1]");
  Interval m(mu);
  Interval lambda = (m + sqrt(square(m) + Interval(4.0))) / Interval(2.0);
  Interval two_s(2.0 * s);
  ClosedFormEigenpair out;
  out.lambda_root = lambda;
  out.eigenvalue = pow(lambda, -two_s);
  out.eigenfunction = ClosedFormCandidate{lambda, two_s};
  return out;
}

double log_lipschitz_factor(const TransferOperator& op, double x, double y) {
  if (x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0)
    throw DomainError("x,y must lie in [0,1]");
  Interval g = to_interval(op.gamma());
  return exp(2.0 * op.s * abs(Interval(x) - Interval(y)) / g).hi;
}

}  // namespace cfdim
