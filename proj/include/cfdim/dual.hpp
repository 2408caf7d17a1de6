#ifndef CFDIM_DUAL_HPP
#define CFDIM_DUAL_HPP

#include "cfdim/interval.hpp"

namespace cfdim {

// First-order interval dual number: v encloses the values of an expression
// over a cell, d encloses its derivative with respect to the cell variable.
// Feeding var(X) through an expression yields both the plain interval
// extension and a derivative enclosure; combined with a midpoint evaluation
// this gives the mean-value form
//     f(X) \subseteq f(m) + f'(X) * (X - m),
// whose width is O(|X|^2) instead of O(|X|).
//
// Validity: all operations used here are smooth on their domains except the
// piecewise-linear candidate, whose eval returns a slope hull; the mean value
// step remains valid for Lipschitz functions (integral form of the MVT).
struct DI {
  Interval v;
  Interval d;

  static DI var(const Interval& x) { return {x, Interval::one()}; }
  static DI cst(const Interval& c) { return {c, Interval::zero()}; }
  static DI cst(double c) { return {Interval(c), Interval::zero()}; }
};

inline DI operator+(const DI& a, const DI& b) { return {a.v + b.v, a.d + b.d}; }
inline DI operator-(const DI& a, const DI& b) { return {a.v - b.v, a.d - b.d}; }
inline DI operator-(const DI& a) { return {-a.v, -a.d}; }

inline DI operator*(const DI& a, const DI& b) {
  return {a.v * b.v, a.d * b.v + a.v * b.d};
}

inline DI operator/(const DI& a, const DI& b) {
  Interval q = a.v / b.v;
  return {q, (a.d - q * b.d) / b.v};
}

inline DI exp(const DI& a) {
  Interval e = exp(a.v);
  return {e, e * a.d};
}

inline DI log(const DI& a) {
  return {log(a.v), a.d / a.v};
}

inline DI sqrt(const DI& a) {
  Interval r = sqrt(a.v);
  return {r, a.d / (2.0 * r)};
}

// b^e for a constant (interval) exponent and strictly positive base.
inline DI pow(const DI& b, const Interval& e) {
  if (e.is_point() && e.lo == 0.0) return DI::cst(Interval::one());
  return exp(DI{e, Interval::zero()} * log(b));
}

// Mean-value form for a pre-evaluated expression: whole = f(var(X)),
// at_mid = f(cst(m)).v with m inside X. Intersecting with the plain
// extension keeps the better of the two enclosures.
inline Interval mean_value_form(const DI& whole, const Interval& at_mid,
                                const Interval& x, double m) {
  Interval dev{detail::down1(x.lo - m), detail::up1(x.hi - m)};
  return intersect(whole.v, at_mid + whole.d * dev);
}

}  // namespace cfdim

#endif
