#ifndef CFDIM_INTERVAL_HPP
#define CFDIM_INTERVAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cfdim/errors.hpp"

namespace cfdim {

// Closed interval [lo, hi] of doubles with the containment semantic: the true
// real value of the represented expression lies inside. Every operation
// rounds outward, so containment is preserved through arbitrary composition.
//
// Rounding model (no fesetround; safe under default codegen):
//   * +, -, *, / and sqrt are correctly rounded by IEEE-754, so the computed
//     double is within 1/2 ulp of the true result; widening the endpoint by
//     one nextafter step is rigorous.
//   * std::exp / std::log on this libm are faithful to within 1 ulp; the
//     endpoints are widened by two steps. The unit tests check containment of
//     MPFR's directed-rounding enclosures on large random samples.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  constexpr Interval() = default;
  constexpr explicit Interval(double point) : lo(point), hi(point) {}
  constexpr Interval(double l, double h) : lo(l), hi(h) {}

  static constexpr Interval zero() { return Interval(0.0); }
  static constexpr Interval one() { return Interval(1.0); }

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool is_point() const { return lo == hi; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }
  bool valid() const { return lo <= hi && std::isfinite(lo) && std::isfinite(hi); }
};

namespace detail {
inline double next_down(double x) {
  return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double next_up(double x) {
  return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double down1(double x) { return next_down(x); }
inline double up1(double x) { return next_up(x); }
inline double down2(double x) { return next_down(next_down(x)); }
inline double up2(double x) { return next_up(next_up(x)); }
}  // namespace detail

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator+(const Interval& a, const Interval& b) {
  return {detail::down1(a.lo + b.lo), detail::up1(a.hi + b.hi)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
  return {detail::down1(a.lo - b.hi), detail::up1(a.hi - b.lo)};
}

inline Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {detail::down1(std::min(std::min(p1, p2), std::min(p3, p4))),
          detail::up1(std::max(std::max(p1, p2), std::max(p3, p4)))};
}

// Denominator must not contain zero.
inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0)
    throw DomainError("interval division by an interval containing zero");
  const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo, q4 = a.hi / b.hi;
  return {detail::down1(std::min(std::min(q1, q2), std::min(q3, q4))),
          detail::up1(std::max(std::max(q1, q2), std::max(q3, q4)))};
}

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

inline Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

// Both inputs must enclose the same true value, so the intersection is
// nonempty; it is the tighter enclosure.
inline Interval intersect(const Interval& a, const Interval& b) {
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (r.lo > r.hi) throw Error("internal: intersection of enclosures is empty");
  return r;
}

inline Interval sqrt(const Interval& a) {
  if (a.lo < 0.0) throw DomainError("interval sqrt of negative");
  double l = detail::down1(std::sqrt(a.lo));
  if (l < 0.0) l = 0.0;
  return {l, detail::up1(std::sqrt(a.hi))};
}

inline Interval exp(const Interval& a) {
  double l = detail::down2(std::exp(a.lo));
  if (l < 0.0) l = 0.0;
  double h = detail::up2(std::exp(a.hi));
  if (!std::isfinite(h)) throw DomainError("interval exp overflow");
  return {l, h};
}

inline Interval log(const Interval& a) {
  if (a.lo <= 0.0) throw DomainError("interval log of non-positive");
  return {detail::down2(std::log(a.lo)), detail::up2(std::log(a.hi))};
}

// b^e for strictly positive b, via exp(e*log b). Exact short-circuits keep
// the s=0 counting identities sharp.
inline Interval pow(const Interval& b, const Interval& e) {
  if (e.is_point() && e.lo == 0.0) return Interval::one();
  if (e.is_point() && e.lo == 1.0) return b;
  if (b.is_point() && b.lo == 1.0) return Interval::one();
  return exp(e * log(b));
}

inline Interval square(const Interval& a) {
  double m1 = std::abs(a.lo), m2 = std::abs(a.hi);
  double big = std::max(m1, m2), small = std::min(m1, m2);
  double lo = (a.lo <= 0.0 && a.hi >= 0.0) ? 0.0 : detail::down1(small * small);
  return {lo, detail::up1(big * big)};
}

inline Interval abs(const Interval& a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return -a;
  return {0.0, std::max(-a.lo, a.hi)};
}

// Decimal rendering with outward rounding to `digits` fractional digits:
// lo rounds toward -inf, hi toward +inf, e.g. "[0.531277, 0.531281]".
std::string decimal_down(double x, int digits);
std::string decimal_up(double x, int digits);
std::string to_string(const Interval& a, int digits = 6);

// Shortest round-trip decimal of one endpoint (%.17g); parse() restores bits.
std::string exact_decimal(double x);
double parse_double(const std::string& s);

}  // namespace cfdim

#endif
