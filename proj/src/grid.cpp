#include "cfdim/grid.hpp"

#include <algorithm>
#include <cmath>

namespace cfdim {

GridFunction::GridFunction(std::vector<double> nodes, std::vector<double> values)
    : xs_(std::move(nodes)), vs_(std::move(values)) {
  if (xs_.size() < 3) throw ParamError("grid needs at least 2 cells");
  if (xs_.size() != vs_.size()) throw ParamError("node/value size mismatch");
  if (xs_.front() != 0.0 || xs_.back() != 1.0)
    throw ParamError("grid must span [0,1]");
  for (std::size_t i = 1; i < xs_.size(); ++i)
    if (!(xs_[i - 1] < xs_[i])) throw ParamError("grid nodes must increase");
  check_positive();
}

std::vector<double> GridFunction::uniform_nodes(int cells) {
  if (cells < 2) throw ParamError("grid needs at least 2 cells");
  std::vector<double> xs(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i)
    xs[static_cast<std::size_t>(i)] = static_cast<double>(i) / cells;
  xs.front() = 0.0;
  xs.back() = 1.0;
  return xs;
}

GridFunction GridFunction::constant(int cells, double value) {
  return {uniform_nodes(cells),
          std::vector<double>(static_cast<std::size_t>(cells) + 1, value)};
}

std::size_t GridFunction::cell_index(double x) const {
  if (x <= xs_.front()) return 0;
  if (x >= xs_.back()) return xs_.size() - 2;
  auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
  return static_cast<std::size_t>(it - xs_.begin()) - 1;
}

double GridFunction::operator()(double x) const {
  if (x <= 0.0) return vs_.front();
  if (x >= 1.0) return vs_.back();
  std::size_t i = cell_index(x);
  double t = (x - xs_[i]) / (xs_[i + 1] - xs_[i]);
  return vs_[i] + t * (vs_[i + 1] - vs_[i]);
}

DI GridFunction::eval(const DI& t) const {
  double a = std::max(t.v.lo, 0.0);
  double b = std::min(t.v.hi, 1.0);
  bool clipped_lo = t.v.lo < 0.0, clipped_hi = t.v.hi > 1.0;
  if (a > b) {  // entirely outside: constant extension
    double boundary = (t.v.hi <= 0.0) ? vs_.front() : vs_.back();
    return {Interval(boundary), Interval::zero()};
  }

  std::size_t ia = cell_index(a), ib = cell_index(b);

  auto interp = [&](double p, std::size_t i) -> Interval {
    Interval xi(xs_[i]), xj(xs_[i + 1]);
    Interval vi(vs_[i]), vj(vs_[i + 1]);
    return vi + (vj - vi) * ((Interval(p) - xi) / (xj - xi));
  };

  Interval value = hull(interp(a, ia), interp(b, ib));
  for (std::size_t i = ia + 1; i <= ib; ++i)
    value = hull(value, Interval(vs_[i]));

  Interval slopes = (Interval(vs_[ia + 1]) - Interval(vs_[ia])) /
                    (Interval(xs_[ia + 1]) - Interval(xs_[ia]));
  for (std::size_t i = ia + 1; i <= ib; ++i)
    slopes = hull(slopes, (Interval(vs_[i + 1]) - Interval(vs_[i])) /
                              (Interval(xs_[i + 1]) - Interval(xs_[i])));
  if (clipped_lo || clipped_hi) slopes = hull(slopes, Interval::zero());

  return {value, slopes * t.d};
}

double GridFunction::min_value() const {
  return *std::min_element(vs_.begin(), vs_.end());
}

double GridFunction::max_value() const {
  return *std::max_element(vs_.begin(), vs_.end());
}

void GridFunction::check_positive() const {
  for (double v : vs_)
    if (!(v > 0.0) || !std::isfinite(v))
      throw PositivityError("grid function must be strictly positive");
}

void GridFunction::clamp_log_lipschitz(double s, double gamma_hi) {
  if (s < 0.0) throw ParamError("negative s");
  if (!(gamma_hi >= 1.0)) throw ParamError("gamma must be >= 1");
  Interval two_s(2.0 * s);
  for (std::size_t i = 0; i + 1 < vs_.size(); ++i) {
    Interval h = Interval(xs_[i + 1]) - Interval(xs_[i]);
    // allowance <= 1 + 2s*h_true/gamma_true <= e^{2sh/gamma}: h enters at its
    // lower end and gamma at its upper, so .lo of the expression is safe
    double c = (Interval::one() + two_s * h / Interval(gamma_hi)).lo;
    if (vs_[i + 1] > vs_[i]) vs_[i + 1] = vs_[i];
    double floor_v = vs_[i] / c;
    if (vs_[i + 1] < floor_v) vs_[i + 1] = floor_v;
    // verify w_i <= w_{i+1} * c with downward rounding; nudge if needed
    // (w_{i+1} == w_i passes outright since the allowance is >= 1)
    while (vs_[i + 1] < vs_[i] &&
           (Interval(vs_[i + 1]) * Interval(c)).lo < vs_[i])
      vs_[i + 1] = detail::up1(vs_[i + 1]);
  }
  check_positive();
  log_lipschitz_ = true;
  lipschitz_s_ = s;
}

}  // namespace cfdim
