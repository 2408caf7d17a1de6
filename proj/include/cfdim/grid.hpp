#ifndef CFDIM_GRID_HPP
#define CFDIM_GRID_HPP

#include <vector>

#include "cfdim/dual.hpp"
#include "cfdim/errors.hpp"
#include "cfdim/interval.hpp"

namespace cfdim {

// Strictly positive piecewise-linear function on [0,1], the discrete stand-in
// for the transfer operator's positive eigenfunction. Outside [0,1] it is
// extended by its boundary value (interval slop from enclosing the maps
// 1/(n+x) can poke an ulp past the endpoints).
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(std::vector<double> nodes, std::vector<double> values);

  static GridFunction constant(int cells, double value = 1.0);
  static std::vector<double> uniform_nodes(int cells);

  const std::vector<double>& nodes() const { return xs_; }
  const std::vector<double>& values() const { return vs_; }
  std::vector<double>& mutable_values() { return vs_; }
  int cells() const { return static_cast<int>(xs_.size()) - 1; }

  double operator()(double x) const;  // fast linear interpolation

  // Enclosure of {w(t) : t in T} together with a slope hull, so composed
  // expressions can use the mean-value form across this piecewise-linear
  // factor (valid in the Lipschitz sense).
  DI eval(const DI& t) const;

  double min_value() const;
  double max_value() const;
  void check_positive() const;

  // True when the node values were clamped so that, in exact arithmetic,
  // w(x) <= w(y) * e^{2 s0 |x-y| / gamma} holds with the recorded s0.
  bool log_lipschitz() const { return log_lipschitz_; }
  double log_lipschitz_s() const { return lipschitz_s_; }

  // Enforce monotone decrease and the per-cell slope bound
  // w_i <= w_{i+1} * (1 + 2 s h / gamma)  (<= w_{i+1} e^{2sh/gamma}),
  // verified with directed rounding; gamma_hi is an upper bound on min F.
  void clamp_log_lipschitz(double s, double gamma_hi);

 private:
  std::size_t cell_index(double x) const;

  std::vector<double> xs_, vs_;
  bool log_lipschitz_ = false;
  double lipschitz_s_ = 0.0;
};

}  // namespace cfdim

#endif
