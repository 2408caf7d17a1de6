#ifndef CFDIM_SOLVER_HPP
#define CFDIM_SOLVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "cfdim/transfer.hpp"

namespace cfdim {

struct SolverConfig {
  int mesh_size = 200;
  double bisection_tol = 1e-6;
  int max_subdivision_depth = 12;
  int power_iters = 100;
  bool certified = true;
  int truncate = 40;                 // retained elements for infinite families
  std::size_t cell_budget = 400000;  // per comparison pass; exceeding it is a sound "unresolved"

  void validate() const;
  std::string to_text() const;
  static SolverConfig parse(const std::string&);
};

// Candidate eigenfunction for the sandwich: repeated application of the
// discretized operator with sup-norm renormalization, then log-Lipschitz
// clamping. No accuracy claim; quality only affects enclosure width.
GridFunction power_iterate(const TransferOperator& op, const SolverConfig& cfg);

// Certified enclosure [alpha, beta] with alpha <= min_x (Lw)(x)/w(x) and
// beta >= max_x (Lw)(x)/w(x); the spectral radius lies inside. Finite
// alphabets only.
Interval radius_enclosure(const TransferOperator& op, const GridFunction& w,
                          const SolverConfig& cfg);
Interval radius_enclosure(const TransferOperator& op, const ClosedFormCandidate& w,
                          const SolverConfig& cfg);

// Tail-carrying version: beta additionally covers the infinite tail through
// the majorant; alpha keeps the retained-subset bound (subset monotonicity).
Interval radius_enclosure_with_tail(const TransferOperator& op, const GridFunction& w,
                                    const SolverConfig& cfg);

enum class RadiusVerdict { AtLeastOne, AtMostOne, Unresolved };

// Certified comparison r(L) vs 1 at the operator's s, with straddle-aware
// refinement and early bail-out.
RadiusVerdict compare_radius_to_one(const TransferOperator& op, const GridFunction& w,
                                    const SolverConfig& cfg, int extra_depth = 0);

struct DimensionResult {
  Interval enclosure;
  bool tolerance_met = false;  // false = widest certified enclosure (warning)
  int bisections = 0;
  std::string alphabet_text;
};

// Certified enclosure of dim_H(J_F): bisection on s maintaining
// "not provably r(s_lo) < 1" below and "provably r(s_hi) <= 1" above.
// Singletons return [0,0]. Infinite families need the tail marker.
DimensionResult dimension(const Alphabet& a, const SolverConfig& cfg);

// Plain floating-point estimate (never used inside certificates).
DimensionResult dimension_fast(const Alphabet& a, const SolverConfig& cfg);

struct MonotonicityCheck {
  std::string a_text, b_text;
  Interval dim_a, dim_b;
  bool consistent = false;  // dim_b.lo <= dim_a.hi
};

// Proposition-style check: elementwise b_i >= a_i forces dim(J_B) <= dim(J_A);
// violation of the enclosure version flags a solver bug.
MonotonicityCheck dimension_monotonicity_check(const Alphabet& a, const Alphabet& b,
                                               const SolverConfig& cfg);

// Dimension enclosures for nested family truncations of the given sizes.
std::vector<DimensionResult> truncation_convergence_scan(const Alphabet& family,
                                                         const std::vector<int>& sizes,
                                                         const SolverConfig& cfg);

}  // namespace cfdim

#endif
