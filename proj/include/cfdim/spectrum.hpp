#ifndef CFDIM_SPECTRUM_HPP
#define CFDIM_SPECTRUM_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cfdim/certificate.hpp"
#include "cfdim/solver.hpp"

namespace cfdim::spectrum {

// ---- derived alphabets -----------------------------------------------------

// {1, q, ..., q^k}: the initial segment of P*_q
Alphabet pstar_initial_segment(int q, int k);
// I_{k-1} u T_k truncated: P*_q with q^k removed, tail marked
Alphabet pstar_without_power(int q, int k, int truncate);
// M_q with remove^q removed, truncated at `truncate` base values, tail marked
Alphabet mq_without(int q, int remove, int truncate);

// ---- break points ----------------------------------------------------------

struct BreakPointRecord {
  Alphabet f;
  double s = 0.0;
  BigInt break_element;
  Interval dim_f;
  Interval dim_with_break;
  Interval dim_with_next;
  enum class Status { ok, inconclusive, no_break_point };
  Status status = Status::inconclusive;
};

// Scans parent elements above max f for the last one whose adjunction keeps
// dim >= s while the following one drops below s.
BreakPointRecord find_strict_break_point(const Alphabet& parent, const Alphabet& f,
                                         double s, const SolverConfig& cfg);

// ---- greedy spectrum construction -------------------------------------------

struct GreedyRound {
  Alphabet f;             // the grown set at the crossing
  Interval dim_f;         // its dimension enclosure (below s)
  BigInt break_element;   // strict break point skipped past
  Interval tail_enclosure;  // enclosure of dim(f u tail-past-break)
  bool hypothesis_ok = false;      // certified dim(f u T) > s
  bool hypothesis_violated = false;  // certified dim(f u T) <= s
};

struct GreedyResult {
  std::vector<GreedyRound> rounds;
  bool hypothesis_violation = false;
  int violation_round = -1;
  bool inconclusive = false;
};

// The nested-sequence construction: grow by consecutive parent elements to
// the crossing, locate the strict break point, check the tail hypothesis,
// skip past the break point, repeat.
GreedyResult greedy_spectrum_construct(const Alphabet& parent, double s, int rounds,
                                       const SolverConfig& cfg);

// ---- certified statements ----------------------------------------------------

// mu^k vs nu^k separation for the power-star family.
Certificate certify_pstar_gap(int q, int k, const SolverConfig& cfg);

// dim(F-sharp) < dim(F) for F = {1,q} (q >= 3) or {1,2,4} (q = 2).
Certificate certify_fsharp_contraction(int q, const SolverConfig& cfg);

// Full structure result for M_q: full spectrum for q <= 5, one gap and two
// intervals for 6..8, two gaps and three intervals for 9..10, finite-union
// statement for q >= 11.
Certificate certify_mq_structure(int q, const SolverConfig& cfg);

// tau(q) > 1 together with the 2/sqrt(q) upper bound.
Certificate certify_critical_breakpoint(int q);

// Submultiplicativity condition as a certificate.
Certificate certify_submultiplicative(const Alphabet& a, int max_index);

// Elementwise-dominated pair a <= b: certificate that the computed
// enclosures respect dim(J_B) <= dim(J_A).
Certificate certify_monotonicity(const Alphabet& a, const Alphabet& b,
                                 const SolverConfig& cfg);

// Dimension run packaged as a certificate (fronts the solver).
Certificate certify_dimension(const Alphabet& a, const SolverConfig& cfg);

// Dispatcher used by the CLI: statement id + key=value params.
Certificate certify(const std::string& statement_id,
                    const std::map<std::string, std::string>& params,
                    const SolverConfig& cfg);

struct VerifyOutcome {
  bool ok = false;
  std::string verdict;  // verified | failed
  std::string diff;
  Certificate recomputed;
};

// Recompute everything from the stored inputs (optionally at an overriding
// config); verified when the recomputed enclosures are contained in the
// stored ones (1e-12 slack), part verdicts match, and the stored record is
// internally consistent.
VerifyOutcome verify_certificate(const Certificate& stored,
                                 const std::optional<SolverConfig>& override_cfg = {});

// ---- heuristic scanner -------------------------------------------------------

struct ScanPoint {
  double s = 0.0;
  bool attained = false;
  double nearest = 0.0;  // closest achieved dimension estimate
  std::optional<Alphabet> witness;
};

// Non-certified subset search over the parent snapshot (fast path only);
// prunes with subset monotonicity.
std::vector<ScanPoint> scan_spectrum(const Alphabet& parent,
                                     const std::vector<double>& grid,
                                     int max_subset_size, const SolverConfig& cfg,
                                     double attain_tol = 0.005);

}  // namespace cfdim::spectrum

#endif
