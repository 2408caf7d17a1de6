#ifndef CFDIM_TABLE_HPP
#define CFDIM_TABLE_HPP

#include <string>
#include <vector>

#include "cfdim/solver.hpp"

namespace cfdim {

// One row of the shipped reference table: a finite alphabet together with
// the published dimension band it must be checked against.
struct TableRow {
  std::string key;       // short set notation, e.g. "{1,2^5,3^5}"
  std::string alphabet;  // full alphabet text format
  Interval band;
};

std::vector<TableRow> load_table(const std::string& path);

struct TableOutcome {
  TableRow row;
  Interval computed;
  bool intersects = false;
  bool width_ok = false;   // computed width <= 2x band width
  double seconds = 0.0;
  bool pass() const { return intersects && width_ok; }
};

// Runs the solver on one row / on all rows (all-rows variant is parallel,
// capped by CFDIM_THREADS, deterministic output order).
TableOutcome run_table_row(const TableRow& row, const SolverConfig& cfg);
std::vector<TableOutcome> run_table(const std::vector<TableRow>& rows,
                                    const SolverConfig& cfg);

// Thread cap from CFDIM_THREADS (falls back to hardware concurrency).
int thread_cap();

}  // namespace cfdim

#endif
