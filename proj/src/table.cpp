#include "cfdim/table.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

namespace cfdim {

std::vector<TableRow> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open table file '" + path + "'");
  std::vector<TableRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream is(line);
    std::string key, alphabet, lo, hi, sep;
    if (!std::getline(is, key, '|') || !std::getline(is, alphabet, '|') ||
        !std::getline(is, lo, '|') || !std::getline(is, hi, '|'))
      throw ParamError("bad table line: '" + line + "'");
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    TableRow row;
    row.key = trim(key);
    row.alphabet = trim(alphabet);
    // published bands are decimal; widen one step so the parsed doubles
    // still bracket the printed values
    row.band = Interval(detail::down1(parse_double(trim(lo))),
                        detail::up1(parse_double(trim(hi))));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParamError("empty table file");
  return rows;
}

TableOutcome run_table_row(const TableRow& row, const SolverConfig& cfg) {
  TableOutcome out;
  out.row = row;
  auto t0 = std::chrono::steady_clock::now();
  DimensionResult d = dimension(Alphabet::parse(row.alphabet), cfg);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.computed = d.enclosure;
  out.intersects = d.enclosure.intersects(row.band);
  out.width_ok = d.enclosure.width() <= 2.0 * row.band.width();
  return out;
}

int thread_cap() {
  if (const char* env = std::getenv("CFDIM_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

std::vector<TableOutcome> run_table(const std::vector<TableRow>& rows,
                                    const SolverConfig& cfg) {
  std::vector<TableOutcome> out(rows.size());
  int threads = std::min<int>(thread_cap(), static_cast<int>(rows.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < rows.size(); ++i) out[i] = run_table_row(rows[i], cfg);
    return out;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      out[i] = run_table_row(rows[i], cfg);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return out;
}

}  // namespace cfdim
