#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "cfdim/spectrum.hpp"
#include "cfdim/table.hpp"

using namespace cfdim;

namespace {

struct ConfigFlags {
  std::optional<int> mesh, depth, iters, truncate;
  std::optional<double> tol;
  bool fast = false;
  bool flags_seen() const {
    return mesh || depth || iters || truncate || tol;
  }
  SolverConfig apply(SolverConfig cfg) const {
    if (mesh) cfg.mesh_size = *mesh;
    if (tol) cfg.bisection_tol = *tol;
    if (depth) cfg.max_subdivision_depth = *depth;
    if (iters) cfg.power_iters = *iters;
    if (truncate) cfg.truncate = *truncate;
    cfg.certified = !fast;
    cfg.validate();
    return cfg;
  }
};

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
  cmd->add_option("--mesh", f.mesh, "mesh cells (default 200)");
  cmd->add_option("--tol", f.tol, "bisection tolerance (default 1e-6)");
  cmd->add_option("--depth", f.depth, "max subdivision depth (default 12)");
  cmd->add_option("--iters", f.iters, "power iterations (default 100)");
  cmd->add_option("--truncate", f.truncate, "retained elements for infinite tails");
  cmd->add_flag("--fast", f.fast, "plain floating point, no certification");
  cmd->add_flag("--certified", [&f](std::int64_t) { f.fast = false; },
                "certified interval path (default)");
}

void emit_certificate(const Certificate& cert, const std::string& out_path, bool json) {
  std::string text = json ? to_json(cert) : serialize(cert);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw ParamError("cannot write '" + out_path + "'");
    out << text;
    std::cout << "wrote " << out_path << " (verdict: " << cert.verdict << ")\n";
  }
}

double timed_seconds(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_dim(const std::string& spec, const ConfigFlags& flags, bool tail,
            bool certify, const std::string& out_path, bool json) {
  SolverConfig cfg = flags.apply(SolverConfig{});
  Alphabet a = Alphabet::parse(spec);
  if (tail) a = a.with_infinite_tail();

  if (!cfg.certified) {
    DimensionResult d = dimension_fast(a, cfg);
    std::cout << to_string(d.enclosure, 6) << "  (fast estimate, not certified)\n";
    return 0;
  }
  auto t0 = std::chrono::steady_clock::now();
  if (certify) {
    Certificate cert = spectrum::certify_dimension(a, cfg);
    cert.seconds = timed_seconds(t0);
    emit_certificate(cert, out_path, json);
    return verdict_exit_code(cert.verdict);
  }
  DimensionResult d = dimension(a, cfg);
  std::cout << to_string(d.enclosure, 6);
  if (!d.tolerance_met) std::cout << "  (warning: widest certified enclosure)";
  std::cout << "\n";
  return 0;
}

int cmd_table(const std::string& selector, const std::string& data_path,
              const ConfigFlags& flags) {
  SolverConfig cfg;
  cfg.mesh_size = 400;  // the 2x-band pass rule needs tighter stalls than 200 gives
  cfg = flags.apply(cfg);
  auto rows = load_table(data_path);
  if (selector != "all") {
    std::vector<TableRow> filtered;
    for (const auto& r : rows)
      if (r.key == selector) filtered.push_back(r);
    if (filtered.empty()) throw ParamError("no table row named '" + selector + "'");
    rows = filtered;
  }
  auto outcomes = run_table(rows, cfg);
  int passed = 0;
  for (const auto& o : outcomes) {
    std::cout << (o.pass() ? "PASS " : "FAIL ") << o.row.key << "  computed "
              << to_string(o.computed, 6) << "  band " << to_string(o.row.band, 6)
              << "  width " << decimal_up(o.computed.width(), 7) << "  ("
              << decimal_up(o.seconds, 2) << "s)\n";
    if (o.pass()) ++passed;
  }
  std::cout << passed << "/" << outcomes.size() << " rows pass\n";
  return passed == static_cast<int>(outcomes.size()) ? 0 : 1;
}

int cmd_certify(const std::string& statement, const std::map<std::string, std::string>& params,
                const ConfigFlags& flags, const std::string& out_path, bool json) {
  SolverConfig cfg = flags.apply(SolverConfig{});
  auto t0 = std::chrono::steady_clock::now();
  Certificate cert = spectrum::certify(statement, params, cfg);
  cert.seconds = timed_seconds(t0);
  emit_certificate(cert, out_path, json);
  if (out_path.empty())
    std::cerr << "verdict: " << cert.verdict << "\n";
  return verdict_exit_code(cert.verdict);
}

int cmd_verify(const std::string& path, const ConfigFlags& flags) {
  std::ifstream in(path);
  if (!in) throw ParamError("cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  Certificate stored = parse_certificate(text);
  std::optional<SolverConfig> override_cfg;
  if (flags.flags_seen()) {
    SolverConfig base;
    if (!stored.input("config").empty())
      base = SolverConfig::parse(stored.input("config"));
    override_cfg = flags.apply(base);
  }
  auto outcome = spectrum::verify_certificate(stored, override_cfg);
  if (outcome.ok) {
    std::cout << "verified: recomputation reproduces the certificate\n";
    return 0;
  }
  std::cout << "FAILED: certificate does not re-verify\n" << outcome.diff;
  return 1;
}

int cmd_scan(const std::string& spec, double smin, double smax, double step,
             int max_size, const ConfigFlags& flags) {
  if (!(smin > 0.0 && smax > smin && step > 0.0))
    throw ParamError("need 0 < smin < smax and step > 0");
  SolverConfig cfg = flags.apply(SolverConfig{});
  Alphabet parent = Alphabet::parse(spec);
  std::vector<double> grid;
  for (double s = smin; s <= smax + 1e-15; s += step) grid.push_back(s);
  auto points = spectrum::scan_spectrum(parent, grid, max_size, cfg);
  std::cout << "# heuristic scan (fast path, not a certificate)\n";
  for (const auto& p : points) {
    std::cout << decimal_down(p.s, 6) << "  "
              << (p.attained ? "attained" : "not-attained") << "  nearest "
              << decimal_down(p.nearest, 6);
    if (p.witness) std::cout << "  witness " << p.witness->to_text();
    std::cout << "\n";
  }
  return 0;
}

int cmd_breakpoint(const std::string& parent_spec, const std::string& f_spec,
                   double s, const ConfigFlags& flags) {
  SolverConfig cfg = flags.apply(SolverConfig{});
  Alphabet parent = Alphabet::parse(parent_spec);
  Alphabet f = Alphabet::parse(f_spec);
  auto rec = spectrum::find_strict_break_point(parent, f, s, cfg);
  switch (rec.status) {
    case spectrum::BreakPointRecord::Status::ok:
      std::cout << "strict break point: " << rec.break_element.get_str() << "\n"
                << "  dim(f)         " << to_string(rec.dim_f, 6) << "\n"
                << "  dim(f+break)   " << to_string(rec.dim_with_break, 6) << "\n"
                << "  dim(f+next)    " << to_string(rec.dim_with_next, 6) << "\n";
      return 0;
    case spectrum::BreakPointRecord::Status::inconclusive:
      std::cout << "inconclusive: enclosures straddle s at the candidate\n";
      return 2;
    case spectrum::BreakPointRecord::Status::no_break_point:
      std::cout << "no break point\n";
      return 1;
  }
  return 1;
}

int cmd_bounds(const std::string& name, long n, int q, int k, int n0, double s,
               double s_hi, int fsize, double sigma, double c, double x) {
  auto band = [&] { return (s_hi > 0) ? Interval(s, s_hi) : Interval(s); };
  if (name == "golden") {
    auto g = bounds::golden_bounds(n);
    std::cout << "s_minus " << exact_decimal(g.s_minus) << "\ns_plus  "
              << exact_decimal(g.s_plus) << "\n";
    return 0;
  }
  if (name == "generic-lower") {
    std::cout << exact_decimal(bounds::generic_lower(n)) << "\n";
    return 0;
  }
  if (name == "h") {
    std::cout << to_string(bounds::corollary_h(Interval(c), Interval(x)), 9) << "\n";
    return 0;
  }
  if (name == "power-lower") {
    auto p = bounds::power_lower_2q(q);
    std::cout << "strong " << exact_decimal(p.strong) << "\nweak   "
              << exact_decimal(p.weak) << "\n";
    return 0;
  }
  auto print_report = [](const bounds::BoundReport& r) {
    std::cout << r.name << " (" << r.inputs << ") = " << to_string(r.value, 9)
              << "  threshold " << exact_decimal(r.threshold) << "  -> "
              << r.verdict_text() << "\n";
    return r.conclusive() ? 0 : 2;
  };
  if (name == "mq-upper") return print_report(bounds::mq_upper(q));
  if (name == "mq-crude") return print_report(bounds::mq_crude_upper(q));
  if (name == "two-pow-gap") return print_report(bounds::mq_gap_two_pow(q, band()));
  if (name == "three-pow-gap")
    return print_report(bounds::mq_gap_three_pow(q, k > 0 ? k : 8, band()));
  if (name == "gamma") {
    std::cout << to_string(bounds::gamma_break(q, n0, band()), 9) << "\n";
    return 0;
  }
  if (name == "gamma-prime") {
    std::cout << to_string(bounds::gamma_prime_break(q, n0, band()), 9) << "\n";
    return 0;
  }
  if (name == "tau") {
    std::cout << to_string(bounds::tau(q), 9) << "\n";
    return 0;
  }
  if (name == "pstar-gamma") {
    std::cout << to_string(bounds::pstar_gap_gamma(q, k, band()), 9) << "\n";
    return 0;
  }
  if (name == "pstar-refined") {
    std::cout << to_string(bounds::pstar_gap_refined(q, k, band()), 9) << "\n";
    return 0;
  }
  if (name == "perturbation") {
    auto p = bounds::perturbation_constants(fsize, sigma);
    std::cout << "c1 " << exact_decimal(p.c1) << "\nc2 " << exact_decimal(p.c2)
              << "\nn_threshold " << p.n_threshold << "\nC_F "
              << exact_decimal(p.c_f) << "\n";
    return 0;
  }
  if (name == "thm3-const") {
    std::cout << to_string(bounds::thm3_initial_constant(q), 9) << "\n";
    return 0;
  }
  throw ParamError("unknown bounds formula '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified Hausdorff-dimension enclosures for continued-fraction "
               "limit sets and their dimension-spectrum certificates"};
  app.require_subcommand(1);

  // dim
  std::string dim_spec, dim_out;
  bool dim_tail = false, dim_cert = false, dim_json = false;
  ConfigFlags dim_flags;
  auto* dim = app.add_subcommand("dim", "dimension enclosure of one alphabet");
  dim->add_option("alphabet", dim_spec, "explicit:[..] or family:..(..)")->required();
  dim->add_flag("--tail", dim_tail, "treat the family snapshot as tail-infinite");
  dim->add_flag("--certify", dim_cert, "emit a certificate");
  dim->add_flag("--json", dim_json, "JSON certificate output");
  dim->add_option("--out", dim_out, "certificate output file");
  add_config_flags(dim, dim_flags);

  // table
  std::string table_selector = "all", table_data = "data/table1.txt";
  ConfigFlags table_flags;
  auto* table = app.add_subcommand("table", "reference-band regression table");
  table->add_option("selector", table_selector, "row key or 'all'");
  table->add_option("--data", table_data, "table data file");
  add_config_flags(table, table_flags);

  // certify
  std::string cert_id, cert_out, cert_alphabet, cert_a, cert_b;
  int cert_q = 0, cert_k = 0, cert_max_index = 0;
  bool cert_json = false;
  ConfigFlags cert_flags;
  auto* certify = app.add_subcommand("certify", "emit a statement certificate");
  certify->add_option("statement", cert_id,
                      "thm2 | mq-structure | critical-bp | fsharp | submult | dim | monotone")
      ->required();
  certify->add_option("--q", cert_q, "family parameter q");
  certify->add_option("--k", cert_k, "power index k");
  certify->add_option("--alphabet", cert_alphabet, "alphabet (submult/dim)");
  certify->add_option("--a", cert_a, "first alphabet (monotone)");
  certify->add_option("--b", cert_b, "second alphabet (monotone)");
  certify->add_option("--max-index", cert_max_index, "index range (submult)");
  certify->add_flag("--json", cert_json, "JSON output");
  certify->add_option("--out", cert_out, "output file");
  add_config_flags(certify, cert_flags);

  // verify
  std::string verify_path;
  ConfigFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "re-verify a certificate file");
  verify->add_option("file", verify_path)->required();
  add_config_flags(verify, verify_flags);

  // scan
  std::string scan_spec;
  double scan_min = 0, scan_max = 0, scan_step = 0.01;
  int scan_size = 4;
  ConfigFlags scan_flags;
  auto* scan = app.add_subcommand("scan", "heuristic spectrum scan (non-certified)");
  scan->add_option("alphabet", scan_spec)->required();
  scan->add_option("--smin", scan_min)->required();
  scan->add_option("--smax", scan_max)->required();
  scan->add_option("--step", scan_step);
  scan->add_option("--max-size", scan_size, "max subset size");
  add_config_flags(scan, scan_flags);

  // breakpoint
  std::string bp_parent, bp_f;
  double bp_s = 0;
  ConfigFlags bp_flags;
  auto* bp = app.add_subcommand("breakpoint", "find a strict break point");
  bp->add_option("parent", bp_parent)->required();
  bp->add_option("--f", bp_f, "finite alphabet")->required();
  bp->add_option("--s", bp_s)->required();
  add_config_flags(bp, bp_flags);

  // bounds
  std::string bounds_name;
  long bounds_n = 0;
  int bounds_q = 0, bounds_k = 0, bounds_n0 = 0, bounds_fsize = 2;
  double bounds_s = 0, bounds_s_hi = 0, bounds_sigma = 0.5, bounds_c = 0, bounds_x = 0;
  auto* bnd = app.add_subcommand("bounds", "evaluate one closed-form bound");
  bnd->add_option("formula", bounds_name,
                  "golden | generic-lower | h | power-lower | mq-upper | mq-crude | "
                  "gamma | gamma-prime | tau | pstar-gamma | pstar-refined | "
                  "two-pow-gap | three-pow-gap | perturbation | thm3-const")
      ->required();
  bnd->add_option("--n", bounds_n);
  bnd->add_option("--q", bounds_q);
  bnd->add_option("--k", bounds_k);
  bnd->add_option("--n0", bounds_n0);
  bnd->add_option("--s", bounds_s);
  bnd->add_option("--s-hi", bounds_s_hi);
  bnd->add_option("--fsize", bounds_fsize);
  bnd->add_option("--sigma", bounds_sigma);
  bnd->add_option("--c", bounds_c);
  bnd->add_option("--x", bounds_x);

  CLI11_PARSE(app, argc, argv);

  try {
    if (dim->parsed())
      return cmd_dim(dim_spec, dim_flags, dim_tail, dim_cert, dim_out, dim_json);
    if (table->parsed()) return cmd_table(table_selector, table_data, table_flags);
    if (certify->parsed()) {
      std::map<std::string, std::string> params;
      if (certify->count("--q")) params["q"] = std::to_string(cert_q);
      if (certify->count("--k")) params["k"] = std::to_string(cert_k);
      if (!cert_alphabet.empty()) params["alphabet"] = cert_alphabet;
      if (!cert_a.empty()) params["a"] = cert_a;
      if (!cert_b.empty()) params["b"] = cert_b;
      if (certify->count("--max-index"))
        params["max-index"] = std::to_string(cert_max_index);
      return cmd_certify(cert_id, params, cert_flags, cert_out, cert_json);
    }
    if (verify->parsed()) return cmd_verify(verify_path, verify_flags);
    if (scan->parsed())
      return cmd_scan(scan_spec, scan_min, scan_max, scan_step, scan_size, scan_flags);
    if (bp->parsed()) return cmd_breakpoint(bp_parent, bp_f, bp_s, bp_flags);
    if (bnd->parsed())
      return cmd_bounds(bounds_name, bounds_n, bounds_q, bounds_k, bounds_n0,
                        bounds_s, bounds_s_hi, bounds_fsize, bounds_sigma,
                        bounds_c, bounds_x);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
