#include "cfdim/certificate.hpp"

#include <json.hpp>

#include <sstream>

#include "cfdim/errors.hpp"

namespace cfdim {

void Certificate::add_input(std::string key, std::string value) {
  inputs.emplace_back(std::move(key), std::move(value));
}

void Certificate::add_enclosure(std::string name, const Interval& enc,
                                std::string detail) {
  Result r;
  r.name = std::move(name);
  r.kind = "enclosure";
  r.enclosure = enc;
  r.detail = std::move(detail);
  results.push_back(std::move(r));
}

void Certificate::add_report(const bounds::BoundReport& report) {
  Result r;
  r.name = report.name;
  r.kind = "report";
  r.enclosure = report.value;
  r.threshold = report.threshold;
  r.verdict = report.verdict_text();
  r.detail = report.inputs;
  results.push_back(std::move(r));
}

void Certificate::add_note(std::string name, std::string text) {
  Result r;
  r.name = std::move(name);
  r.kind = "note";
  r.verdict = std::move(text);
  results.push_back(std::move(r));
}

const Certificate::Result* Certificate::find(const std::string& name) const {
  for (const Result& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

std::string Certificate::input(const std::string& key) const {
  for (const auto& [k, v] : inputs)
    if (k == key) return v;
  return "";
}

std::string serialize(const Certificate& cert, bool with_timings) {
  std::ostringstream os;
  os << "cfdim-certificate v" << cert.schema_version << "\n";
  os << "statement: " << cert.statement_id << "\n";
  os << "verdict: " << cert.verdict << "\n";
  os << "inputs:\n";
  for (const auto& [k, v] : cert.inputs) os << "  " << k << ": " << v << "\n";
  os << "results:\n";
  for (const auto& r : cert.results) {
    os << "  - name: " << r.name << "\n";
    os << "    kind: " << r.kind << "\n";
    if (r.kind != "note") {
      os << "    enclosure: " << to_string(r.enclosure, 6) << "\n";
      os << "    lo: " << exact_decimal(r.enclosure.lo) << "\n";
      os << "    hi: " << exact_decimal(r.enclosure.hi) << "\n";
    }
    if (r.kind == "report") {
      os << "    threshold: " << exact_decimal(r.threshold) << "\n";
    }
    if (!r.verdict.empty()) os << "    verdict: " << r.verdict << "\n";
    if (!r.detail.empty()) os << "    detail: " << r.detail << "\n";
  }
  if (with_timings) {
    os << "timings:\n";
    os << "  seconds: " << exact_decimal(cert.seconds) << "\n";
  }
  return os.str();
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::pair<std::string, std::string> split_kv(const std::string& line) {
  auto pos = line.find(": ");
  if (pos == std::string::npos) {
    if (!line.empty() && line.back() == ':') return {line.substr(0, line.size() - 1), ""};
    throw ParamError("bad certificate line: '" + line + "'");
  }
  return {line.substr(0, pos), line.substr(pos + 2)};
}

}  // namespace

Certificate parse_certificate(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw ParamError("empty certificate");
  if (line.rfind("cfdim-certificate v", 0) != 0)
    throw ParamError("not a certificate file");
  Certificate cert;
  cert.schema_version = std::stoi(line.substr(19));
  if (cert.schema_version != Certificate::kSchemaVersion)
    throw ParamError("unsupported certificate schema version " +
                     std::to_string(cert.schema_version));

  enum class Section { none, inputs, results, timings };
  Section section = Section::none;
  Certificate::Result* current = nullptr;

  while (std::getline(is, line)) {
    if (strip(line).empty()) continue;
    if (line == "inputs:") { section = Section::inputs; continue; }
    if (line == "results:") { section = Section::results; current = nullptr; continue; }
    if (line == "timings:") { section = Section::timings; continue; }
    if (line.rfind("statement: ", 0) == 0) { cert.statement_id = line.substr(11); continue; }
    if (line.rfind("verdict: ", 0) == 0 && section == Section::none) {
      cert.verdict = line.substr(9);
      continue;
    }

    std::string body = strip(line);
    switch (section) {
      case Section::inputs: {
        auto [k, v] = split_kv(body);
        cert.add_input(k, v);
        break;
      }
      case Section::results: {
        if (body.rfind("- name: ", 0) == 0) {
          cert.results.emplace_back();
          current = &cert.results.back();
          current->name = body.substr(8);
          break;
        }
        if (!current) throw ParamError("result field before '- name:'");
        auto [k, v] = split_kv(body);
        if (k == "kind") current->kind = v;
        else if (k == "lo") current->enclosure.lo = parse_double(v);
        else if (k == "hi") current->enclosure.hi = parse_double(v);
        else if (k == "threshold") current->threshold = parse_double(v);
        else if (k == "verdict") current->verdict = v;
        else if (k == "detail") current->detail = v;
        else if (k == "enclosure") { /* display form; exact lo/hi follow */ }
        else throw ParamError("unknown result field '" + k + "'");
        break;
      }
      case Section::timings: {
        auto [k, v] = split_kv(body);
        if (k == "seconds") cert.seconds = parse_double(v);
        break;
      }
      case Section::none:
        throw ParamError("unexpected certificate line: '" + line + "'");
    }
  }
  return cert;
}

std::string to_json(const Certificate& cert, bool with_timings) {
  nlohmann::json j;
  j["schema_version"] = cert.schema_version;
  j["statement"] = cert.statement_id;
  j["verdict"] = cert.verdict;
  nlohmann::json in = nlohmann::json::object();
  for (const auto& [k, v] : cert.inputs) in[k] = v;
  j["inputs"] = in;
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : cert.results) {
    nlohmann::json e;
    e["name"] = r.name;
    e["kind"] = r.kind;
    if (r.kind != "note") {
      e["lo"] = r.enclosure.lo;
      e["hi"] = r.enclosure.hi;
      e["display"] = to_string(r.enclosure, 6);
    }
    if (r.kind == "report") e["threshold"] = r.threshold;
    if (!r.verdict.empty()) e["verdict"] = r.verdict;
    if (!r.detail.empty()) e["detail"] = r.detail;
    rs.push_back(e);
  }
  j["results"] = rs;
  if (with_timings) j["seconds"] = cert.seconds;
  return j.dump(2);
}

int verdict_exit_code(const std::string& verdict) {
  if (verdict == "verified") return 0;
  if (verdict == "inconclusive") return 2;
  return 1;
}

}  // namespace cfdim
