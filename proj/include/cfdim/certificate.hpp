#ifndef CFDIM_CERTIFICATE_HPP
#define CFDIM_CERTIFICATE_HPP

#include <string>
#include <utility>
#include <vector>

#include "cfdim/bounds.hpp"
#include "cfdim/interval.hpp"

namespace cfdim {

// Machine-checkable record of one certified statement: canonical inputs,
// named enclosures and inequality reports, and an overall verdict. The text
// body round-trips bit-exactly (endpoints stored as shortest round-trip
// decimals) and is deterministic apart from the trailing timing field.
struct Certificate {
  static constexpr int kSchemaVersion = 1;

  int schema_version = kSchemaVersion;
  std::string statement_id;
  std::vector<std::pair<std::string, std::string>> inputs;

  struct Result {
    std::string name;
    std::string kind;  // "enclosure" | "report" | "note"
    Interval enclosure{};
    double threshold = 0.0;
    std::string verdict;  // report verdict, or free text for notes
    std::string detail;

    bool is_enclosure() const { return kind == "enclosure"; }
    bool is_report() const { return kind == "report"; }
  };
  std::vector<Result> results;

  std::string verdict;  // verified | inconclusive | failed
  double seconds = 0.0;

  void add_input(std::string key, std::string value);
  void add_enclosure(std::string name, const Interval& enc, std::string detail = "");
  void add_report(const bounds::BoundReport& report);
  void add_note(std::string name, std::string text);
  const Result* find(const std::string& name) const;
  std::string input(const std::string& key) const;  // "" when absent
};

// Canonical text form; with_timings=false yields the deterministic body.
std::string serialize(const Certificate& cert, bool with_timings = true);
Certificate parse_certificate(const std::string& text);

// Machine-readable mirror of the text certificate.
std::string to_json(const Certificate& cert, bool with_timings = true);

// Exit-code contract shared by the CLI: 0 verified, 2 inconclusive, 1 failed.
int verdict_exit_code(const std::string& verdict);

}  // namespace cfdim

#endif
