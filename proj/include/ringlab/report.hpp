#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "ringlab/suites.hpp"

namespace ringlab {

enum class ReportFormat { text, json };

struct ObjectReport {
  std::string name;
  int order = 0;
  nlohmann::ordered_json result;
};

struct Report {
  std::string command;
  std::vector<ObjectReport> objects;
  std::vector<SuiteResult> suites;
  long long elapsed_ms = 0;   // serialized only when timings is set
  bool timings = false;       // off by default so output is byte-stable
  bool input_error = false;   // check found invalid objects
};

// Serializes a report; the JSON form is byte-identical for identical inputs.
std::string emit_report(const Report& r, ReportFormat format);

// 0 all good, 1 suite discrepancy, 2 input error.
int report_exit_code(const Report& r);

struct CommandOptions {
  std::string command;            // check | radical | nilradical | ideals |
                                  // decompose | classify | verify-theorems
  std::string object;             // --object filter (empty: all applicable)
  std::string phi = "auto";       // --phi NAME|auto
  std::string suite;              // --suite NAME (empty: all)
  bool left = false;
  bool prime = false;
  bool maximal = false;
  ReportFormat format = ReportFormat::text;
  Config cfg;
  bool timings = false;
};

// Parses, evaluates and runs one CLI command over a spec text. Errors other
// than per-object check findings propagate as ringlab exceptions.
Report run_command(const std::string& spec_text, const CommandOptions& opt);

}  // namespace ringlab
