#ifndef GAUGE2_REPORT_HPP
#define GAUGE2_REPORT_HPP

#include "gauge2/scenario.hpp"

#include <string>
#include <vector>

namespace gauge2 {

struct CheckRecord
{
  std::string name;
  std::string eq; // short equation tag
  bool pass = false;
  size_t residual_terms = 0;
  std::string notes;
  double time_ms = 0; // human output only, never serialized to the machine format
};

struct Report
{
  std::string scenario_hash;
  std::vector<CheckRecord> checks;
  std::vector<std::string> warnings;

  bool allPass() const;
};

/// FNV-1a 64 of the scenario source, hex.
std::string scenarioHash(const std::string & source);

/// Runs the selected suites; check failures are report content, never throws
/// for them.
Report runSuite(const Scenario & s);

/// "CHECK <name> [<eq-tag>] PASS|FAIL residual_terms=<k> time=<ms>" per check.
std::string emitReportHuman(const Report & r);

/// Deterministic JSON {scenario_hash, checks:[{name,eq,pass,residual_terms,notes}], all_pass}.
std::string emitReportMachine(const Report & r);

Report parseReportMachine(const std::string & json_text);

} // namespace gauge2

#endif
