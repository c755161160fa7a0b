#include "gauge2/report.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace gauge2 {

bool Report::allPass() const
{
  for (const auto & c : checks)
    if (!c.pass) return false;
  return true;
}

std::string scenarioHash(const std::string & source)
{
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : source) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string emitReportHuman(const Report & r)
{
  std::ostringstream os;
  for (const auto & w : r.warnings) os << "WARNING " << w << "\n";
  size_t name_w = 0, eq_w = 0;
  for (const auto & c : r.checks) {
    name_w = std::max(name_w, c.name.size());
    eq_w = std::max(eq_w, c.eq.size() + 2);
  }
  size_t passed = 0;
  for (const auto & c : r.checks) {
    os << "CHECK " << std::left << std::setw(static_cast<int>(name_w)) << c.name << " "
       << std::setw(static_cast<int>(eq_w)) << ("[" + c.eq + "]") << " " << (c.pass ? "PASS" : "FAIL")
       << " residual_terms=" << c.residual_terms << " time=" << std::fixed << std::setprecision(1)
       << c.time_ms << "ms";
    if (!c.notes.empty()) os << "  # " << c.notes;
    os << "\n";
    if (c.pass) passed++;
  }
  os << "SUITE " << (r.allPass() ? "PASS" : "FAIL") << " " << passed << "/" << r.checks.size()
     << " checks passed (scenario " << r.scenario_hash << ")\n";
  return os.str();
}

std::string emitReportMachine(const Report & r)
{
  nlohmann::ordered_json j;
  j["scenario_hash"] = r.scenario_hash;
  j["warnings"] = r.warnings;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto & c : r.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["eq"] = c.eq;
    jc["pass"] = c.pass;
    jc["residual_terms"] = c.residual_terms;
    jc["notes"] = c.notes;
    j["checks"].push_back(std::move(jc));
  }
  j["all_pass"] = r.allPass();
  return j.dump(2) + "\n";
}

Report parseReportMachine(const std::string & json_text)
{
  const auto j = nlohmann::json::parse(json_text);
  Report r;
  r.scenario_hash = j.at("scenario_hash").get<std::string>();
  if (j.contains("warnings")) r.warnings = j.at("warnings").get<std::vector<std::string>>();
  for (const auto & jc : j.at("checks")) {
    CheckRecord c;
    c.name = jc.at("name").get<std::string>();
    c.eq = jc.at("eq").get<std::string>();
    c.pass = jc.at("pass").get<bool>();
    c.residual_terms = jc.at("residual_terms").get<size_t>();
    c.notes = jc.at("notes").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

} // namespace gauge2
