#include "gauge2/report.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char ** argv)
{
  CLI::App app{"Exact verification harness for 2-connection identities"};

  std::string scenario_path;
  std::vector<std::string> suites;
  std::optional<uint64_t> seed;
  std::optional<size_t> dim;
  std::optional<int> degree;
  std::optional<size_t> n;
  bool json = false;
  std::vector<size_t> p_list;

  app.add_option("--scenario", scenario_path, "Scenario file")->required()->check(CLI::ExistingFile);
  app.add_option("--suite", suites, "Suite selection (overrides the scenario)");
  app.add_option("--seed", seed, "Seed override");
  app.add_option("--dim", dim, "Manifold dimension override");
  app.add_option("--degree", degree, "Coefficient degree bound override");
  app.add_option("--n", n, "Pairing arity override (symtrace only)");
  app.add_flag("--json", json, "Emit the machine-readable JSON report");
  app.add_option("--p", p_list, "Descent levels (overrides the scenario)")->delimiter(',');

  CLI11_PARSE(app, argc, argv);

  try {
    gauge2::Scenario s = gauge2::loadScenarioFile(scenario_path);
    if (!suites.empty()) s.suites = suites;
    if (seed) s.seed = *seed;
    if (dim) s.dim = *dim;
    if (degree) s.degree = *degree;
    if (n) {
      if (s.pairing_name != "symtrace") {
        std::cerr << "error: --n only applies to symtrace pairings\n";
        return 2;
      }
      s.pairing_n = *n;
    }
    if (!p_list.empty()) s.descent_p = p_list;
    s.low_dim_warning = s.dim < 2 * s.pairing_n + 3;
    if (!s.seed) {
      for (const auto & c : s.connections)
        if (c.random) {
          std::cerr << "error: seed required: scenario uses randomized connections\n";
          return 2;
        }
    }

    const gauge2::Report r = gauge2::runSuite(s);
    std::cout << (json ? gauge2::emitReportMachine(r) : gauge2::emitReportHuman(r));
    return r.allPass() ? 0 : 1;
  } catch (const gauge2::ScenarioError & e) {
    std::cerr << "scenario error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception & e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
