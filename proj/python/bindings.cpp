#include "gauge2/randomgen.hpp"
#include "gauge2/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gauge2;

namespace {

DifferentialCrossedModule builtinModule(const std::string & name)
{
  if (name == "gl2") return buildAdjointModule(buildGl(2));
  if (name == "gl3") return buildAdjointModule(buildGl(3));
  if (name == "so3") return buildAdjointModule(buildSo3());
  if (name == "poincare2") return buildPoincare2();
  throw std::invalid_argument("unknown builtin module: " + name);
}

} // namespace

PYBIND11_MODULE(_gauge2, m)
{
  m.doc() = "Exact verification engine for 2-connection identities";

  m.def(
      "run_scenario_text",
      [](const std::string & text, bool machine) {
        const Report r = runSuite(parseScenario(text));
        return machine ? emitReportMachine(r) : emitReportHuman(r);
      },
      py::arg("text"), py::arg("machine") = true,
      "Parse a scenario, run its suites, and return the report as text.");

  m.def(
      "run_scenario_file",
      [](const std::string & path, bool machine) {
        const Report r = runSuite(loadScenarioFile(path));
        return machine ? emitReportMachine(r) : emitReportHuman(r);
      },
      py::arg("path"), py::arg("machine") = true);

  m.def(
      "scenario_all_pass",
      [](const std::string & text) { return runSuite(parseScenario(text)).allPass(); }, py::arg("text"));

  m.def(
      "validate_builtin",
      [](const std::string & name) {
        const auto rep = builtinModule(name).validate();
        return py::make_tuple(rep.allPass(), rep.summary());
      },
      py::arg("name"), "Validate the axioms of a builtin crossed module; returns (ok, summary).");

  m.def(
      "bianchi_residual_terms",
      [](const std::string & module_name, size_t dim, int degree, uint64_t seed) {
        const auto cm = builtinModule(module_name);
        const RegistryPtr reg = VarRegistry::make(dim, 0);
        Rng rng(seed);
        const TwoConnection c = randomConnection(rng, reg, cm, degree);
        const auto [r1, r2] = bianchiResiduals(cm, c);
        return r1.termCount() + r2.termCount();
      },
      py::arg("module_name"), py::arg("dim") = 5, py::arg("degree") = 2, py::arg("seed") = 1,
      "Term count of the Bianchi residuals of a seeded random connection (0 = identity holds).");

  m.def(
      "simplex_monomial_integral",
      [](const std::vector<int> & exps) {
        const size_t k = exps.size();
        const RegistryPtr reg = VarRegistry::make(1, k);
        Poly::Exponents e(reg->arity(), 0);
        std::vector<size_t> idx;
        for (size_t j = 0; j < k; j++) {
          e[reg->tIndex(j)] = exps[j];
          idx.push_back(reg->tIndex(j));
        }
        const Poly p = Poly::monomial(reg, e, 1).simplexIntegrate(idx);
        Rational v = 0;
        for (const auto & [ee, c] : p.terms()) v += c;
        return v.str();
      },
      py::arg("exponents"),
      "Exact integral of t1^a1...tk^ak over the standard k-simplex, as a rational string.");
}
