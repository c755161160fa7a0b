#ifndef GAUGE2_SCENARIO_HPP
#define GAUGE2_SCENARIO_HPP

#include "gauge2/connection.hpp"

#include <optional>

namespace gauge2 {

/// Parse failure with 1-based line/column position.
class ScenarioError : public std::runtime_error
{
public:
  ScenarioError(size_t line, size_t col, const std::string & msg);
  size_t line() const { return m_line; }
  size_t col() const { return m_col; }

private:
  size_t m_line, m_col;
};

struct ConnectionSpec
{
  std::string name;
  bool random = true;
  int degree = 2;
  std::string path; // connection file when !random
};

/// Validated scenario: algebra choice, pairing, dimensions, seed, connections,
/// suites. Produced by parseScenario or built directly in tests.
struct Scenario
{
  std::string algebra_name = "gl"; // gl | so3 | poincare2 | file
  size_t algebra_param = 2;
  std::string algebra_file;

  std::string pairing_name = "symtrace"; // symtrace | file
  size_t pairing_n = 1;
  std::string pairing_file;

  size_t dim = 5;
  int degree = 2;
  std::optional<uint64_t> seed;

  std::vector<ConnectionSpec> connections;
  std::vector<std::string> suites;
  std::vector<size_t> descent_p = {0, 1, 2};

  bool low_dim_warning = false;    // set when dim < 2 * pairing_n + 3
  bool corrupt_curvature = false;  // mutation hook for tests, not in the grammar

  std::string source_text;
};

Scenario parseScenario(const std::string & text);
Scenario loadScenarioFile(const std::string & path);

/// Connection file: lines "A <a> <i> <coeff> <e1..em>" and
/// "B <b> <i> <j> <coeff> <e1..em>", 1-based indices, '#' comments.
TwoConnection loadConnectionFile(const std::string & path, const RegistryPtr & reg,
                                 const DifferentialCrossedModule & cm);

/// Pairing tensor file: "arity <n>" then "entry <a1..an> <i> <value>",
/// 1-based indices, symmetrized over the g-slots on load.
InvariantPolynomial loadInvariantPolynomialFile(const std::string & path,
                                                const DifferentialCrossedModule & cm);

} // namespace gauge2

#endif
