#include "gauge2/gauge.hpp"
#include "gauge2/homotopy.hpp"
#include "gauge2/randomgen.hpp"
#include "gauge2/report.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

namespace gauge2 {

namespace {

DifferentialCrossedModule buildModule(const Scenario & s)
{
  if (s.algebra_name == "gl") return buildAdjointModule(buildGl(s.algebra_param));
  if (s.algebra_name == "so3") return buildAdjointModule(buildSo3());
  if (s.algebra_name == "poincare2") return buildPoincare2();
  if (s.algebra_name == "file") return parseCrossedModuleFile(s.algebra_file);
  throw std::runtime_error("unknown algebra: " + s.algebra_name);
}

InvariantPolynomial buildPairing(const Scenario & s, const DifferentialCrossedModule & cm)
{
  if (s.pairing_name == "symtrace") return invpolyFromTrace(cm, s.pairing_n);
  return loadInvariantPolynomialFile(s.pairing_file, cm);
}

const std::vector<std::string> kSuiteOrder = {
    "validate", "bianchi",  "closedness", "gauge",            "chern-weil",     "chsas",
    "triangle", "cartan",   "descent",    "graded-relations", "stokes-selfcal"};

std::vector<std::string> expandSuites(const std::vector<std::string> & selected)
{
  bool all = selected.empty();
  for (const auto & s : selected) all = all || s == "all";
  if (all) return kSuiteOrder;
  std::vector<std::string> out;
  for (const auto & k : kSuiteOrder)
    for (const auto & s : selected)
      if (s == k && std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
  return out;
}

class SuiteRunner
{
public:
  SuiteRunner(const Scenario & s) : m_s(s), m_cm(buildModule(s)), m_P(buildPairing(s, m_cm))
  {
    m_n = m_P.arity();
    m_reg = VarRegistry::make(s.dim, 0);
    Rng rng(s.seed.value_or(0));
    for (const auto & spec : s.connections) {
      TwoConnection c = spec.random ? randomConnection(rng, m_reg, m_cm, spec.degree)
                                    : loadConnectionFile(spec.path, m_reg, m_cm);
      m_names.push_back(spec.name);
      m_cons.push_back(std::move(c));
    }
  }

  Report run()
  {
    Report r;
    r.scenario_hash = scenarioHash(m_s.source_text);
    if (m_s.low_dim_warning)
      r.warnings.push_back("low dimension: dim < 2n+3, the top invariant form may vanish identically");
    m_out = &r;
    for (const auto & suite : expandSuites(m_s.suites)) {
      if (suite == "validate") runValidate();
      else if (suite == "bianchi") runBianchi();
      else if (suite == "closedness") runClosedness();
      else if (suite == "gauge") runGauge();
      else if (suite == "chern-weil") runChernWeil();
      else if (suite == "chsas") runChsas();
      else if (suite == "triangle") runTriangle();
      else if (suite == "cartan") runCartan();
      else if (suite == "descent") runDescent();
      else if (suite == "graded-relations") runGraded();
      else if (suite == "stokes-selfcal") runStokes();
    }
    return r;
  }

private:
  using Clock = std::chrono::steady_clock;

  void record(const std::string & name, const std::string & eq, const std::string & notes,
              const std::function<std::vector<BiGradedForm>()> & fn)
  {
    CheckRecord c;
    c.name = name;
    c.eq = eq;
    c.notes = notes;
    const auto t0 = Clock::now();
    try {
      size_t terms = 0;
      bool zero = true;
      Rng spot_rng(m_s.seed.value_or(0) ^ 0xa5a5a5a5ull);
      Rational spot = 0;
      for (const auto & res : fn()) {
        terms += res.termCount();
        zero = zero && res.isZero();
        if (!res.isZero()) spot += res.absEvaluate(randomPoint(spot_rng, res.registry()));
      }
      c.pass = zero;
      c.residual_terms = terms;
      if (!zero) c.notes += (c.notes.empty() ? "" : "; ") + std::string("numeric spot |res| = ") + spot.str();
    } catch (const std::exception & e) {
      c.pass = false;
      c.residual_terms = 0;
      c.notes += (c.notes.empty() ? "" : "; ") + std::string("error: ") + e.what();
    }
    c.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    m_out->checks.push_back(std::move(c));
  }

  void recordFlag(const std::string & name, const std::string & eq, bool pass, const std::string & notes)
  {
    m_out->checks.push_back({name, eq, pass, pass ? 0u : 1u, notes, 0.0});
  }

  void runValidate()
  {
    for (const auto & a : m_cm.validate().axioms)
      recordFlag("validate-dcm:" + a.name, "A", a.pass, a.witness);
    for (const auto & a : m_P.validate(m_cm).axioms)
      recordFlag("validate-invpoly:" + a.name, "B", a.pass, a.witness);
  }

  void runBianchi()
  {
    for (size_t i = 0; i < m_cons.size(); i++) {
      const TwoConnection & c = m_cons[i];
      std::string notes = "F = dA + 1/2[A,A] - alpha(B)";
      if (m_s.corrupt_curvature) notes += "; corrupted curvature fixture";
      record("bianchi[" + m_names[i] + "]", "2bi/2bi1", notes, [&]() {
        if (!m_s.corrupt_curvature) {
          auto [r1, r2] = bianchiResiduals(m_cm, c);
          return std::vector<BiGradedForm>{r1, r2};
        }
        TwoCurvature k = curvature(m_cm, c);
        BiGradedForm pert(m_reg, ValueTag::G, m_cm.g().dim());
        pert.addTerm(FormKey{0, 0b11}, 0, Poly(m_reg, 1));
        k.F += pert;
        BiGradedForm r1 = k.F.dX() + wedgeBracket(m_cm.g(), c.A, k.F) + alphaPush(m_cm, k.G);
        BiGradedForm r2 = k.G.dX() + wedgeAction(m_cm, c.A, k.G) - wedgeAction(m_cm, k.F, c.B);
        return std::vector<BiGradedForm>{r1, r2};
      });
    }
  }

  void runClosedness()
  {
    for (size_t i = 0; i < m_cons.size(); i++)
      record("closedness[" + m_names[i] + "]", "p", "", [&, i]() {
        return std::vector<BiGradedForm>{invariantFormP(m_P, m_cm, m_cons[i], m_n).dX()};
      });
  }

  void runGauge()
  {
    if (!m_cm.supportsConjugation() || !m_cm.g().hasRepresentation() || !m_cm.h().hasRepresentation()) {
      recordFlag("gauge", "2gt11/2gt22", true,
                 "skipped: module does not support conjugation-action gauge transformations");
      return;
    }
    Rng rng(m_s.seed.value_or(0) ^ 0x9e3779b97f4a7c15ull);
    for (size_t i = 0; i < m_cons.size(); i++) {
      const GaugePair gp_const = randomConstantGauge(rng, m_reg, m_cm, m_s.degree);
      const GaugePair gp_uni = randomUnipotentGauge(rng, m_reg, m_cm, m_s.degree);
      for (const auto & [kind, gp] : {std::pair<const char *, const GaugePair &>{"const", gp_const},
                                      std::pair<const char *, const GaugePair &>{"unipotent", gp_uni}}) {
        const std::string sfx = "[" + m_names[i] + ":" + kind + "]";
        record("gauge-covariance" + sfx, "2gt11/2gt22", "", [&]() {
          auto [rF, rG] = verifyGaugeCovariance(m_cm, m_cons[i], gp);
          return std::vector<BiGradedForm>{rF, rG};
        });
        record("gauge-invariance" + sfx, "inv", "", [&]() {
          return std::vector<BiGradedForm>{invarianceCheckP(m_P, m_cm, m_cons[i], gp, m_n)};
        });
      }
    }
  }

  void runChernWeil()
  {
    for (size_t i = 0; i + 1 < m_cons.size(); i++) {
      const std::string sfx = "[" + m_names[i] + "," + m_names[i + 1] + "]";
      record("chern-weil" + sfx, "ch1/2AST", "", [&, i]() {
        auto [r1, r2] = chernWeilCheck(m_P, m_cm, m_cons[i], m_cons[i + 1], m_n);
        return std::vector<BiGradedForm>{r1, r2};
      });
    }
  }

  void runChsas()
  {
    for (size_t i = 0; i < m_cons.size(); i++) {
      const TwoConnection & c = m_cons[i];
      record("chsas-d[" + m_names[i] + "]", "QQ", "", [&]() {
        return std::vector<BiGradedForm>{chsasForm(m_P, m_cm, c, m_n).dX()
                                         - invariantFormP(m_P, m_cm, c, m_n)};
      });
      if (m_n == 1)
        record("chsas-closed-form[" + m_names[i] + "]", "QQ", "n=1 closed form", [&]() {
          BiGradedForm h1 = c.B.dX() * Rational(1, 2) + wedgeAction(m_cm, c.A, c.B) * Rational(1, 3);
          BiGradedForm g2 = c.A.dX() * Rational(1, 2) + halfBracketSquare(m_cm.g(), c.A) * Rational(1, 3)
                            - alphaPush(m_cm, c.B) * Rational(1, 2);
          BiGradedForm closed = pairForms(m_P, {&c.A}, h1) + pairForms(m_P, {&g2}, c.B);
          return std::vector<BiGradedForm>{chsasForm(m_P, m_cm, c, 1) - closed};
        });
    }
  }

  void runTriangle()
  {
    const std::string notes = "q_boundary as printed; no sign adjustment applied";
    for (size_t i = 0; i + 2 < m_cons.size(); i++) {
      const std::string sfx = "[" + m_names[i] + "," + m_names[i + 1] + "," + m_names[i + 2] + "]";
      record("triangle" + sfx, "2", notes, [&, i]() {
        return std::vector<BiGradedForm>{
            triangleCheck(m_P, m_cm, m_cons[i], m_cons[i + 1], m_cons[i + 2], m_n)};
      });
    }
    if (m_cons.size() >= 2) {
      record("triangle-corollary[" + m_names[0] + "," + m_names[1] + ",0]", "2", notes, [&]() {
        return std::vector<BiGradedForm>{
            triangleCheck(m_P, m_cm, m_cons[0], m_cons[1], zeroConnection(m_reg, m_cm), m_n)};
      });
    }
  }

  void runCartan()
  {
    for (size_t i = 0; i + 1 < m_cons.size(); i++)
      record("cartan[" + m_names[i] + "," + m_names[i + 1] + "]", "cc", "", [&, i]() {
        return std::vector<BiGradedForm>{cartanHomotopyCheck(m_P, m_cm, m_cons[i], m_cons[i + 1], m_n)};
      });
  }

  void runDescent()
  {
    for (size_t p : m_s.descent_p) {
      if (m_cons.size() < p + 2) {
        recordFlag("descent-p" + std::to_string(p), "echf", false,
                   "suite descent p=" + std::to_string(p) + " requires " + std::to_string(p + 2)
                       + " connections, scenario declares " + std::to_string(m_cons.size()));
        continue;
      }
      record("descent-p" + std::to_string(p), "echf", "", [&, p]() {
        std::vector<TwoConnection> members(m_cons.begin(), m_cons.begin() + static_cast<long>(p) + 2);
        return std::vector<BiGradedForm>{echfCheck(p, makeFamily(std::move(members)), m_P, m_cm, m_n)};
      });
    }
  }

  void runGraded()
  {
    if (m_cons.size() < 2) {
      recordFlag("graded-relations", "grad", false, "requires at least 2 connections");
      return;
    }
    ConnectionFamily fam = makeFamily({m_cons[0], m_cons[1]});
    for (auto & [name, res] : gradedRelationsCheck(fam, m_P, m_cm, m_n))
      record("graded:" + name, "grad", "", [&]() { return std::vector<BiGradedForm>{res}; });
  }

  void runStokes()
  {
    if (!m_s.seed) {
      recordFlag("stokes-selfcal", "stokes", false, "seed required");
      return;
    }
    Rng rng(*m_s.seed ^ 0x517cc1b727220a95ull);
    for (size_t k = 1; k <= 3; k++) {
      record("stokes-k" + std::to_string(k), "stokes", "boundary orientation self-calibration", [&, k]() {
        const RegistryPtr reg_k = VarRegistry::make(2, k);
        const RegistryPtr x_reg = VarRegistry::make(2, 0);
        const BiGradedForm w = randomScalarForm(rng, reg_k, 1, k - 1, 2);
        BiGradedForm lhs(x_reg, ValueTag::Scalar, 1);
        for (size_t i = 0; i <= k; i++) {
          BiGradedForm f = simplexIntegrateForm(faceRestrict(w, i)).toRegistry(x_reg);
          lhs += (i % 2 == 0) ? f : -f;
        }
        const BiGradedForm rhs = simplexIntegrateForm(w.dT()).toRegistry(x_reg);
        return std::vector<BiGradedForm>{lhs - rhs};
      });
    }
  }

  const Scenario & m_s;
  DifferentialCrossedModule m_cm;
  InvariantPolynomial m_P;
  size_t m_n = 1;
  RegistryPtr m_reg;
  std::vector<std::string> m_names;
  std::vector<TwoConnection> m_cons;
  Report * m_out = nullptr;
};

} // namespace

Report runSuite(const Scenario & s)
{
  return SuiteRunner(s).run();
}

} // namespace gauge2
