#include "gauge2/gauge.hpp"

#include <set>

namespace gauge2 {

namespace {

using MatForms = std::vector<std::vector<BiGradedForm>>;

MatForms matFormsZero(const RegistryPtr & reg, size_t n)
{
  return MatForms(n, std::vector<BiGradedForm>(n, BiGradedForm(reg, ValueTag::Scalar, 1)));
}

MatForms fromPolyMat(const RegistryPtr & reg, const PolyMat & m)
{
  MatForms r = matFormsZero(reg, m.size());
  for (size_t i = 0; i < m.size(); i++)
    for (size_t j = 0; j < m.size(); j++) r[i][j].addTerm(FormKey{}, 0, m[i][j]);
  return r;
}

MatForms matFormsMul(const MatForms & a, const MatForms & b)
{
  const size_t n = a.size();
  MatForms r = matFormsZero(a[0][0].registry(), n);
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++)
      for (size_t k = 0; k < n; k++)
        if (!a[i][k].isZero() && !b[k][j].isZero()) r[i][j] += wedge(a[i][k], b[k][j]);
  return r;
}

MatForms matFormsDx(const MatForms & a)
{
  MatForms r = a;
  for (auto & row : r)
    for (auto & e : row) e = e.dX();
  return r;
}

MatForms matFormsAdd(const MatForms & a, const MatForms & b)
{
  MatForms r = a;
  for (size_t i = 0; i < r.size(); i++)
    for (size_t j = 0; j < r.size(); j++) r[i][j] += b[i][j];
  return r;
}

void requireConjugationModule(const DifferentialCrossedModule & cm)
{
  if (!cm.supportsConjugation() || !cm.g().hasRepresentation() || !cm.h().hasRepresentation())
    throw std::domain_error("gauge transformation requires a conjugation-action (adjoint-type) module");
}

} // namespace

GaugePair identityGauge(const RegistryPtr & reg, const DifferentialCrossedModule & cm)
{
  const size_t n = cm.g().repDim();
  PolyMat id(n, std::vector<Poly>(n, Poly(reg)));
  for (size_t i = 0; i < n; i++) id[i][i] = Poly(reg, 1);
  return {id, id, BiGradedForm(reg, ValueTag::H, cm.h().dim())};
}

bool gaugePairValid(const GaugePair & gp)
{
  const size_t n = gp.g.size();
  const RegistryPtr & reg = gp.phi.registry();
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      Poly sum(reg);
      for (size_t k = 0; k < n; k++) sum += gp.g[i][k] * gp.g_inv[k][j];
      if (!(sum == (i == j ? Poly(reg, 1) : Poly(reg)))) return false;
    }
  return true;
}

MatForms repMatrixForm(const LieAlgebra & L, const BiGradedForm & w)
{
  const size_t n = L.repDim();
  MatForms r = matFormsZero(w.registry(), n);
  for (size_t a = 0; a < L.dim(); a++) {
    BiGradedForm s = w.slice(a);
    if (s.isZero()) continue;
    const RatMat & R = L.representation()[a];
    for (size_t i = 0; i < n; i++)
      for (size_t j = 0; j < n; j++)
        if (R[i][j] != 0) r[i][j] += s * R[i][j];
  }
  return r;
}

BiGradedForm fromMatrixForm(const LieAlgebra & L, const MatForms & m, ValueTag tag)
{
  const size_t n = m.size();
  const RegistryPtr reg = m[0][0].registry();
  BiGradedForm r(reg, tag, L.dim());

  // collect every (component key, monomial) and solve for basis coordinates
  std::set<FormKey> keys;
  for (const auto & row : m)
    for (const auto & e : row)
      for (const auto & [k, vec] : e.components()) keys.insert(k);

  for (const FormKey & key : keys) {
    std::set<Poly::Exponents> monos;
    for (const auto & row : m)
      for (const auto & e : row) {
        auto it = e.components().find(key);
        if (it == e.components().end()) continue;
        for (const auto & [exp, c] : it->second.at(0).terms()) monos.insert(exp);
      }
    for (const auto & exp : monos) {
      RatMat entry = matZero(n, n);
      for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) {
          auto it = m[i][j].components().find(key);
          if (it == m[i][j].components().end()) continue;
          auto tt = it->second.at(0).terms().find(exp);
          if (tt != it->second.at(0).terms().end()) entry[i][j] = tt->second;
        }
      auto coords = L.coordinatesOf(entry);
      if (!coords) throw std::domain_error("fromMatrixForm: matrix outside the representation span");
      // consistency: coordinatesOf solves exactly or rejects, nothing to re-check
      for (size_t a = 0; a < L.dim(); a++)
        if ((*coords)[a] != 0) r.addTerm(key, a, Poly::monomial(reg, exp, (*coords)[a]));
    }
  }
  return r;
}

TwoConnection gaugeTransform(const DifferentialCrossedModule & cm, const TwoConnection & c,
                             const GaugePair & gp)
{
  requireConjugationModule(cm);
  const RegistryPtr & reg = c.A.registry();
  const MatForms Mg = fromPolyMat(reg, gp.g);
  const MatForms Mginv = fromPolyMat(reg, gp.g_inv);

  const MatForms MA = repMatrixForm(cm.g(), c.A);
  const MatForms conjA = matFormsMul(Mginv, matFormsMul(MA, Mg));
  const MatForms gdg = matFormsMul(Mginv, matFormsDx(Mg));
  BiGradedForm Ap = fromMatrixForm(cm.g(), matFormsAdd(conjA, gdg), ValueTag::G) + alphaPush(cm, gp.phi);

  const MatForms MB = repMatrixForm(cm.h(), c.B);
  BiGradedForm Bp = fromMatrixForm(cm.h(), matFormsMul(Mginv, matFormsMul(MB, Mg)), ValueTag::H);
  Bp += gp.phi.dX() + wedgeAction(cm, Ap, gp.phi) - wedgeMatrix(cm.h(), gp.phi, gp.phi);
  return {std::move(Ap), std::move(Bp)};
}

std::pair<BiGradedForm, BiGradedForm> verifyGaugeCovariance(const DifferentialCrossedModule & cm,
                                                            const TwoConnection & c, const GaugePair & gp)
{
  requireConjugationModule(cm);
  const RegistryPtr & reg = c.A.registry();
  const MatForms Mg = fromPolyMat(reg, gp.g);
  const MatForms Mginv = fromPolyMat(reg, gp.g_inv);

  const TwoConnection cp = gaugeTransform(cm, c, gp);
  const TwoCurvature kp = curvature(cm, cp);
  const TwoCurvature k = curvature(cm, c);

  const BiGradedForm Fconj =
      fromMatrixForm(cm.g(), matFormsMul(Mginv, matFormsMul(repMatrixForm(cm.g(), k.F), Mg)), ValueTag::G);
  const BiGradedForm Gconj =
      fromMatrixForm(cm.h(), matFormsMul(Mginv, matFormsMul(repMatrixForm(cm.h(), k.G), Mg)), ValueTag::H);

  BiGradedForm rF = kp.F - Fconj;
  BiGradedForm rG = kp.G - (Gconj + wedgeAction(cm, kp.F, gp.phi));
  return {std::move(rF), std::move(rG)};
}

BiGradedForm invarianceCheckP(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                              const TwoConnection & c, const GaugePair & gp, size_t n)
{
  const TwoConnection cp = gaugeTransform(cm, c, gp);
  return invariantFormP(P, cm, cp, n) - invariantFormP(P, cm, c, n);
}

} // namespace gauge2
