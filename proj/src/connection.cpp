#include "gauge2/connection.hpp"

namespace gauge2 {

namespace {

RegistryPtr extendWithT(const RegistryPtr & x_reg, const std::vector<std::string> & tnames)
{
  if (x_reg->numT() != 0) throw std::invalid_argument("extendWithT: expected a t-free registry");
  return std::make_shared<VarRegistry>(x_reg->xNames(), tnames);
}

/// Integrates every coefficient of a pure-dx form over the standard simplex
/// in all of its t variables and drops the result to the x-only registry.
BiGradedForm integrateCoefficientsSimplex(const BiGradedForm & w, const RegistryPtr & x_reg)
{
  const RegistryPtr & reg = w.registry();
  std::vector<size_t> t_idx;
  for (size_t j = 0; j < reg->numT(); j++) t_idx.push_back(reg->tIndex(j));
  BiGradedForm r(reg, w.tag(), w.valueDim());
  for (const auto & [key, vec] : w.components()) {
    if (key.dt != 0) throw std::invalid_argument("integrateCoefficientsSimplex: form has dt components");
    for (size_t v = 0; v < w.valueDim(); v++)
      if (!vec[v].isZero()) r.addTerm(key, v, vec[v].simplexIntegrate(t_idx));
  }
  return r.toRegistry(x_reg);
}

BiGradedForm integrateCoefficientsBox(const BiGradedForm & w, const RegistryPtr & x_reg)
{
  const RegistryPtr & reg = w.registry();
  std::vector<size_t> t_idx;
  for (size_t j = 0; j < reg->numT(); j++) t_idx.push_back(reg->tIndex(j));
  BiGradedForm r(reg, w.tag(), w.valueDim());
  for (const auto & [key, vec] : w.components()) {
    if (key.dt != 0) throw std::invalid_argument("integrateCoefficientsBox: form has dt components");
    for (size_t v = 0; v < w.valueDim(); v++)
      if (!vec[v].isZero()) r.addTerm(key, v, vec[v].boxIntegrate(t_idx));
  }
  return r.toRegistry(x_reg);
}

TwoCurvature curvatureOfForms(const DifferentialCrossedModule & cm, const BiGradedForm & A,
                              const BiGradedForm & B)
{
  BiGradedForm F = A.dX() + halfBracketSquare(cm.g(), A) - alphaPush(cm, B);
  BiGradedForm G = B.dX() + wedgeAction(cm, A, B);
  return {std::move(F), std::move(G)};
}

} // namespace

TwoConnection zeroConnection(const RegistryPtr & reg, const DifferentialCrossedModule & cm)
{
  return {BiGradedForm(reg, ValueTag::G, cm.g().dim()), BiGradedForm(reg, ValueTag::H, cm.h().dim())};
}

BiGradedForm halfBracketSquare(const LieAlgebra & L, const BiGradedForm & a)
{
  return wedgeBracket(L, a, a) * Rational(1, 2);
}

TwoCurvature curvature(const DifferentialCrossedModule & cm, const TwoConnection & c)
{
  return curvatureOfForms(cm, c.A, c.B);
}

std::pair<BiGradedForm, BiGradedForm> bianchiResiduals(const DifferentialCrossedModule & cm,
                                                       const TwoConnection & c)
{
  const TwoCurvature k = curvature(cm, c);
  BiGradedForm r1 = k.F.dX() + wedgeBracket(cm.g(), c.A, k.F) + alphaPush(cm, k.G);
  BiGradedForm r2 = k.G.dX() + wedgeAction(cm, c.A, k.G) - wedgeAction(cm, k.F.retag(ValueTag::G), c.B);
  return {std::move(r1), std::move(r2)};
}

bool isFakeFlat(const DifferentialCrossedModule & cm, const TwoConnection & c)
{
  return curvature(cm, c).F.isZero();
}

bool isFlat(const DifferentialCrossedModule & cm, const TwoConnection & c)
{
  const TwoCurvature k = curvature(cm, c);
  return k.F.isZero() && k.G.isZero();
}

BiGradedForm invariantFormP(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                            const TwoConnection & c, size_t n)
{
  const TwoCurvature k = curvature(cm, c);
  std::vector<const BiGradedForm *> slots(n, &k.F);
  return pairForms(P, slots, k.G);
}

ConnectionFamily makeFamily(std::vector<TwoConnection> members)
{
  if (members.empty()) throw std::invalid_argument("makeFamily: empty member list");
  const RegistryPtr x_reg = members[0].A.registry();
  const size_t k = members.size() - 1;
  std::vector<std::string> tnames;
  for (size_t j = 1; j <= k; j++) tnames.push_back("t" + std::to_string(j));
  RegistryPtr fr = extendWithT(x_reg, tnames);

  BiGradedForm At = members[0].A.toRegistry(fr);
  BiGradedForm Bt = members[0].B.toRegistry(fr);
  for (size_t j = 1; j <= k; j++) {
    const Poly tj = Poly::variable(fr, fr->tIndex(j - 1));
    At += (members[j].A.toRegistry(fr) - members[0].A.toRegistry(fr)).scaleBy(tj);
    Bt += (members[j].B.toRegistry(fr) - members[0].B.toRegistry(fr)).scaleBy(tj);
  }
  return {std::move(members), std::move(fr), std::move(At), std::move(Bt)};
}

TwoCurvature familyCurvature(const DifferentialCrossedModule & cm, const ConnectionFamily & fam)
{
  return curvatureOfForms(cm, fam.At, fam.Bt);
}

BiGradedForm specializeT(const BiGradedForm & w, const std::vector<Rational> & t_values,
                         const RegistryPtr & x_reg)
{
  const RegistryPtr & reg = w.registry();
  if (t_values.size() != reg->numT()) throw std::invalid_argument("specializeT: value count mismatch");
  BiGradedForm r(reg, w.tag(), w.valueDim());
  for (const auto & [key, vec] : w.components()) {
    if (key.dt != 0) throw std::invalid_argument("specializeT: form has dt components");
    for (size_t v = 0; v < w.valueDim(); v++) {
      Poly p = vec[v];
      for (size_t j = 0; j < t_values.size(); j++)
        p = p.substitute(reg->tIndex(j), Poly(reg, t_values[j]));
      r.addTerm(key, v, p);
    }
  }
  return r.toRegistry(x_reg);
}

BiGradedForm transgressionQ(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                            const TwoConnection & c0, const TwoConnection & c1, size_t n)
{
  const RegistryPtr x_reg = c0.A.registry();
  ConnectionFamily fam = makeFamily({c0, c1});
  const TwoCurvature kt = familyCurvature(cm, fam);
  const BiGradedForm theta = (c1.A - c0.A).toRegistry(fam.familyRegistry);
  const BiGradedForm phi = (c1.B - c0.B).toRegistry(fam.familyRegistry);

  std::vector<const BiGradedForm *> slots1{&theta};
  for (size_t i = 1; i < n; i++) slots1.push_back(&kt.F);
  std::vector<const BiGradedForm *> slots2(n, &kt.F);

  BiGradedForm integrand = pairForms(P, slots1, kt.G) * Rational(static_cast<long>(n))
                           + pairForms(P, slots2, phi);
  return integrateCoefficientsSimplex(integrand, x_reg);
}

BiGradedForm chsasForm(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                       const TwoConnection & c, size_t n)
{
  const RegistryPtr x_reg = c.A.registry();
  RegistryPtr rt = extendWithT(x_reg, {"t1"});
  const Poly t = Poly::variable(rt, rt->tIndex(0));
  const BiGradedForm A = c.A.toRegistry(rt);
  const BiGradedForm B = c.B.toRegistry(rt);

  const BiGradedForm Ft =
      A.dX().scaleBy(t) + halfBracketSquare(cm.g(), A).scaleBy(t * t) - alphaPush(cm, B).scaleBy(t);
  const BiGradedForm Gt = B.dX().scaleBy(t) + wedgeAction(cm, A, B).scaleBy(t * t);

  std::vector<const BiGradedForm *> slots1{&A};
  for (size_t i = 1; i < n; i++) slots1.push_back(&Ft);
  std::vector<const BiGradedForm *> slots2(n, &Ft);

  BiGradedForm integrand = pairForms(P, slots1, Gt) * Rational(static_cast<long>(n))
                           + pairForms(P, slots2, B);
  return integrateCoefficientsSimplex(integrand, x_reg);
}

BiGradedForm qBoundary(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                       const TwoConnection & c0, const TwoConnection & c1, const TwoConnection & c2,
                       size_t n)
{
  const RegistryPtr x_reg = c0.A.registry();
  ConnectionFamily fam = makeFamily({c0, c1, c2});
  const RegistryPtr & fr = fam.familyRegistry;
  const TwoCurvature kt = familyCurvature(cm, fam);
  const BiGradedForm th10 = (c1.A - c0.A).toRegistry(fr);
  const BiGradedForm th20 = (c2.A - c0.A).toRegistry(fr);
  const BiGradedForm ph10 = (c1.B - c0.B).toRegistry(fr);
  const BiGradedForm ph20 = (c2.B - c0.B).toRegistry(fr);

  BiGradedForm integrand(fr, ValueTag::Scalar, 1);
  if (n >= 2) {
    std::vector<const BiGradedForm *> slots{&th10, &th20};
    for (size_t i = 2; i < n; i++) slots.push_back(&kt.F);
    integrand += pairForms(P, slots, kt.G) * Rational(static_cast<long>(n * (n - 1)));
  }
  {
    std::vector<const BiGradedForm *> slots{&th10};
    for (size_t i = 1; i < n; i++) slots.push_back(&kt.F);
    integrand += pairForms(P, slots, ph20) * Rational(static_cast<long>(n));
  }
  {
    std::vector<const BiGradedForm *> slots{&th20};
    for (size_t i = 1; i < n; i++) slots.push_back(&kt.F);
    integrand -= pairForms(P, slots, ph10) * Rational(static_cast<long>(n));
  }
  return integrateCoefficientsSimplex(integrand, x_reg);
}

std::pair<BiGradedForm, BiGradedForm> scaledCurvature(const DifferentialCrossedModule & cm,
                                                      const ConnectionFamily & fam2,
                                                      const RegistryPtr & ts_reg)
{
  const Poly s = Poly::variable(ts_reg, ts_reg->indexOf("s"));
  const Poly s2s = s * s - s;
  const BiGradedForm At = fam2.At.toRegistry(ts_reg);
  const BiGradedForm Bt = fam2.Bt.toRegistry(ts_reg);
  const TwoCurvature kt = curvatureOfForms(cm, At, Bt);
  BiGradedForm Fst = kt.F.scaleBy(s) + halfBracketSquare(cm.g(), At).scaleBy(s2s);
  BiGradedForm Gst = kt.G.scaleBy(s) + wedgeAction(cm, At, Bt).scaleBy(s2s);
  return {std::move(Fst), std::move(Gst)};
}

BiGradedForm bForm(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                   const TwoConnection & c0, const TwoConnection & c1, size_t n)
{
  const RegistryPtr x_reg = c0.A.registry();
  RegistryPtr ts_reg = extendWithT(x_reg, {"t1", "s"});
  ConnectionFamily fam = makeFamily({c0, c1});
  auto [Fst, Gst] = scaledCurvature(cm, fam, ts_reg);
  const BiGradedForm At = fam.At.toRegistry(ts_reg);
  const BiGradedForm Bt = fam.Bt.toRegistry(ts_reg);
  const BiGradedForm theta = (c1.A - c0.A).toRegistry(ts_reg);
  const BiGradedForm phi = (c1.B - c0.B).toRegistry(ts_reg);
  const Poly s = Poly::variable(ts_reg, ts_reg->indexOf("s"));

  BiGradedForm braces(ts_reg, ValueTag::Scalar, 1);
  if (n >= 2) {
    std::vector<const BiGradedForm *> slots{&At, &theta};
    for (size_t i = 2; i < n; i++) slots.push_back(&Fst);
    braces += pairForms(P, slots, Gst) * Rational(static_cast<long>(n - 1));
  }
  {
    std::vector<const BiGradedForm *> slots{&At};
    for (size_t i = 1; i < n; i++) slots.push_back(&Fst);
    braces += pairForms(P, slots, phi);
  }
  {
    std::vector<const BiGradedForm *> slots{&theta};
    for (size_t i = 1; i < n; i++) slots.push_back(&Fst);
    braces -= pairForms(P, slots, Bt);
  }
  BiGradedForm integrand = braces.scaleBy(s) * Rational(-static_cast<long>(n));
  return integrateCoefficientsBox(integrand, x_reg);
}

} // namespace gauge2
