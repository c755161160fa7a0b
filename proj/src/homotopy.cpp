#include "gauge2/homotopy.hpp"

#include <sstream>

namespace gauge2 {

int genTotalDegree(Gen g)
{
  switch (g) {
  case Gen::At: return 1;
  case Gen::Bt: return 2;
  case Gen::Ft: return 2;
  case Gen::Gt: return 3;
  case Gen::DtAt: return 2; // (1,1)
  case Gen::DtBt: return 3; // (2,1)
  }
  return 0;
}

bool genIsG(Gen g)
{
  return g == Gen::At || g == Gen::Ft || g == Gen::DtAt;
}

const char * genName(Gen g)
{
  switch (g) {
  case Gen::At: return "At";
  case Gen::Bt: return "Bt";
  case Gen::Ft: return "Ft";
  case Gen::Gt: return "Gt";
  case Gen::DtAt: return "dtAt";
  case Gen::DtBt: return "dtBt";
  }
  return "?";
}

HomotopyExpr HomotopyExpr::pairing(std::vector<Gen> gslots, Gen hslot, const Rational & coeff)
{
  for (Gen g : gslots)
    if (!genIsG(g)) throw std::invalid_argument("HomotopyExpr: h-valued generator in a g-slot");
  if (genIsG(hslot)) throw std::invalid_argument("HomotopyExpr: g-valued generator in the h-slot");
  HomotopyExpr e;
  e.add({std::move(gslots), hslot}, coeff);
  return e;
}

HomotopyExpr HomotopyExpr::invariantPolynomialOfCurvatures(size_t n)
{
  return pairing(std::vector<Gen>(n, Gen::Ft), Gen::Gt);
}

void HomotopyExpr::add(const Monomial & m, const Rational & c)
{
  if (c == 0) return;
  auto it = m_terms.find(m);
  if (it == m_terms.end()) {
    m_terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) m_terms.erase(it);
  }
}

HomotopyExpr HomotopyExpr::operator+(const HomotopyExpr & o) const
{
  HomotopyExpr r = *this;
  for (const auto & [m, c] : o.m_terms) r.add(m, c);
  return r;
}

HomotopyExpr HomotopyExpr::operator*(const Rational & c) const
{
  HomotopyExpr r;
  if (c == 0) return r;
  for (const auto & [m, c0] : m_terms) r.m_terms.emplace(m, c0 * c);
  return r;
}

std::string HomotopyExpr::str() const
{
  if (m_terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto & [m, c] : m_terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")<";
    for (size_t i = 0; i < m.gslots.size(); i++) {
      if (i) os << ".";
      os << genName(m.gslots[i]);
    }
    os << ", " << genName(m.hslot) << ">";
  }
  return os.str();
}

HomotopyExpr ltApply(const HomotopyExpr & e)
{
  auto image = [](Gen g) -> std::pair<bool, Gen> {
    if (g == Gen::Ft) return {true, Gen::DtAt};
    if (g == Gen::Gt) return {true, Gen::DtBt};
    return {false, g};
  };
  HomotopyExpr r;
  for (const auto & [m, c] : e.terms()) {
    int skipped = 0;
    for (size_t s = 0; s < m.gslots.size(); s++) {
      auto [hit, img] = image(m.gslots[s]);
      if (hit) {
        HomotopyExpr::Monomial nm = m;
        nm.gslots[s] = img;
        r.add(nm, (skipped % 2 == 0) ? c : -c);
      }
      skipped += genTotalDegree(m.gslots[s]);
    }
    auto [hit, img] = image(m.hslot);
    if (hit) {
      HomotopyExpr::Monomial nm = m;
      nm.hslot = img;
      r.add(nm, (skipped % 2 == 0) ? c : -c);
    }
  }
  return r;
}

HomotopyExpr ltPower(const HomotopyExpr & e, size_t p)
{
  HomotopyExpr r = e;
  for (size_t i = 0; i < p; i++) r = ltApply(r);
  return r;
}

FamilyForms familyForms(const DifferentialCrossedModule & cm, const ConnectionFamily & fam)
{
  TwoCurvature k = familyCurvature(cm, fam);
  return {fam.At, fam.Bt, std::move(k.F), std::move(k.G), fam.At.dT(), fam.Bt.dT()};
}

BiGradedForm exprEval(const HomotopyExpr & e, const FamilyForms & forms, const InvariantPolynomial & P)
{
  const RegistryPtr & reg = forms.At.registry();
  auto concrete = [&forms](Gen g) -> const BiGradedForm & {
    switch (g) {
    case Gen::At: return forms.At;
    case Gen::Bt: return forms.Bt;
    case Gen::Ft: return forms.Ft;
    case Gen::Gt: return forms.Gt;
    case Gen::DtAt: return forms.DtAt;
    case Gen::DtBt: return forms.DtBt;
    }
    throw std::logic_error("exprEval: bad generator");
  };
  BiGradedForm out(reg, ValueTag::Scalar, 1);
  for (const auto & [m, c] : e.terms()) {
    std::vector<const BiGradedForm *> slots;
    slots.reserve(m.gslots.size());
    for (Gen g : m.gslots) slots.push_back(&concrete(g));
    out += pairForms(P, slots, concrete(m.hslot)) * c;
  }
  return out;
}

BiGradedForm exprEval(const HomotopyExpr & e, const ConnectionFamily & fam, const InvariantPolynomial & P,
                      const DifferentialCrossedModule & cm)
{
  return exprEval(e, familyForms(cm, fam), P);
}

BiGradedForm echfCheck(size_t p, const ConnectionFamily & fam, const InvariantPolynomial & P,
                       const DifferentialCrossedModule & cm, size_t n)
{
  if (fam.members.size() != p + 2) throw std::invalid_argument("echfCheck: family must have p+2 members");
  const RegistryPtr x_reg = fam.members[0].A.registry();
  const FamilyForms forms = familyForms(cm, fam);
  const HomotopyExpr Pi = HomotopyExpr::invariantPolynomialOfCurvatures(n);

  const HomotopyExpr lhs_expr = ltPower(Pi, p) * Rational(1, factorial(static_cast<unsigned>(p)));
  const BiGradedForm lhs_form = exprEval(lhs_expr, forms, P);
  BiGradedForm lhs(x_reg, ValueTag::Scalar, 1);
  for (size_t i = 0; i <= p + 1; i++) {
    BiGradedForm face = faceRestrict(lhs_form, i);
    BiGradedForm integ = simplexIntegrateForm(face).toRegistry(x_reg);
    lhs += (i % 2 == 0) ? integ : -integ;
  }

  const HomotopyExpr rhs_expr = ltPower(Pi, p + 1) * Rational(1, factorial(static_cast<unsigned>(p + 1)));
  BiGradedForm rhs = simplexIntegrateForm(exprEval(rhs_expr, forms, P)).toRegistry(x_reg).dX();
  if (p % 2 != 0) rhs = -rhs;

  return lhs - rhs;
}

std::vector<std::pair<std::string, BiGradedForm>> gradedRelationsCheck(const ConnectionFamily & fam,
                                                                       const InvariantPolynomial & P,
                                                                       const DifferentialCrossedModule & cm,
                                                                       size_t n)
{
  const FamilyForms forms = familyForms(cm, fam);
  const HomotopyExpr Pi = HomotopyExpr::invariantPolynomialOfCurvatures(n);
  const BiGradedForm pi = exprEval(Pi, forms, P);
  const BiGradedForm lt_pi = exprEval(ltApply(Pi), forms, P);
  const BiGradedForm lt2_pi = exprEval(ltPower(Pi, 2), forms, P);

  std::vector<std::pair<std::string, BiGradedForm>> out;
  out.emplace_back("d2", pi.dX().dX() + forms.Gt.slice(0).dX().dX()); // d^2 = 0
  out.emplace_back("dt2", forms.At.slice(0).dT().dT() + lt_pi.dT().dT());
  out.emplace_back("d-dt-anticommute", lt_pi.dX().dT() + lt_pi.dT().dX());
  // d Pi = 0 turns (l_t d - d l_t) Pi = d_t Pi into d l_t Pi + d_t Pi = 0
  out.emplace_back("homotopy-relation", lt_pi.dX() + pi.dT());
  // level-1 differential identity with l_t d_t = d_t l_t folded in
  out.emplace_back("lt-dt-commute", lt_pi.dT() + lt2_pi.dX() * Rational(1, 2));
  return out;
}

std::pair<BiGradedForm, BiGradedForm> chernWeilCheck(const InvariantPolynomial & P,
                                                     const DifferentialCrossedModule & cm,
                                                     const TwoConnection & c0, const TwoConnection & c1,
                                                     size_t n)
{
  const RegistryPtr x_reg = c0.A.registry();
  ConnectionFamily fam = makeFamily({c0, c1});
  const HomotopyExpr Pi = HomotopyExpr::invariantPolynomialOfCurvatures(n);
  const BiGradedForm lt_pi = exprEval(ltApply(Pi), fam, P, cm);
  const BiGradedForm q_from_lt = simplexIntegrateForm(lt_pi).toRegistry(x_reg);
  const BiGradedForm q = transgressionQ(P, cm, c0, c1, n);
  BiGradedForm r1 = q_from_lt - q;
  BiGradedForm r2 = q.dX() - (invariantFormP(P, cm, c1, n) - invariantFormP(P, cm, c0, n));
  return {std::move(r1), std::move(r2)};
}

BiGradedForm triangleCheck(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                           const TwoConnection & c0, const TwoConnection & c1, const TwoConnection & c2,
                           size_t n)
{
  return transgressionQ(P, cm, c0, c2, n) - transgressionQ(P, cm, c1, c2, n)
         - transgressionQ(P, cm, c0, c1, n) + qBoundary(P, cm, c0, c1, c2, n).dX();
}

BiGradedForm cartanHomotopyCheck(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                                 const TwoConnection & c0, const TwoConnection & c1, size_t n)
{
  return transgressionQ(P, cm, c0, c1, n) - chsasForm(P, cm, c1, n) + chsasForm(P, cm, c0, n)
         + bForm(P, cm, c0, c1, n).dX();
}

} // namespace gauge2
