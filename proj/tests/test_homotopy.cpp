#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge2/homotopy.hpp"
#include "gauge2/randomgen.hpp"

using namespace gauge2;

namespace {

DifferentialCrossedModule adj() { return buildAdjointModule(buildGl(2)); }

std::vector<TwoConnection> randomConnections(Rng & rng, const RegistryPtr & reg,
                                             const DifferentialCrossedModule & cm, size_t count,
                                             int degree)
{
  std::vector<TwoConnection> out;
  for (size_t i = 0; i < count; i++) out.push_back(randomConnection(rng, reg, cm, degree));
  return out;
}

} // namespace

TEST_CASE("l_t expansion of the invariant polynomial")
{
  for (size_t n : {size_t(1), size_t(2), size_t(3)}) {
    HomotopyExpr Pi = HomotopyExpr::invariantPolynomialOfCurvatures(n);
    HomotopyExpr lt = ltApply(Pi);

    // n<DtAt Ft^{n-1}, Gt> (over positions) + <Ft^n, DtBt>, all signs +1
    HomotopyExpr want;
    for (size_t pos = 0; pos < n; pos++) {
      std::vector<Gen> slots(n, Gen::Ft);
      slots[pos] = Gen::DtAt;
      want = want + HomotopyExpr::pairing(slots, Gen::Gt);
    }
    want = want + HomotopyExpr::pairing(std::vector<Gen>(n, Gen::Ft), Gen::DtBt);
    CHECK(lt.terms() == want.terms());
  }
}

TEST_CASE("l_t kills the A_t slot")
{
  HomotopyExpr e = HomotopyExpr::pairing({Gen::At, Gen::Ft}, Gen::Gt);
  HomotopyExpr lt = ltApply(e);
  for (const auto & [m, c] : lt.terms()) {
    CHECK(m.gslots[0] == Gen::At); // never replaced
  }
  // exactly the Ft -> DtAt and Gt -> DtBt images
  CHECK(lt.terms().size() == 2);
}

TEST_CASE("l_t squared at n = 1")
{
  HomotopyExpr Pi = HomotopyExpr::invariantPolynomialOfCurvatures(1);
  HomotopyExpr lt2 = ltPower(Pi, 2);
  HomotopyExpr want = HomotopyExpr::pairing({Gen::DtAt}, Gen::DtBt, Rational(2));
  CHECK(lt2.terms() == want.terms());
}

TEST_CASE("l_t^p / p! matches the subset-sum closed form for p <= 3")
{
  for (size_t n : {size_t(2), size_t(3)}) {
    HomotopyExpr Pi = HomotopyExpr::invariantPolynomialOfCurvatures(n);
    for (size_t p = 1; p <= 3; p++) {
      HomotopyExpr got = ltPower(Pi, p) * Rational(1, factorial(static_cast<unsigned>(p)));

      HomotopyExpr want;
      // choose which Ft positions get DtAt; optionally spend one choice on the h-slot
      const size_t full = (1u << n);
      for (uint32_t mask = 0; mask < full; mask++) {
        size_t bits = static_cast<size_t>(__builtin_popcount(mask));
        for (int spend_h = 0; spend_h <= 1; spend_h++) {
          if (bits + static_cast<size_t>(spend_h) != p) continue;
          std::vector<Gen> slots(n, Gen::Ft);
          for (size_t j = 0; j < n; j++)
            if (mask & (1u << j)) slots[j] = Gen::DtAt;
          want = want + HomotopyExpr::pairing(slots, spend_h ? Gen::DtBt : Gen::Gt);
        }
      }
      CHECK(got.terms() == want.terms());
    }
  }
}

TEST_CASE("expression evaluation on families")
{
  DifferentialCrossedModule cm = adj();
  InvariantPolynomial P = invpolyFromTrace(cm, 1);
  auto reg = VarRegistry::make(5, 0);
  Rng rng(3);

  // single-member family: <Ft, Gt> is the member's invariant form;
  // l_t Pi and d_t Pi both vanish
  TwoConnection c = randomConnection(rng, reg, cm, 2);
  ConnectionFamily f1 = makeFamily({c});
  FamilyForms ff1 = familyForms(cm, f1);
  HomotopyExpr Pi = HomotopyExpr::invariantPolynomialOfCurvatures(1);
  CHECK(exprEval(Pi, ff1, P) == invariantFormP(P, cm, c, 1));
  CHECK(exprEval(ltApply(Pi), ff1, P).isZero());
  CHECK(exprEval(Pi, ff1, P).dT().isZero());

  // two-member family: DtAt = (A1 - A0) dt1
  TwoConnection c1 = randomConnection(rng, reg, cm, 2);
  ConnectionFamily f2 = makeFamily({c, c1});
  FamilyForms ff2 = familyForms(cm, f2);
  BiGradedForm theta = (c1.A - c.A).toRegistry(f2.familyRegistry);
  BiGradedForm want(f2.familyRegistry, ValueTag::G, cm.g().dim());
  for (const auto & [key, vec] : theta.components())
    for (size_t v = 0; v < vec.size(); v++)
      if (!vec[v].isZero()) want.addTerm(FormKey{0b1, key.dx}, v, vec[v]);
  CHECK(ff2.DtAt == want);

  // evaluated l_t Pi agrees with concrete slot substitution
  BiGradedForm direct = pairForms(P, {&ff2.DtAt}, ff2.Gt) + pairForms(P, {&ff2.Ft}, ff2.DtBt);
  CHECK(exprEval(ltApply(Pi), ff2, P) == direct);
}

TEST_CASE("descent residuals vanish for p in {0,1,2} at n = 1")
{
  DifferentialCrossedModule cm = adj();
  InvariantPolynomial P = invpolyFromTrace(cm, 1);
  auto reg = VarRegistry::make(5, 0);
  Rng rng(13);
  for (size_t p = 0; p <= 2; p++) {
    ConnectionFamily fam = makeFamily(randomConnections(rng, reg, cm, p + 2, 2));
    CHECK(echfCheck(p, fam, P, cm, 1).isZero());
  }
}

TEST_CASE("descent residual vanishes at n = 2 reduced degree")
{
  DifferentialCrossedModule cm = adj();
  InvariantPolynomial P = invpolyFromTrace(cm, 2);
  auto reg = VarRegistry::make(7, 0);
  Rng rng(23);
  ConnectionFamily fam = makeFamily(randomConnections(rng, reg, cm, 3, 1));
  CHECK(echfCheck(1, fam, P, cm, 2).isZero());
}

TEST_CASE("graded operator relations")
{
  DifferentialCrossedModule cm = adj();
  InvariantPolynomial P = invpolyFromTrace(cm, 1);
  auto reg = VarRegistry::make(6, 0);
  Rng rng(33);
  ConnectionFamily fam = makeFamily(randomConnections(rng, reg, cm, 2, 2));
  auto residuals = gradedRelationsCheck(fam, P, cm, 1);
  CHECK(residuals.size() == 5);
  for (const auto & [name, res] : residuals) {
    INFO(name);
    CHECK(res.isZero());
  }
}

TEST_CASE("chern-weil, triangle, and cartan residuals vanish")
{
  DifferentialCrossedModule cm = adj();
  InvariantPolynomial P = invpolyFromTrace(cm, 1);
  auto reg = VarRegistry::make(5, 0);
  Rng rng(43);
  auto cs = randomConnections(rng, reg, cm, 3, 2);

  auto [r1, r2] = chernWeilCheck(P, cm, cs[0], cs[1], 1);
  CHECK(r1.isZero());
  CHECK(r2.isZero());

  CHECK(triangleCheck(P, cm, cs[0], cs[1], cs[2], 1).isZero());
  // corollary with the zero connection in the last slot
  CHECK(triangleCheck(P, cm, cs[0], cs[1], zeroConnection(reg, cm), 1).isZero());
  // degenerate triple
  CHECK(triangleCheck(P, cm, cs[0], cs[0], cs[0], 1).isZero());

  CHECK(cartanHomotopyCheck(P, cm, cs[0], cs[1], 1).isZero());
  CHECK(cartanHomotopyCheck(P, cm, cs[0], cs[0], 1).isZero());
  CHECK(cartanHomotopyCheck(P, cm, zeroConnection(reg, cm), cs[1], 1).isZero());
}
