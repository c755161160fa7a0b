#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge2/connection.hpp"
#include "gauge2/randomgen.hpp"

using namespace gauge2;

namespace {

DifferentialCrossedModule abelianModule()
{
  // 1-dim abelian g = h, alpha = id, trivial action
  LieAlgebra g = buildAbelian(1), h = buildAbelian(1);
  RatMat alpha = {{1}};
  std::vector<std::vector<RatVec>> rho(1, std::vector<RatVec>(1, RatVec(1, Rational(0))));
  return DifferentialCrossedModule(std::move(g), std::move(h), std::move(alpha), std::move(rho));
}

const Poly & coeffAt(const BiGradedForm & w, const FormKey & key, size_t v)
{
  auto it = w.components().find(key);
  REQUIRE(it != w.components().end());
  return it->second.at(v);
}

constexpr size_t E12 = 1;

} // namespace

TEST_CASE("curvature examples")
{
  DifferentialCrossedModule ab = abelianModule();
  auto reg = VarRegistry::make(3, 0);

  // zero connection -> zero curvature
  TwoCurvature k0 = curvature(ab, zeroConnection(reg, ab));
  CHECK(k0.F.isZero());
  CHECK(k0.G.isZero());

  // A = x2 dx1, B = 0 -> F = -dx1^dx2
  BiGradedForm A(reg, ValueTag::G, 1);
  A.addTerm(FormKey{0, 0b01}, 0, Poly::variable(reg, 1));
  TwoConnection c{A, BiGradedForm(reg, ValueTag::H, 1)};
  TwoCurvature k = curvature(ab, c);
  CHECK(coeffAt(k.F, FormKey{0, 0b11}, 0) == Poly(reg, Rational(-1)));
  CHECK(k.G.isZero());

  // gl(2): A = E12 dx1 constant, B = 0 -> F = 0
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  BiGradedForm Ag(reg, ValueTag::G, 4);
  Ag.addTerm(FormKey{0, 0b01}, E12, Poly(reg, 1));
  TwoCurvature kg = curvature(adj, {Ag, BiGradedForm(reg, ValueTag::H, 4)});
  CHECK(kg.F.isZero());
}

TEST_CASE("Bianchi identities and mutation detection")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  auto reg = VarRegistry::make(5, 0);
  Rng rng(21);

  auto [z1, z2] = bianchiResiduals(adj, zeroConnection(reg, adj));
  CHECK(z1.isZero());
  CHECK(z2.isZero());

  for (int i = 0; i < 5; i++) {
    TwoConnection c = randomConnection(rng, reg, adj, 2);
    auto [r1, r2] = bianchiResiduals(adj, c);
    CHECK(r1.isZero());
    CHECK(r2.isZero());
    // numeric spot-check of the strongest case: evaluate an intermediate
    CHECK(r1.absEvaluate(randomPoint(rng, reg)) == Rational(0));

    // perturbed F breaks the first identity
    TwoCurvature k = curvature(adj, c);
    BiGradedForm pert(reg, ValueTag::G, 4);
    pert.addTerm(FormKey{0, 0b011}, E12, Poly::variable(reg, 2));
    BiGradedForm Fbad = k.F + pert;
    BiGradedForm r1bad = Fbad.dX() + wedgeBracket(adj.g(), c.A, Fbad) + alphaPush(adj, k.G);
    CHECK(!r1bad.isZero());
  }
}

TEST_CASE("fake-flat and flat predicates")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  auto reg = VarRegistry::make(4, 0);
  Rng rng(31);

  CHECK(isFlat(adj, zeroConnection(reg, adj)));
  CHECK(isFakeFlat(adj, zeroConnection(reg, adj)));

  // adjoint module: choose B := dA + 1/2[A,A] so alpha(B) cancels (alpha = id)
  TwoConnection c = randomConnection(rng, reg, adj, 2);
  BiGradedForm Bff = (c.A.dX() + halfBracketSquare(adj.g(), c.A)).retag(ValueTag::H);
  TwoConnection ff{c.A, Bff};
  CHECK(isFakeFlat(adj, ff));
  TwoCurvature k = curvature(adj, ff);
  CHECK(k.F.isZero());
  // on an adjoint module (alpha injective) the first Bianchi identity forces
  // G = 0 whenever F = 0, so this fake-flat connection is actually flat
  CHECK(k.G.isZero());
  CHECK(isFlat(adj, ff));

  // fake-flat connection has P = 0 for n >= 1
  InvariantPolynomial P = invpolyFromTrace(adj, 1);
  CHECK(invariantFormP(P, adj, ff, 1).isZero());

  // fake-flat but not flat needs ker(alpha) != 0: g = span{X}, h = span{Y1,Y2},
  // alpha(Y1) = X, alpha(Y2) = 0, trivial bracket and action
  LieAlgebra g1 = buildAbelian(1), h2 = buildAbelian(2);
  RatMat alpha = {{1, 0}};
  std::vector<std::vector<RatVec>> rho(1, std::vector<RatVec>(2, RatVec(2, Rational(0))));
  DifferentialCrossedModule ker(std::move(g1), std::move(h2), std::move(alpha), std::move(rho));
  CHECK(ker.validate().allPass());

  BiGradedForm A1(reg, ValueTag::G, 1);
  A1.addTerm(FormKey{0, 0b01}, 0, Poly::variable(reg, 1)); // x2 dx1, dA = -dx1^dx2
  BiGradedForm B1(reg, ValueTag::H, 2);
  B1.addTerm(FormKey{0, 0b11}, 0, Poly(reg, Rational(-1)));  // Y1 slot absorbs dA
  B1.addTerm(FormKey{0, 0b11}, 1, Poly::variable(reg, 2));   // Y2 slot: x3 dx1^dx2, dB != 0
  TwoConnection nf{A1, B1};
  CHECK(isFakeFlat(ker, nf));
  CHECK(!isFlat(ker, nf));
}

TEST_CASE("closedness of the invariant form")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  InvariantPolynomial P = invpolyFromTrace(adj, 1);
  auto reg = VarRegistry::make(5, 0);
  Rng rng(41);

  CHECK(invariantFormP(P, adj, zeroConnection(reg, adj), 1).isZero());
  for (int i = 0; i < 3; i++) {
    TwoConnection c = randomConnection(rng, reg, adj, 2);
    BiGradedForm p = invariantFormP(P, adj, c, 1);
    CHECK(p.dX().isZero());
  }
}

TEST_CASE("family construction and vertex specialization")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  auto reg = VarRegistry::make(4, 0);
  Rng rng(51);

  TwoConnection c0 = randomConnection(rng, reg, adj, 1);
  TwoConnection c1 = randomConnection(rng, reg, adj, 1);

  // single-member family reproduces the member's curvature
  ConnectionFamily f1 = makeFamily({c0});
  TwoCurvature k1 = familyCurvature(adj, f1);
  TwoCurvature k0 = curvature(adj, c0);
  CHECK(k1.F == k0.F);
  CHECK(k1.G == k0.G);

  // two-member family: vertices specialize to the members
  ConnectionFamily f2 = makeFamily({c0, c1});
  CHECK(specializeT(f2.At, {Rational(0)}, reg) == c0.A);
  CHECK(specializeT(f2.At, {Rational(1)}, reg) == c1.A);
  CHECK(specializeT(f2.Bt, {Rational(0)}, reg) == c0.B);
  CHECK(specializeT(f2.Bt, {Rational(1)}, reg) == c1.B);
  TwoCurvature kt = familyCurvature(adj, f2);
  CHECK(specializeT(kt.F, {Rational(1)}, reg) == curvature(adj, c1).F);
  CHECK(specializeT(kt.G, {Rational(0)}, reg) == curvature(adj, c0).G);

  // d_t F_t = -d_x(d_t A_t) + [d_t A_t, A_t] - alpha(d_t B_t)
  BiGradedForm lhs = kt.F.dT();
  BiGradedForm rhs = -f2.At.dT().dX() + wedgeBracket(adj.g(), f2.At.dT(), f2.At)
                     - alphaPush(adj, f2.Bt.dT());
  CHECK(lhs == rhs);
}

TEST_CASE("transgression basics")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  InvariantPolynomial P = invpolyFromTrace(adj, 1);
  auto reg = VarRegistry::make(5, 0);
  Rng rng(61);

  TwoConnection c0 = randomConnection(rng, reg, adj, 2);
  TwoConnection c1 = randomConnection(rng, reg, adj, 2);

  CHECK(transgressionQ(P, adj, c0, c0, 1).isZero());
  CHECK(transgressionQ(P, adj, zeroConnection(reg, adj), c1, 1) == chsasForm(P, adj, c1, 1));

  BiGradedForm q = transgressionQ(P, adj, c0, c1, 1);
  BiGradedForm dq_res = q.dX() - (invariantFormP(P, adj, c1, 1) - invariantFormP(P, adj, c0, 1));
  CHECK(dq_res.isZero());
}

TEST_CASE("ChSAS form")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  InvariantPolynomial P = invpolyFromTrace(adj, 1);
  auto reg = VarRegistry::make(5, 0);
  Rng rng(71);

  CHECK(chsasForm(P, adj, zeroConnection(reg, adj), 1).isZero());

  TwoConnection c = randomConnection(rng, reg, adj, 2);
  // d C = <F^n, G>
  CHECK((chsasForm(P, adj, c, 1).dX() - invariantFormP(P, adj, c, 1)).isZero());

  // n = 1 closed form: <A, 1/2 dB + 1/3 A^|>B> + <1/2 dA + 1/3 A^A - 1/2 alpha(B), B>
  BiGradedForm h1 = c.B.dX() * Rational(1, 2) + wedgeAction(adj, c.A, c.B) * Rational(1, 3);
  BiGradedForm g2 = c.A.dX() * Rational(1, 2) + halfBracketSquare(adj.g(), c.A) * Rational(1, 3)
                    - alphaPush(adj, c.B) * Rational(1, 2);
  CHECK(chsasForm(P, adj, c, 1) == pairForms(P, {&c.A}, h1) + pairForms(P, {&g2}, c.B));
}

TEST_CASE("scaled curvature agrees with the curvature of the scaled connection")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  auto reg = VarRegistry::make(4, 0);
  Rng rng(81);

  TwoConnection c0 = randomConnection(rng, reg, adj, 1);
  TwoConnection c1 = randomConnection(rng, reg, adj, 1);
  ConnectionFamily fam = makeFamily({c0, c1});

  RegistryPtr ts_reg = std::make_shared<const VarRegistry>(reg->xNames(),
                                                           std::vector<std::string>{"t1", "s"});
  auto [Fst, Gst] = scaledCurvature(adj, fam, ts_reg);

  // s = 1 gives (F_t, G_t); s = 0 gives (0, 0)
  TwoCurvature kt = familyCurvature(adj, fam);
  auto x_reg = reg;
  CHECK(specializeT(Fst, {Rational(1, 3), Rational(1)}, x_reg)
        == specializeT(kt.F.toRegistry(ts_reg), {Rational(1, 3), Rational(1)}, x_reg));
  CHECK(specializeT(Fst, {Rational(1, 3), Rational(0)}, x_reg).isZero());
  CHECK(specializeT(Gst, {Rational(2, 5), Rational(0)}, x_reg).isZero());

  // identity in (t, s): F_st equals the curvature of (s A_t, s B_t)
  Poly s_poly = Poly::variable(ts_reg, ts_reg->tIndex(1));
  BiGradedForm As = fam.At.toRegistry(ts_reg).scaleBy(s_poly);
  BiGradedForm Bs = fam.Bt.toRegistry(ts_reg).scaleBy(s_poly);
  TwoCurvature ks = curvature(adj, {As, Bs});
  CHECK(Fst == ks.F);
  CHECK(Gst == ks.G);
}

TEST_CASE("surface term B vanishes on equal endpoints")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  InvariantPolynomial P = invpolyFromTrace(adj, 1);
  auto reg = VarRegistry::make(5, 0);
  Rng rng(91);
  TwoConnection c = randomConnection(rng, reg, adj, 2);
  CHECK(bForm(P, adj, c, c, 1).isZero());
}

TEST_CASE("triangle boundary term drops its first term at n = 1")
{
  // at n = 1 the (n-1)-weighted term is absent; with equal connections the
  // whole boundary term vanishes
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  InvariantPolynomial P = invpolyFromTrace(adj, 1);
  auto reg = VarRegistry::make(5, 0);
  Rng rng(101);
  TwoConnection c = randomConnection(rng, reg, adj, 2);
  CHECK(qBoundary(P, adj, c, c, c, 1).isZero());
}
