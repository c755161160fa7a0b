#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge2/lie.hpp"

#include <fstream>

using namespace gauge2;

namespace {

RatVec basisVec(size_t dim, size_t i)
{
  RatVec v(dim, Rational(0));
  v[i] = 1;
  return v;
}

// gl(2) basis order used by buildGl: E11, E12, E21, E22
constexpr size_t E11 = 0, E12 = 1, E21 = 2, E22 = 3;

} // namespace

TEST_CASE("bracket examples")
{
  LieAlgebra so3 = buildSo3();
  CHECK(matIsZero({so3.bracket(basisVec(3, 0), basisVec(3, 0))}));
  CHECK(so3.bracket(basisVec(3, 0), basisVec(3, 1)) == basisVec(3, 2)); // [e1,e2] = e3
  CHECK(so3.validate().allPass());
}

TEST_CASE("gl(2) structure and representation")
{
  LieAlgebra gl2 = buildGl(2);
  CHECK(gl2.dim() == 4);
  CHECK(gl2.validate().allPass());
  // [E12, E21] = E11 - E22
  RatVec br = gl2.bracket(basisVec(4, E12), basisVec(4, E21));
  RatVec want(4, Rational(0));
  want[E11] = 1;
  want[E22] = -1;
  CHECK(br == want);
  CHECK(gl2.productCloses());
}

TEST_CASE("so(3,1) and the Poincare 2-algebra")
{
  LieAlgebra so31 = buildSo31();
  CHECK(so31.dim() == 6);
  CHECK(so31.validate().allPass());

  DifferentialCrossedModule p2 = buildPoincare2();
  CHECK(p2.g().dim() == 6);
  CHECK(p2.h().dim() == 4);
  CHECK(p2.validate().allPass());

  // basis order M01,M02,M03,M12,M13,M23; [M01, M12] = eta_11 M02 = M02
  const size_t M01 = 0, M02 = 1, M12 = 3;
  CHECK(p2.g().bracket(basisVec(6, M01), basisVec(6, M12)) == basisVec(6, M02));

  // M12 |> P2 = P1 (eta_22 = +1)
  CHECK(p2.act(basisVec(6, M12), basisVec(4, 2)) == basisVec(4, 1));
  // M_ab |> P_c with a = b is not a basis element; alpha is trivial
  for (size_t i = 0; i < 4; i++) {
    CHECK(p2.alphaApply(basisVec(4, i)) == RatVec(6, Rational(0)));
  }
}

TEST_CASE("zero action and adjoint module")
{
  DifferentialCrossedModule p2 = buildPoincare2();
  CHECK(p2.act(RatVec(6, Rational(0)), basisVec(4, 1)) == RatVec(4, Rational(0)));

  LieAlgebra gl2 = buildGl(2);
  DifferentialCrossedModule adj = buildAdjointModule(gl2);
  CHECK(adj.validate().allPass());
  CHECK(adj.supportsConjugation());
  // X |> Y = [X, Y] and alpha = id
  RatVec x = basisVec(4, E12), y = basisVec(4, E21);
  CHECK(adj.act(x, y) == gl2.bracket(x, y));
  CHECK(adj.alphaApply(y) == y);
}

TEST_CASE("one-dimensional abelian adjoint module is trivial but valid")
{
  LieAlgebra ab = buildAbelian(1);
  CHECK(ab.validate().allPass());
  // alpha = id, trivial action: every axiom degenerates to 0 = 0
  std::vector<std::vector<RatVec>> rho(1, std::vector<RatVec>(1, RatVec(1, Rational(0))));
  DifferentialCrossedModule m(buildAbelian(1), buildAbelian(1), RatMat{{1}}, rho);
  CHECK(m.validate().allPass());
}

TEST_CASE("mutation of a structure constant is detected with a witness")
{
  LieAlgebra gl2 = buildGl(2);
  std::vector<std::vector<RatVec>> f(4, std::vector<RatVec>(4, RatVec(4, Rational(0))));
  for (size_t a = 0; a < 4; a++)
    for (size_t b = 0; b < 4; b++)
      for (size_t c = 0; c < 4; c++) f[a][b][c] = gl2.f(a, b, c);
  f[E12][E21][E11] += 1; // perturb one structure constant
  LieAlgebra bad({"a", "b", "c", "d"}, f);
  ValidationReport rep = bad.validate();
  CHECK(!rep.allPass());
  bool jacobi_failed = false;
  for (const auto & ax : rep.axioms)
    if (!ax.pass) {
      jacobi_failed = jacobi_failed || ax.name.find("jacobi") != std::string::npos
                      || ax.name.find("antisymmetry") != std::string::npos;
      CHECK(!ax.witness.empty());
    }
  CHECK(jacobi_failed);
}

TEST_CASE("symtrace pairing values on gl(2)")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  InvariantPolynomial P = invpolyFromTrace(adj, 1);
  CHECK(P.at({E12}, E21) == Rational(1)); // tr(E12 E21) = 1
  CHECK(P.at({E11}, E22) == Rational(0)); // tr(E11 E22) = 0
  CHECK(P.validate(adj).allPass());

  InvariantPolynomial P2 = invpolyFromTrace(adj, 2);
  CHECK(P2.validate(adj).allPass());
}

TEST_CASE("Poincare pairing is the zero tensor")
{
  DifferentialCrossedModule p2 = buildPoincare2();
  InvariantPolynomial P = invpolyFromTrace(p2, 1);
  CHECK(P.isZero());
  CHECK(P.validate(p2).allPass());
}

TEST_CASE("perturbed pairing tensor fails sy2 with witness")
{
  DifferentialCrossedModule adj = buildAdjointModule(buildGl(2));
  InvariantPolynomial P = invpolyFromTrace(adj, 1);
  P.at({E11}, E12) += 1;
  ValidationReport rep = P.validate(adj);
  CHECK(!rep.allPass());
  bool sy2_failed = false;
  for (const auto & ax : rep.axioms)
    if (!ax.pass && ax.name.find("sy2") != std::string::npos) {
      sy2_failed = true;
      CHECK(!ax.witness.empty());
    }
  CHECK(sy2_failed);
}

TEST_CASE("crossed-module file round trip")
{
  // write the 1-dim abelian adjoint-style module to the plain-text format
  const char * path = "test_algebra.cmod";
  {
    std::ofstream out(path);
    out << "# one-dimensional abelian module\n"
        << "gdim 1\ngbasis u\n"
        << "hdim 1\nhbasis v\n"
        << "grepdim 1\ngrep 1 1\n"
        << "hrepdim 1\nhrep 1 1\n"
        << "alpha 1 1 1\n"
        << "conjugation 0\n";
  }
  DifferentialCrossedModule m = parseCrossedModuleFile(path);
  CHECK(m.g().dim() == 1);
  CHECK(m.h().dim() == 1);
  CHECK(m.alphaMatrix()[0][0] == Rational(1));
  CHECK(m.validate().allPass());
  std::remove(path);
}
