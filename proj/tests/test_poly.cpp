#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gauge2/poly.hpp"
#include "gauge2/randomgen.hpp"

using namespace gauge2;

namespace {

Poly xvar(const RegistryPtr & r, size_t i) { return Poly::variable(r, r->xIndex(i)); }
Poly tvar(const RegistryPtr & r, size_t j) { return Poly::variable(r, r->tIndex(j)); }

/// Independent oracle: iterated 1-d integration of a monomial over the
/// standard simplex, by substituting the upper limit u = 1 - (consumed vars)
/// one variable at a time via binomial expansion of polynomial antiderivatives.
Rational iteratedSimplexOracle(const RegistryPtr & reg, Poly p, const std::vector<size_t> & t_idx)
{
  // integrate innermost-last variable first: int_0^{1 - sum of earlier} dt_k
  for (size_t v = t_idx.size(); v-- > 0;) {
    // antiderivative in t_v
    Poly anti(reg);
    for (const auto & [e, c] : p.terms()) {
      Poly::Exponents ne = e;
      ne[t_idx[v]] += 1;
      anti += Poly::monomial(reg, ne, c / Rational(ne[t_idx[v]]));
    }
    // upper limit: 1 - t_1 - ... - t_{v-1}; lower limit 0
    Poly upper(reg, 1);
    for (size_t w = 0; w < v; w++) upper = upper - Poly::variable(reg, t_idx[w]);
    p = anti.substitute(t_idx[v], upper);
  }
  Rational out = 0;
  for (const auto & [e, c] : p.terms()) {
    for (int ev : e)
      if (ev != 0) FAIL("oracle result not constant");
    out += c;
  }
  return out;
}

} // namespace

TEST_CASE("registry layout and lookup")
{
  auto reg = VarRegistry::make(3, 2);
  CHECK(reg->numX() == 3);
  CHECK(reg->numT() == 2);
  CHECK(reg->arity() == 5);
  CHECK(reg->indexOf("x2") == 1);
  CHECK(reg->indexOf("t1") == 3);
  CHECK_THROWS(reg->indexOf("nope"));
}

TEST_CASE("addition examples")
{
  auto reg = VarRegistry::make(2, 1);
  Poly x1 = xvar(reg, 0), t1 = tvar(reg, 0);
  CHECK((x1 + (-x1)).isZero());
  CHECK(x1 * t1 + x1 * t1 == x1 * t1 * Rational(2));
  CHECK(x1 * x1 + Poly(reg, Rational(1, 2)) + x1 == x1 * x1 + x1 + Poly(reg, Rational(1, 2)));
}

TEST_CASE("multiplication examples")
{
  auto reg = VarRegistry::make(2, 1);
  Poly x1 = xvar(reg, 0), t1 = tvar(reg, 0);
  CHECK((x1 * Poly(reg)).isZero());
  CHECK((x1 + t1) * (x1 - t1) == x1 * x1 - t1 * t1);
  CHECK(Poly(reg, 1) * (x1 + t1) == x1 + t1);
}

TEST_CASE("differentiation examples")
{
  auto reg = VarRegistry::make(2, 1);
  Poly x1 = xvar(reg, 0), x2 = xvar(reg, 1), t1 = tvar(reg, 0);
  CHECK((x1 * x1).diff("x1") == x1 * Rational(2));
  CHECK((x1 * t1).diff("t1") == x1);
  CHECK((x2 * x2 * x2 + t1 * x2).diff("x2") == x2 * x2 * Rational(3) + t1);
}

TEST_CASE("simplex integration examples")
{
  auto reg1 = VarRegistry::make(1, 1);
  Poly t = tvar(reg1, 0);
  Poly r = t.simplexIntegrate({reg1->tIndex(0)});
  CHECK(r == Poly(reg1, Rational(1, 2)));

  auto reg2 = VarRegistry::make(1, 2);
  CHECK(Poly(reg2, 1).simplexIntegrate({reg2->tIndex(0), reg2->tIndex(1)})
        == Poly(reg2, Rational(1, 2)));
  CHECK((tvar(reg2, 0) * tvar(reg2, 1)).simplexIntegrate({reg2->tIndex(0), reg2->tIndex(1)})
        == Poly(reg2, Rational(1, 24)));
}

TEST_CASE("simplex integration agrees with the iterated-integration oracle")
{
  // all monomials with per-variable exponent <= 2 (total degree <= 6), 1..3 vars
  for (size_t k = 1; k <= 3; k++) {
    auto reg = VarRegistry::make(1, k);
    std::vector<size_t> idx;
    for (size_t j = 0; j < k; j++) idx.push_back(reg->tIndex(j));
    std::vector<int> e(k, 0);
    while (true) {
      Poly::Exponents full(reg->arity(), 0);
      for (size_t j = 0; j < k; j++) full[idx[j]] = e[j];
      Poly mono = Poly::monomial(reg, full, Rational(3, 2));
      Poly got = mono.simplexIntegrate(idx);
      Rational want = iteratedSimplexOracle(reg, mono, idx);
      CHECK(got == Poly(reg, want));
      // odometer over exponents 0..2
      size_t j = 0;
      while (j < k && e[j] == 2) e[j++] = 0;
      if (j == k) break;
      e[j]++;
    }
  }
}

TEST_CASE("box integration")
{
  auto reg = VarRegistry::make(1, 2);
  Poly t1 = tvar(reg, 0), t2 = tvar(reg, 1);
  CHECK((t1 * t1 * t2).boxIntegrate({reg->tIndex(0), reg->tIndex(1)}) == Poly(reg, Rational(1, 6)));
}

TEST_CASE("substitution and evaluation")
{
  auto reg = VarRegistry::make(2, 0);
  Poly x1 = xvar(reg, 0), x2 = xvar(reg, 1);
  Poly p = x1 * x1 + x2;
  CHECK(p.substitute(0, x2 + Poly(reg, 1)) == (x2 + Poly(reg, 1)) * (x2 + Poly(reg, 1)) + x2);
  CHECK(p.evaluate({Rational(1, 2), Rational(3)}) == Rational(13, 4));
}

TEST_CASE("ring axioms on random polynomials")
{
  auto reg = VarRegistry::make(2, 1);
  Rng rng(42);
  for (int i = 0; i < 20; i++) {
    Poly a = randomPoly(rng, reg, 3, 3), b = randomPoly(rng, reg, 3, 3), c = randomPoly(rng, reg, 3, 3);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).isZero());
    // derivative is a derivation and partials commute
    CHECK((a * b).diff(0) == a.diff(0) * b + a * b.diff(0));
    CHECK(a.diff(0).diff(1) == a.diff(1).diff(0));
  }
}

TEST_CASE("mapRegistry relabels and rejects stray variables")
{
  auto reg = VarRegistry::make(2, 1);
  auto xonly = VarRegistry::make(2, 0);
  Poly p = xvar(reg, 0) * xvar(reg, 1);
  Poly q = p.mapRegistry(xonly, {0, 1, -1});
  CHECK(q == Poly::variable(xonly, 0) * Poly::variable(xonly, 1));
  Poly bad = p * tvar(reg, 0);
  CHECK_THROWS(bad.mapRegistry(xonly, {0, 1, -1}));
}
