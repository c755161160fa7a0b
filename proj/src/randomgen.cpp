#include "gauge2/randomgen.hpp"

#include <algorithm>
#include <bit>

namespace gauge2 {

Poly randomPoly(Rng & rng, const RegistryPtr & reg, int max_degree, int num_terms)
{
  const size_t m = reg->numX();
  Poly p(reg);
  for (int t = 0; t < num_terms; t++) {
    Poly::Exponents exp(reg->arity(), 0);
    int budget = max_degree > 0 ? static_cast<int>(rng.intIn(0, max_degree)) : 0;
    for (int d = 0; d < budget; d++) exp[reg->xIndex(static_cast<size_t>(rng.intIn(0, static_cast<long>(m) - 1)))]++;
    p += Poly::monomial(reg, exp, rng.smallRational());
  }
  return p;
}

TwoConnection randomConnection(Rng & rng, const RegistryPtr & reg, const DifferentialCrossedModule & cm,
                               int max_degree)
{
  const size_t m = reg->numX();
  BiGradedForm A(reg, ValueTag::G, cm.g().dim());
  for (size_t a = 0; a < cm.g().dim(); a++)
    for (size_t i = 0; i < m; i++)
      if (rng.chance(1, 2)) A.addTerm(FormKey{0, 1u << i}, a, randomPoly(rng, reg, max_degree, 1));
  BiGradedForm B(reg, ValueTag::H, cm.h().dim());
  for (size_t b = 0; b < cm.h().dim(); b++)
    for (size_t i = 0; i < m; i++)
      for (size_t j = i + 1; j < m; j++)
        if (rng.chance(1, 3)) B.addTerm(FormKey{0, (1u << i) | (1u << j)}, b, randomPoly(rng, reg, max_degree, 1));
  return {std::move(A), std::move(B)};
}

namespace {

BiGradedForm randomPhi(Rng & rng, const RegistryPtr & reg, const DifferentialCrossedModule & cm,
                       int max_degree)
{
  BiGradedForm phi(reg, ValueTag::H, cm.h().dim());
  for (size_t b = 0; b < cm.h().dim(); b++)
    for (size_t i = 0; i < reg->numX(); i++)
      if (rng.chance(1, 2)) phi.addTerm(FormKey{0, 1u << i}, b, randomPoly(rng, reg, max_degree, 1));
  return phi;
}

PolyMat polyIdentity(const RegistryPtr & reg, size_t n)
{
  PolyMat id(n, std::vector<Poly>(n, Poly(reg)));
  for (size_t i = 0; i < n; i++) id[i][i] = Poly(reg, 1);
  return id;
}

// row-operation product: g <- g * E, g_inv <- E^-1 * g_inv, where
// E = I + p * e_{ij} (i != j), so both stay exactly inverse to each other.
void applyElementary(PolyMat & g, PolyMat & g_inv, size_t i, size_t j, const Poly & p)
{
  const size_t n = g.size();
  for (size_t r = 0; r < n; r++) g[r][j] += g[r][i] * p;
  for (size_t c = 0; c < n; c++) g_inv[i][c] += -(p * g_inv[j][c]);
}

} // namespace

GaugePair randomConstantGauge(Rng & rng, const RegistryPtr & reg, const DifferentialCrossedModule & cm,
                              int max_degree)
{
  const size_t n = cm.g().repDim();
  PolyMat g = polyIdentity(reg, n);
  PolyMat g_inv = polyIdentity(reg, n);
  const int ops = 3;
  for (int k = 0; k < ops; k++) {
    size_t i = static_cast<size_t>(rng.intIn(0, static_cast<long>(n) - 1));
    size_t j = static_cast<size_t>(rng.intIn(0, static_cast<long>(n) - 2));
    if (j >= i) j++;
    applyElementary(g, g_inv, i, j, Poly(reg, rng.smallNonzeroRational()));
  }
  return {std::move(g), std::move(g_inv), randomPhi(rng, reg, cm, max_degree)};
}

GaugePair randomUnipotentGauge(Rng & rng, const RegistryPtr & reg, const DifferentialCrossedModule & cm,
                               int max_degree)
{
  const size_t n = cm.g().repDim();
  PolyMat g = polyIdentity(reg, n);
  PolyMat g_inv = polyIdentity(reg, n);
  const int ops = 2;
  for (int k = 0; k < ops; k++) {
    // strictly upper entries keep the product unipotent
    size_t i = static_cast<size_t>(rng.intIn(0, static_cast<long>(n) - 2));
    size_t j = static_cast<size_t>(rng.intIn(static_cast<long>(i) + 1, static_cast<long>(n) - 1));
    Poly p = randomPoly(rng, reg, std::max(1, max_degree), 1);
    applyElementary(g, g_inv, i, j, p);
  }
  return {std::move(g), std::move(g_inv), randomPhi(rng, reg, cm, max_degree)};
}

BiGradedForm randomScalarForm(Rng & rng, const RegistryPtr & reg, size_t dx_degree, size_t dt_degree,
                              int max_degree)
{
  BiGradedForm w(reg, ValueTag::Scalar, 1);
  const size_t m = reg->numX(), k = reg->numT();
  const uint32_t dx_all = m >= 32 ? ~0u : (1u << m) - 1;
  const uint32_t dt_all = k >= 32 ? ~0u : (1u << k) - 1;
  for (uint32_t dx = 0; dx <= dx_all; dx++) {
    if (static_cast<size_t>(std::popcount(dx)) != dx_degree) continue;
    for (uint32_t dt = 0; dt <= dt_all; dt++) {
      if (static_cast<size_t>(std::popcount(dt)) != dt_degree) continue;
      if (!rng.chance(2, 3)) continue;
      // mix t variables into the coefficient as well
      Poly p = randomPoly(rng, reg, max_degree, 1);
      Poly::Exponents exp(reg->arity(), 0);
      if (k > 0 && rng.chance(1, 2)) exp[reg->tIndex(static_cast<size_t>(rng.intIn(0, static_cast<long>(k) - 1)))]++;
      w.addTerm(FormKey{dt, dx}, 0, p * Poly::monomial(reg, exp, 1));
    }
  }
  return w;
}

std::vector<Rational> randomPoint(Rng & rng, const RegistryPtr & reg)
{
  std::vector<Rational> pt(reg->arity());
  for (auto & c : pt) c = Rational(rng.intIn(-3, 3), rng.intIn(1, 4));
  return pt;
}

} // namespace gauge2
