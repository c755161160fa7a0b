#ifndef GAUGE2_RANDOMGEN_HPP
#define GAUGE2_RANDOMGEN_HPP

#include "gauge2/gauge.hpp"

#include <random>

namespace gauge2 {

/// Seeded deterministic generator for reproducible fixtures.
class Rng
{
public:
  explicit Rng(uint64_t seed) : m_eng(seed) {}

  uint64_t next() { return m_eng(); }
  long intIn(long lo, long hi) // inclusive
  {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }
  bool chance(unsigned num, unsigned den) { return next() % den < num; }

  /// Coefficient drawn from {-2..2}/{1,2}.
  Rational smallRational() { return Rational(intIn(-2, 2), intIn(1, 2)); }
  Rational smallNonzeroRational()
  {
    Rational r = smallRational();
    while (r == 0) r = smallRational();
    return r;
  }

private:
  std::mt19937_64 m_eng;
};

/// Random polynomial in the x variables, total degree <= max_degree.
Poly randomPoly(Rng & rng, const RegistryPtr & reg, int max_degree, int num_terms);

/// Random 2-connection with sparse polynomial coefficients of degree <= max_degree.
TwoConnection randomConnection(Rng & rng, const RegistryPtr & reg, const DifferentialCrossedModule & cm,
                               int max_degree);

/// Constant invertible rational matrix built from elementary operations,
/// with its exact inverse; phi random h-valued 1-form.
GaugePair randomConstantGauge(Rng & rng, const RegistryPtr & reg, const DifferentialCrossedModule & cm,
                              int max_degree);

/// Unipotent polynomial matrix (product of I + p(x) E_ij with i < j).
GaugePair randomUnipotentGauge(Rng & rng, const RegistryPtr & reg, const DifferentialCrossedModule & cm,
                               int max_degree);

/// Random scalar form with the given dx- and dt-degree (for Stokes tests).
BiGradedForm randomScalarForm(Rng & rng, const RegistryPtr & reg, size_t dx_degree, size_t dt_degree,
                              int max_degree);

/// Random point with small rational coordinates (for numeric spot checks).
std::vector<Rational> randomPoint(Rng & rng, const RegistryPtr & reg);

} // namespace gauge2

#endif
