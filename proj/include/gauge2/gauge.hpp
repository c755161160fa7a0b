#ifndef GAUGE2_GAUGE_HPP
#define GAUGE2_GAUGE_HPP

#include "gauge2/connection.hpp"

namespace gauge2 {

using PolyMat = std::vector<std::vector<Poly>>;

/// Group element with exact polynomial inverse, plus the h-valued 1-form phi
/// of a 2-gauge transformation. Restricted to adjoint-type modules where the
/// group acts by matrix conjugation in the representation.
struct GaugePair
{
  PolyMat g;
  PolyMat g_inv;
  BiGradedForm phi;
};

GaugePair identityGauge(const RegistryPtr & reg, const DifferentialCrossedModule & cm);

/// Checks g * g_inv == I exactly.
bool gaugePairValid(const GaugePair & gp);

/// Matrix of scalar forms representing a Lie-algebra-valued form.
std::vector<std::vector<BiGradedForm>> repMatrixForm(const LieAlgebra & L, const BiGradedForm & w);

/// Inverse of repMatrixForm; throws when an entry leaves the basis span.
BiGradedForm fromMatrixForm(const LieAlgebra & L, const std::vector<std::vector<BiGradedForm>> & m,
                            ValueTag tag);

/// A' = g^-1 A g + g^-1 dg + alpha(phi);
/// B' = g^-1 |> B + d phi + A' ^|> phi - phi ^ phi.
TwoConnection gaugeTransform(const DifferentialCrossedModule & cm, const TwoConnection & c,
                             const GaugePair & gp);

/// Residuals F(c') - g^-1 F g and G(c') - (g^-1 |> G + F(c') ^|> phi).
std::pair<BiGradedForm, BiGradedForm> verifyGaugeCovariance(const DifferentialCrossedModule & cm,
                                                            const TwoConnection & c, const GaugePair & gp);

/// <F'^n, G'> - <F^n, G>, expected exactly zero.
BiGradedForm invarianceCheckP(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                              const TwoConnection & c, const GaugePair & gp, size_t n);

} // namespace gauge2

#endif
