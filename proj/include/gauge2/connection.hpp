#ifndef GAUGE2_CONNECTION_HPP
#define GAUGE2_CONNECTION_HPP

#include "gauge2/form.hpp"

namespace gauge2 {

/// A 2-connection: g-valued 1-form A and h-valued 2-form B, both pure dx.
struct TwoConnection
{
  BiGradedForm A;
  BiGradedForm B;
};

struct TwoCurvature
{
  BiGradedForm F; // g-valued 2-form
  BiGradedForm G; // h-valued 3-form
};

TwoConnection zeroConnection(const RegistryPtr & reg, const DifferentialCrossedModule & cm);

/// 1/2 A wedge^[,] A (equals the matrix wedge A ^ A for 1-forms).
BiGradedForm halfBracketSquare(const LieAlgebra & L, const BiGradedForm & a);

/// F = dA + 1/2 A ^[,] A - alpha(B); G = dB + A ^|> B.
TwoCurvature curvature(const DifferentialCrossedModule & cm, const TwoConnection & c);

/// (dF + A^[,]F + alpha(G), dG + A^|>G - F^|>B); identically zero for
/// curvatures of a connection.
std::pair<BiGradedForm, BiGradedForm> bianchiResiduals(const DifferentialCrossedModule & cm,
                                                       const TwoConnection & c);

bool isFakeFlat(const DifferentialCrossedModule & cm, const TwoConnection & c);
bool isFlat(const DifferentialCrossedModule & cm, const TwoConnection & c);

/// P_{2n+3} = <F^n, G>.
BiGradedForm invariantFormP(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                            const TwoConnection & c, size_t n);

/// Simplex-parametrized convex family A_t = A_0 + sum_j t^j (A_j - A_0).
struct ConnectionFamily
{
  std::vector<TwoConnection> members; // over the x-only registry
  RegistryPtr familyRegistry;         // x variables plus t_1..t_k, k = members-1
  BiGradedForm At;                    // g-valued (1,0) with t-dependent coefficients
  BiGradedForm Bt;                    // h-valued (2,0)
};

ConnectionFamily makeFamily(std::vector<TwoConnection> members);

TwoCurvature familyCurvature(const DifferentialCrossedModule & cm, const ConnectionFamily & fam);

/// Specializes the t variables of a pure-dx form to a rational point.
BiGradedForm specializeT(const BiGradedForm & w, const std::vector<Rational> & t_values,
                         const RegistryPtr & x_reg);

/// 2-AST transgression Q^{2n+2}(c0; c1), exactly integrated over t in [0,1].
BiGradedForm transgressionQ(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                            const TwoConnection & c0, const TwoConnection & c1, size_t n);

/// 2-ChSAS form C^{2n+2}(c) = Q^{2n+2}(0; c) via the scaled curvatures
/// F_t = t dA + t^2 A^A - t alpha(B), G_t = t dB + t^2 A^|>B.
BiGradedForm chsasForm(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                       const TwoConnection & c, size_t n);

/// Boundary term Q^{2n+1}(c0; c1; c2) of the higher triangle equation,
/// integrated exactly over the standard 2-simplex.
BiGradedForm qBoundary(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                       const TwoConnection & c0, const TwoConnection & c1, const TwoConnection & c2,
                       size_t n);

/// Scaled curvatures F_st = s F_t + (s^2-s) A_t^A_t, G_st likewise, over a
/// registry with parameters (t1, s).
std::pair<BiGradedForm, BiGradedForm> scaledCurvature(const DifferentialCrossedModule & cm,
                                                      const ConnectionFamily & fam2,
                                                      const RegistryPtr & ts_reg);

/// Surface term B_{2n+1}(c0; c1), integrated exactly over the (t,s) unit box.
BiGradedForm bForm(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                   const TwoConnection & c0, const TwoConnection & c1, size_t n);

} // namespace gauge2

#endif
