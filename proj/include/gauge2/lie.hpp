#ifndef GAUGE2_LIE_HPP
#define GAUGE2_LIE_HPP

#include "gauge2/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gauge2 {

/// One validated axiom: name, outcome, and a witness tuple for failures.
struct AxiomResult
{
  std::string name;
  bool pass = true;
  std::string witness; // first failing basis tuple, empty on pass
};

struct ValidationReport
{
  std::vector<AxiomResult> axioms;
  bool allPass() const
  {
    for (const auto & a : axioms)
      if (!a.pass) return false;
    return true;
  }
  std::string summary() const;
};

/// Finite-dimensional Lie algebra given by structure constants
/// [X_a, X_b] = sum_c f[a][b][c] X_c, with an optional faithful matrix
/// representation used for trace pairings and matrix wedges.
class LieAlgebra
{
public:
  LieAlgebra(std::vector<std::string> basis_names,
             std::vector<std::vector<RatVec>> structure_constants,
             std::vector<RatMat> representation = {});

  size_t dim() const { return m_names.size(); }
  const std::vector<std::string> & basisNames() const { return m_names; }
  const Rational & f(size_t a, size_t b, size_t c) const { return m_f[a][b][c]; }
  bool hasRepresentation() const { return !m_rep.empty(); }
  const std::vector<RatMat> & representation() const { return m_rep; }
  size_t repDim() const { return m_rep.empty() ? 0 : m_rep[0].size(); }

  /// Bilinear extension of the structure constants to coordinate vectors.
  RatVec bracket(const RatVec & u, const RatVec & v) const;

  /// Representation matrix of a coordinate vector.
  RatMat repOf(const RatVec & u) const;

  /// Coordinates of a matrix in the span of the representation basis;
  /// nullopt when the matrix lies outside the span.
  std::optional<RatVec> coordinatesOf(const RatMat & m) const;

  /// Product-closure tensor: R(X_a) R(X_b) = sum_c prod[a][b][c] R(X_c).
  /// Computed lazily; throws if the representation products do not close.
  const std::vector<std::vector<RatVec>> & productTensor() const;
  bool productCloses() const;

  ValidationReport validate() const;

private:
  std::vector<std::string> m_names;
  std::vector<std::vector<RatVec>> m_f;
  std::vector<RatMat> m_rep;
  mutable std::vector<std::vector<RatVec>> m_prod; // lazy
  mutable int m_prod_state = 0;                    // 0 unknown, 1 closes, -1 fails
};

/// Differential crossed module (h, g; alpha, |>) with exact tensors.
class DifferentialCrossedModule
{
public:
  DifferentialCrossedModule(LieAlgebra g, LieAlgebra h, RatMat alpha,
                            std::vector<std::vector<RatVec>> action,
                            bool conjugation_action = false);

  const LieAlgebra & g() const { return m_g; }
  const LieAlgebra & h() const { return m_h; }
  const RatMat & alphaMatrix() const { return m_alpha; }
  const Rational & rho(size_t a, size_t i, size_t j) const { return m_rho[a][i][j]; }

  /// X |> Y by bilinear extension of the action tensor.
  RatVec act(const RatVec & x, const RatVec & y) const;

  /// alpha applied to an h-coordinate vector.
  RatVec alphaApply(const RatVec & y) const;

  /// True when the g-action on h is matrix conjugation in the two
  /// representations (holds for adjoint modules); required for 2-gauge
  /// transformations with group elements acting by conjugation.
  bool supportsConjugation() const { return m_conjugation; }

  ValidationReport validate() const;

private:
  LieAlgebra m_g;
  LieAlgebra m_h;
  RatMat m_alpha; // dim(g) x dim(h)
  std::vector<std::vector<RatVec>> m_rho; // [a][i][j]
  bool m_conjugation;
};

/// Generalized invariant polynomial <X_{a_1}...X_{a_n}, Y_i> as a dense
/// rational tensor, symmetric in the g-slots.
class InvariantPolynomial
{
public:
  InvariantPolynomial(size_t arity, size_t dim_g, size_t dim_h, std::vector<Rational> tensor);

  size_t arity() const { return m_n; }
  size_t dimG() const { return m_dim_g; }
  size_t dimH() const { return m_dim_h; }

  const Rational & at(const std::vector<size_t> & g_indices, size_t h_index) const;
  Rational & at(const std::vector<size_t> & g_indices, size_t h_index);

  /// Scalar contraction on coordinate vectors.
  Rational contract(const std::vector<RatVec> & g_args, const RatVec & h_arg) const;

  bool isZero() const;

  ValidationReport validate(const DifferentialCrossedModule & cm) const;

private:
  size_t flatIndex(const std::vector<size_t> & g_indices, size_t h_index) const;

  size_t m_n, m_dim_g, m_dim_h;
  std::vector<Rational> m_tensor;
};

// --- builders ---------------------------------------------------------------

LieAlgebra buildGl(size_t n);
LieAlgebra buildSo3();
LieAlgebra buildSo31();
LieAlgebra buildAbelian(size_t dim);

/// Poincare 2-algebra: g = so(3,1), h = R^4 abelian, alpha = 0,
/// M_ab |> P_c = eta_bc P_a - eta_ac P_b with eta = diag(-1,+1,+1,+1).
DifferentialCrossedModule buildPoincare2();

/// Adjoint module: g = h = L, alpha = id, |> = ad. Requires a representation.
DifferentialCrossedModule buildAdjointModule(const LieAlgebra & L);

/// Symmetrized-trace pairing composed with alpha in the last slot:
/// T[a_1..a_n][i] = SymTrace(R(X_{a_1})...R(X_{a_n}) R(alpha(Y_i))).
InvariantPolynomial invpolyFromTrace(const DifferentialCrossedModule & cm, size_t n);

/// Parses the plain-text algebra file format (dim/basis/f/alpha/action/rep
/// stanzas, whitespace separated, '#' comments).
DifferentialCrossedModule parseCrossedModuleFile(const std::string & path);

} // namespace gauge2

#endif
