#ifndef GAUGE2_FORM_HPP
#define GAUGE2_FORM_HPP

#include "gauge2/lie.hpp"
#include "gauge2/poly.hpp"

#include <cstdint>
#include <map>

namespace gauge2 {

enum class ValueTag { Scalar, G, H };

/// Component key: bitmasks over the registry's dt and dx factors. The stored
/// coefficient multiplies dt_J wedge dx_I with both index sets ascending and
/// the whole dt block to the left of the dx block.
struct FormKey
{
  uint32_t dt = 0;
  uint32_t dx = 0;
  auto operator<=>(const FormKey &) const = default;
};

/// Lie-algebra-valued differential form, bi-graded in (dx, dt), with Poly
/// coefficients. Component vectors have length = algebra dimension (1 for
/// scalars); all-zero vectors are never stored.
class BiGradedForm
{
public:
  BiGradedForm(RegistryPtr reg, ValueTag tag, size_t value_dim);

  static BiGradedForm zero(RegistryPtr reg, ValueTag tag, size_t value_dim)
  {
    return BiGradedForm(std::move(reg), tag, value_dim);
  }

  const RegistryPtr & registry() const { return m_reg; }
  ValueTag tag() const { return m_tag; }
  size_t valueDim() const { return m_vdim; }
  const std::map<FormKey, std::vector<Poly>> & components() const { return m_comps; }

  bool isZero() const { return m_comps.empty(); }
  size_t termCount() const;

  /// Adds c * poly * dt_J dx_I into value slot `v`.
  void addTerm(const FormKey & key, size_t v, const Poly & coeff);

  BiGradedForm operator+(const BiGradedForm & o) const;
  BiGradedForm operator-(const BiGradedForm & o) const;
  BiGradedForm operator-() const;
  BiGradedForm operator*(const Rational & c) const;
  BiGradedForm & operator+=(const BiGradedForm & o);
  BiGradedForm & operator-=(const BiGradedForm & o) { return *this += -o; }
  bool operator==(const BiGradedForm & o) const;

  /// Left multiplication by a scalar polynomial (0-form).
  BiGradedForm scaleBy(const Poly & p) const;

  /// Scalar slice: the scalar form of value component `a`.
  BiGradedForm slice(size_t a) const;

  /// Retag a form (value dimension must match the new algebra's).
  BiGradedForm retag(ValueTag tag) const;

  /// Exterior derivative in x (dx factors inserted from the left of the dx
  /// block, crossing the dt block).
  BiGradedForm dX() const;

  /// Exterior derivative in the independent simplex parameters.
  BiGradedForm dT() const;

  /// Map all coefficients onto another registry (variables matched by name;
  /// dt bits follow the t-variable mapping, which must be order-preserving).
  BiGradedForm toRegistry(const RegistryPtr & new_reg) const;

  /// Sum of |evaluation| of every coefficient at a point (diagnostic).
  Rational absEvaluate(const std::vector<Rational> & point) const;

  std::string str() const;

private:
  RegistryPtr m_reg;
  ValueTag m_tag;
  size_t m_vdim;
  std::map<FormKey, std::vector<Poly>> m_comps;
};

// sign of merging two disjoint ascending blocks a, b into one ascending block
int shuffleSign(uint32_t a, uint32_t b);

/// Scalar wedge product.
BiGradedForm wedge(const BiGradedForm & a, const BiGradedForm & b);

/// Component wedge with the Lie bracket on values (both g-valued).
BiGradedForm wedgeBracket(const LieAlgebra & L, const BiGradedForm & a, const BiGradedForm & b);

/// Component wedge with the crossed-module action (g-valued, h-valued).
BiGradedForm wedgeAction(const DifferentialCrossedModule & cm, const BiGradedForm & a, const BiGradedForm & b);

/// Component wedge with the associative product in the representation
/// (requires the product to close on the span).
BiGradedForm wedgeMatrix(const LieAlgebra & L, const BiGradedForm & a, const BiGradedForm & b);

/// alpha applied to the value slots of an h-valued form.
BiGradedForm alphaPush(const DifferentialCrossedModule & cm, const BiGradedForm & b);

/// Multilinear pairing <w_1 ... w_n, eta> under an invariant polynomial.
BiGradedForm pairForms(const InvariantPolynomial & P, const std::vector<const BiGradedForm *> & g_forms,
                       const BiGradedForm & h_form);

/// Integral over the standard simplex in all of the registry's t variables:
/// keeps only the dt-top component, integrates its coefficients exactly, and
/// returns a pure dx-form on the same registry.
BiGradedForm simplexIntegrateForm(const BiGradedForm & w);

/// Restriction to face i (0..k) of the parameter simplex; the result lives
/// over a registry with one fewer t variable.
BiGradedForm faceRestrict(const BiGradedForm & w, size_t face);

} // namespace gauge2

#endif
