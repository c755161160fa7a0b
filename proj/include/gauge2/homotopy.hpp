#ifndef GAUGE2_HOMOTOPY_HPP
#define GAUGE2_HOMOTOPY_HPP

#include "gauge2/connection.hpp"

#include <map>

namespace gauge2 {

/// Generators of the formal graded algebra on a connection family.
enum class Gen { At, Bt, Ft, Gt, DtAt, DtBt };

int genTotalDegree(Gen g);
bool genIsG(Gen g); // g-valued vs h-valued
const char * genName(Gen g);

/// Formal sum of paired monomials <g_1 ... g_n, h> with rational coefficients.
/// The g-slot order is significant.
class HomotopyExpr
{
public:
  struct Monomial
  {
    std::vector<Gen> gslots;
    Gen hslot = Gen::Gt;
    auto operator<=>(const Monomial &) const = default;
  };

  HomotopyExpr() = default;

  static HomotopyExpr pairing(std::vector<Gen> gslots, Gen hslot, const Rational & coeff = 1);

  /// <F_t^n, G_t>
  static HomotopyExpr invariantPolynomialOfCurvatures(size_t n);

  void add(const Monomial & m, const Rational & c);
  const std::map<Monomial, Rational> & terms() const { return m_terms; }
  bool isZero() const { return m_terms.empty(); }

  HomotopyExpr operator+(const HomotopyExpr & o) const;
  HomotopyExpr operator*(const Rational & c) const;

  std::string str() const;

private:
  std::map<Monomial, Rational> m_terms;
};

/// Antiderivation l_t: kills A_t, B_t, sends F_t -> d_tA_t, G_t -> d_tB_t,
/// with Leibniz sign (-1)^{total degree of the skipped factors}.
HomotopyExpr ltApply(const HomotopyExpr & e);

HomotopyExpr ltPower(const HomotopyExpr & e, size_t p);

/// Concrete generator forms of a family, shared by all evaluations.
struct FamilyForms
{
  BiGradedForm At, Bt, Ft, Gt, DtAt, DtBt;
};

FamilyForms familyForms(const DifferentialCrossedModule & cm, const ConnectionFamily & fam);

/// Evaluate a formal expression on a family under an invariant polynomial.
BiGradedForm exprEval(const HomotopyExpr & e, const FamilyForms & forms, const InvariantPolynomial & P);
BiGradedForm exprEval(const HomotopyExpr & e, const ConnectionFamily & fam, const InvariantPolynomial & P,
                      const DifferentialCrossedModule & cm);

/// Descent-equation residual at level p for a (p+2)-member family:
/// sum_i (-1)^i int_{T_p} face_i(l^p Pi / p!) - (-1)^p d int_{T_{p+1}} l^{p+1} Pi/(p+1)!.
BiGradedForm echfCheck(size_t p, const ConnectionFamily & fam, const InvariantPolynomial & P,
                       const DifferentialCrossedModule & cm, size_t n);

/// Named residuals of the graded operator relations on Pi = <F_t^n, G_t>.
std::vector<std::pair<std::string, BiGradedForm>> gradedRelationsCheck(const ConnectionFamily & fam,
                                                                       const InvariantPolynomial & P,
                                                                       const DifferentialCrossedModule & cm,
                                                                       size_t n);

/// (int_{T_1} l_t Pi - Q(c0,c1),  d Q - (P(c1) - P(c0))).
std::pair<BiGradedForm, BiGradedForm> chernWeilCheck(const InvariantPolynomial & P,
                                                     const DifferentialCrossedModule & cm,
                                                     const TwoConnection & c0, const TwoConnection & c1,
                                                     size_t n);

/// Q(c0,c2) - Q(c1,c2) - Q(c0,c1) + d qBoundary(c0,c1,c2).
BiGradedForm triangleCheck(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                           const TwoConnection & c0, const TwoConnection & c1, const TwoConnection & c2,
                           size_t n);

/// Q(c0,c1) - C(c1) + C(c0) + d bForm(c0,c1).
BiGradedForm cartanHomotopyCheck(const InvariantPolynomial & P, const DifferentialCrossedModule & cm,
                                 const TwoConnection & c0, const TwoConnection & c1, size_t n);

} // namespace gauge2

#endif
