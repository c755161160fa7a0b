#ifndef GAUGE2_POLY_HPP
#define GAUGE2_POLY_HPP

#include "gauge2/rational.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gauge2 {

/// Ordered variable registry: spacetime variables x_1..x_m followed by the
/// independent simplex parameters t_1..t_k. Exponent vectors of every Poly
/// built on a registry have fixed arity m + k.
class VarRegistry
{
public:
  VarRegistry(std::vector<std::string> x_vars, std::vector<std::string> t_vars);

  static std::shared_ptr<const VarRegistry> make(size_t m, size_t k);

  size_t numX() const { return m_x.size(); }
  size_t numT() const { return m_t.size(); }
  size_t arity() const { return m_x.size() + m_t.size(); }

  const std::vector<std::string> & xNames() const { return m_x; }
  const std::vector<std::string> & tNames() const { return m_t; }

  // Index into exponent vectors: x_i at i, t_j at numX()+j.
  size_t xIndex(size_t i) const { return i; }
  size_t tIndex(size_t j) const { return m_x.size() + j; }

  /// Global index of a named variable; throws on unknown name.
  size_t indexOf(const std::string & name) const;

  bool operator==(const VarRegistry & o) const { return m_x == o.m_x && m_t == o.m_t; }

private:
  std::vector<std::string> m_x;
  std::vector<std::string> m_t;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms map dense exponent vectors to nonzero coefficients.
class Poly
{
public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  Poly() = default;
  explicit Poly(RegistryPtr reg) : m_reg(std::move(reg)) {}
  Poly(RegistryPtr reg, const Rational & c);

  static Poly monomial(RegistryPtr reg, const Exponents & exp, const Rational & c);
  static Poly variable(RegistryPtr reg, size_t var_index);
  static Poly constant(RegistryPtr reg, const Rational & c) { return Poly(reg, c); }

  const RegistryPtr & registry() const { return m_reg; }
  const TermMap & terms() const { return m_terms; }
  bool isZero() const { return m_terms.empty(); }
  size_t termCount() const { return m_terms.size(); }

  Poly operator+(const Poly & q) const;
  Poly operator-(const Poly & q) const;
  Poly operator-() const;
  Poly operator*(const Poly & q) const;
  Poly operator*(const Rational & c) const;
  Poly & operator+=(const Poly & q);
  bool operator==(const Poly & q) const;

  /// Formal partial derivative with respect to the variable at global index.
  Poly diff(size_t var_index) const;
  Poly diff(const std::string & var_name) const;

  /// Substitute the variable at var_index by a polynomial (same registry).
  Poly substitute(size_t var_index, const Poly & value) const;

  /// Evaluate at a rational point (full assignment, arity-sized).
  Rational evaluate(const std::vector<Rational> & point) const;

  /// Exact integral over the standard simplex {t_i >= 0, sum t_i <= 1} in the
  /// listed t variables (global indices), via the Dirichlet formula
  /// int t1^a1...tk^ak dt = a1!...ak!/(a1+...+ak+k)!. Remaining variables
  /// pass through; the integrated variables are zeroed out of the exponents.
  Poly simplexIntegrate(const std::vector<size_t> & t_indices) const;

  /// Exact integral over the unit box [0,1]^k in the listed variables.
  Poly boxIntegrate(const std::vector<size_t> & indices) const;

  /// Re-express over another registry; `var_map[i]` is the index in the new
  /// registry of this registry's variable i, or -1 if the variable must not
  /// occur (throws if it does).
  Poly mapRegistry(const RegistryPtr & new_reg, const std::vector<int> & var_map) const;

  int totalDegree() const;
  std::string str() const;

private:
  void insertTerm(const Exponents & e, const Rational & c);
  void checkSameRegistry(const Poly & q) const;

  RegistryPtr m_reg;
  TermMap m_terms;
};

inline Poly operator*(const Rational & c, const Poly & p) { return p * c; }

} // namespace gauge2

#endif
