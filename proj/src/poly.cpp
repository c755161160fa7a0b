#include "gauge2/poly.hpp"

#include <algorithm>
#include <sstream>

namespace gauge2 {

VarRegistry::VarRegistry(std::vector<std::string> x_vars, std::vector<std::string> t_vars)
  : m_x(std::move(x_vars)), m_t(std::move(t_vars))
{
  if (m_x.empty()) throw std::invalid_argument("VarRegistry: need at least one x variable");
  std::vector<std::string> all = m_x;
  all.insert(all.end(), m_t.begin(), m_t.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("VarRegistry: duplicate variable name");
}

RegistryPtr VarRegistry::make(size_t m, size_t k)
{
  std::vector<std::string> xs, ts;
  for (size_t i = 1; i <= m; i++) xs.push_back("x" + std::to_string(i));
  for (size_t j = 1; j <= k; j++) ts.push_back("t" + std::to_string(j));
  return std::make_shared<VarRegistry>(std::move(xs), std::move(ts));
}

size_t VarRegistry::indexOf(const std::string & name) const
{
  for (size_t i = 0; i < m_x.size(); i++)
    if (m_x[i] == name) return i;
  for (size_t j = 0; j < m_t.size(); j++)
    if (m_t[j] == name) return m_x.size() + j;
  throw std::invalid_argument("VarRegistry: unknown variable " + name);
}

Poly::Poly(RegistryPtr reg, const Rational & c) : m_reg(std::move(reg))
{
  if (c != 0) m_terms.emplace(Exponents(m_reg->arity(), 0), c);
}

Poly Poly::monomial(RegistryPtr reg, const Exponents & exp, const Rational & c)
{
  if (exp.size() != reg->arity()) throw std::invalid_argument("Poly::monomial: exponent arity mismatch");
  Poly p(reg);
  if (c != 0) p.m_terms.emplace(exp, c);
  return p;
}

Poly Poly::variable(RegistryPtr reg, size_t var_index)
{
  Exponents e(reg->arity(), 0);
  e.at(var_index) = 1;
  return monomial(reg, e, 1);
}

void Poly::checkSameRegistry(const Poly & q) const
{
  if (!m_reg || !q.m_reg || !(*m_reg == *q.m_reg))
    throw std::invalid_argument("Poly: registry mismatch");
}

void Poly::insertTerm(const Exponents & e, const Rational & c)
{
  if (c == 0) return;
  auto it = m_terms.find(e);
  if (it == m_terms.end()) {
    m_terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) m_terms.erase(it);
  }
}

Poly Poly::operator+(const Poly & q) const
{
  checkSameRegistry(q);
  Poly r = *this;
  for (const auto & [e, c] : q.m_terms) r.insertTerm(e, c);
  return r;
}

Poly & Poly::operator+=(const Poly & q)
{
  checkSameRegistry(q);
  for (const auto & [e, c] : q.m_terms) insertTerm(e, c);
  return *this;
}

Poly Poly::operator-() const
{
  Poly r(m_reg);
  for (const auto & [e, c] : m_terms) r.m_terms.emplace(e, -c);
  return r;
}

Poly Poly::operator-(const Poly & q) const { return *this + (-q); }

Poly Poly::operator*(const Poly & q) const
{
  checkSameRegistry(q);
  Poly r(m_reg);
  Exponents e(m_reg->arity());
  for (const auto & [e1, c1] : m_terms) {
    for (const auto & [e2, c2] : q.m_terms) {
      for (size_t i = 0; i < e.size(); i++) e[i] = e1[i] + e2[i];
      r.insertTerm(e, c1 * c2);
    }
  }
  return r;
}

Poly Poly::operator*(const Rational & c) const
{
  Poly r(m_reg);
  if (c == 0) return r;
  for (const auto & [e, c0] : m_terms) r.m_terms.emplace(e, c0 * c);
  return r;
}

bool Poly::operator==(const Poly & q) const
{
  return m_terms == q.m_terms;
}

Poly Poly::diff(size_t var_index) const
{
  Poly r(m_reg);
  for (const auto & [e, c] : m_terms) {
    int a = e.at(var_index);
    if (a == 0) continue;
    Exponents e2 = e;
    e2[var_index] = a - 1;
    r.insertTerm(e2, c * a);
  }
  return r;
}

Poly Poly::diff(const std::string & var_name) const
{
  return diff(m_reg->indexOf(var_name));
}

Poly Poly::substitute(size_t var_index, const Poly & value) const
{
  checkSameRegistry(value);
  Poly r(m_reg);
  for (const auto & [e, c] : m_terms) {
    int a = e.at(var_index);
    Exponents e2 = e;
    e2[var_index] = 0;
    Poly term = monomial(m_reg, e2, c);
    for (int i = 0; i < a; i++) term = term * value;
    r += term;
  }
  return r;
}

Rational Poly::evaluate(const std::vector<Rational> & point) const
{
  if (point.size() != m_reg->arity()) throw std::invalid_argument("Poly::evaluate: point arity mismatch");
  Rational sum = 0;
  for (const auto & [e, c] : m_terms) {
    Rational v = c;
    for (size_t i = 0; i < e.size(); i++) {
      for (int a = 0; a < e[i]; a++) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Poly Poly::simplexIntegrate(const std::vector<size_t> & t_indices) const
{
  const size_t k = t_indices.size();
  Poly r(m_reg);
  for (const auto & [e, c] : m_terms) {
    BigInt num = 1;
    unsigned total = 0;
    Exponents e2 = e;
    for (size_t idx : t_indices) {
      const unsigned a = static_cast<unsigned>(e.at(idx));
      num *= factorial(a);
      total += a;
      e2[idx] = 0;
    }
    Rational factor(num, factorial(total + static_cast<unsigned>(k)));
    r.insertTerm(e2, c * factor);
  }
  return r;
}

Poly Poly::boxIntegrate(const std::vector<size_t> & indices) const
{
  Poly r(m_reg);
  for (const auto & [e, c] : m_terms) {
    Rational factor = 1;
    Exponents e2 = e;
    for (size_t idx : indices) {
      factor /= (e.at(idx) + 1);
      e2[idx] = 0;
    }
    r.insertTerm(e2, c * factor);
  }
  return r;
}

Poly Poly::mapRegistry(const RegistryPtr & new_reg, const std::vector<int> & var_map) const
{
  if (var_map.size() != m_reg->arity()) throw std::invalid_argument("Poly::mapRegistry: map arity mismatch");
  Poly r(new_reg);
  Exponents e2(new_reg->arity());
  for (const auto & [e, c] : m_terms) {
    std::fill(e2.begin(), e2.end(), 0);
    for (size_t i = 0; i < e.size(); i++) {
      if (e[i] == 0) continue;
      if (var_map[i] < 0) throw std::invalid_argument("Poly::mapRegistry: dropped variable occurs in polynomial");
      e2.at(static_cast<size_t>(var_map[i])) = e[i];
    }
    r.insertTerm(e2, c);
  }
  return r;
}

int Poly::totalDegree() const
{
  int d = 0;
  for (const auto & [e, c] : m_terms) {
    int s = 0;
    for (int a : e) s += a;
    d = std::max(d, s);
  }
  return d;
}

std::string Poly::str() const
{
  if (m_terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto & [e, c] : m_terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (size_t i = 0; i < e.size(); i++) {
      if (e[i] == 0) continue;
      const std::string & nm = (i < m_reg->numX()) ? m_reg->xNames()[i] : m_reg->tNames()[i - m_reg->numX()];
      os << "*" << nm;
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

} // namespace gauge2
