#include "gauge2/lie.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace gauge2 {

namespace {

std::string tupleStr(std::initializer_list<size_t> idx)
{
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i : idx) {
    if (!first) os << ",";
    os << i;
    first = false;
  }
  os << ")";
  return os.str();
}

bool vecIsZero(const RatVec & v)
{
  for (const auto & c : v)
    if (c != 0) return false;
  return true;
}

RatVec vecSub(const RatVec & a, const RatVec & b)
{
  RatVec r = a;
  for (size_t i = 0; i < r.size(); i++) r[i] -= b[i];
  return r;
}

RatVec vecAdd(const RatVec & a, const RatVec & b)
{
  RatVec r = a;
  for (size_t i = 0; i < r.size(); i++) r[i] += b[i];
  return r;
}

RatVec basisVec(size_t dim, size_t i)
{
  RatVec v(dim, Rational(0));
  v[i] = 1;
  return v;
}

} // namespace

std::string ValidationReport::summary() const
{
  std::ostringstream os;
  for (const auto & a : axioms) {
    os << a.name << ": " << (a.pass ? "pass" : "FAIL");
    if (!a.pass && !a.witness.empty()) os << " at " << a.witness;
    os << "\n";
  }
  return os.str();
}

// --- LieAlgebra -------------------------------------------------------------

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names,
                       std::vector<std::vector<RatVec>> structure_constants,
                       std::vector<RatMat> representation)
  : m_names(std::move(basis_names)), m_f(std::move(structure_constants)), m_rep(std::move(representation))
{
  const size_t d = m_names.size();
  if (d == 0) throw std::invalid_argument("LieAlgebra: empty basis");
  if (m_f.size() != d) throw std::invalid_argument("LieAlgebra: structure constant arity mismatch");
  for (const auto & row : m_f) {
    if (row.size() != d) throw std::invalid_argument("LieAlgebra: structure constant arity mismatch");
    for (const auto & v : row)
      if (v.size() != d) throw std::invalid_argument("LieAlgebra: structure constant arity mismatch");
  }
  if (!m_rep.empty() && m_rep.size() != d)
    throw std::invalid_argument("LieAlgebra: representation size mismatch");
}

RatVec LieAlgebra::bracket(const RatVec & u, const RatVec & v) const
{
  const size_t d = dim();
  if (u.size() != d || v.size() != d) throw std::invalid_argument("LieAlgebra::bracket: length mismatch");
  RatVec r(d, Rational(0));
  for (size_t a = 0; a < d; a++) {
    if (u[a] == 0) continue;
    for (size_t b = 0; b < d; b++) {
      if (v[b] == 0) continue;
      const Rational uv = u[a] * v[b];
      for (size_t c = 0; c < d; c++)
        if (m_f[a][b][c] != 0) r[c] += uv * m_f[a][b][c];
    }
  }
  return r;
}

RatMat LieAlgebra::repOf(const RatVec & u) const
{
  if (!hasRepresentation()) throw std::logic_error("LieAlgebra: representation missing");
  const size_t r = repDim();
  RatMat m = matZero(r, r);
  for (size_t a = 0; a < dim(); a++) {
    if (u.at(a) == 0) continue;
    for (size_t i = 0; i < r; i++)
      for (size_t j = 0; j < r; j++) m[i][j] += u[a] * m_rep[a][i][j];
  }
  return m;
}

std::optional<RatVec> LieAlgebra::coordinatesOf(const RatMat & m) const
{
  if (!hasRepresentation()) throw std::logic_error("LieAlgebra: representation missing");
  const size_t r = repDim();
  RatMat sys = matZero(r * r, dim());
  RatVec rhs(r * r);
  for (size_t i = 0; i < r; i++)
    for (size_t j = 0; j < r; j++) {
      for (size_t a = 0; a < dim(); a++) sys[i * r + j][a] = m_rep[a][i][j];
      rhs[i * r + j] = m.at(i).at(j);
    }
  return solveLinear(sys, rhs);
}

const std::vector<std::vector<RatVec>> & LieAlgebra::productTensor() const
{
  if (m_prod_state == 0) {
    m_prod.assign(dim(), std::vector<RatVec>(dim()));
    m_prod_state = 1;
    for (size_t a = 0; a < dim() && m_prod_state == 1; a++) {
      for (size_t b = 0; b < dim(); b++) {
        auto coords = coordinatesOf(matMul(m_rep[a], m_rep[b]));
        if (!coords) {
          m_prod_state = -1;
          break;
        }
        m_prod[a][b] = std::move(*coords);
      }
    }
  }
  if (m_prod_state < 0)
    throw std::domain_error("LieAlgebra: representation products do not close on the span");
  return m_prod;
}

bool LieAlgebra::productCloses() const
{
  if (!hasRepresentation()) return false;
  try {
    productTensor();
  } catch (const std::domain_error &) {
    return false;
  }
  return true;
}

ValidationReport LieAlgebra::validate() const
{
  ValidationReport rep;
  const size_t d = dim();

  AxiomResult anti{"antisymmetry"};
  for (size_t a = 0; a < d && anti.pass; a++)
    for (size_t b = 0; b < d && anti.pass; b++)
      for (size_t c = 0; c < d; c++)
        if (m_f[a][b][c] != -m_f[b][a][c]) {
          anti.pass = false;
          anti.witness = tupleStr({a, b, c});
          break;
        }
  rep.axioms.push_back(anti);

  AxiomResult jac{"jacobi"};
  for (size_t a = 0; a < d && jac.pass; a++)
    for (size_t b = 0; b < d && jac.pass; b++)
      for (size_t c = 0; c < d; c++) {
        const RatVec ea = basisVec(d, a), eb = basisVec(d, b), ec = basisVec(d, c);
        RatVec s = bracket(bracket(ea, eb), ec);
        s = vecAdd(s, bracket(bracket(eb, ec), ea));
        s = vecAdd(s, bracket(bracket(ec, ea), eb));
        if (!vecIsZero(s)) {
          jac.pass = false;
          jac.witness = tupleStr({a, b, c});
          break;
        }
      }
  rep.axioms.push_back(jac);

  if (hasRepresentation()) {
    AxiomResult rp{"representation-bracket"};
    for (size_t a = 0; a < d && rp.pass; a++)
      for (size_t b = 0; b < d; b++) {
        const RatMat lhs = repOf(bracket(basisVec(d, a), basisVec(d, b)));
        const RatMat rhs = matSub(matMul(m_rep[a], m_rep[b]), matMul(m_rep[b], m_rep[a]));
        if (!matIsZero(matSub(lhs, rhs))) {
          rp.pass = false;
          rp.witness = tupleStr({a, b});
          break;
        }
      }
    rep.axioms.push_back(rp);
  }
  return rep;
}

// --- DifferentialCrossedModule ----------------------------------------------

DifferentialCrossedModule::DifferentialCrossedModule(LieAlgebra g, LieAlgebra h, RatMat alpha,
                                                     std::vector<std::vector<RatVec>> action,
                                                     bool conjugation_action)
  : m_g(std::move(g)), m_h(std::move(h)), m_alpha(std::move(alpha)), m_rho(std::move(action)),
    m_conjugation(conjugation_action)
{
  if (m_alpha.size() != m_g.dim())
    throw std::invalid_argument("DifferentialCrossedModule: alpha row count mismatch");
  for (const auto & row : m_alpha)
    if (row.size() != m_h.dim()) throw std::invalid_argument("DifferentialCrossedModule: alpha column count mismatch");
  if (m_rho.size() != m_g.dim())
    throw std::invalid_argument("DifferentialCrossedModule: action tensor mismatch");
  for (const auto & slab : m_rho) {
    if (slab.size() != m_h.dim()) throw std::invalid_argument("DifferentialCrossedModule: action tensor mismatch");
    for (const auto & row : slab)
      if (row.size() != m_h.dim()) throw std::invalid_argument("DifferentialCrossedModule: action tensor mismatch");
  }
}

RatVec DifferentialCrossedModule::act(const RatVec & x, const RatVec & y) const
{
  if (x.size() != m_g.dim() || y.size() != m_h.dim())
    throw std::invalid_argument("DifferentialCrossedModule::act: length mismatch");
  RatVec r(m_h.dim(), Rational(0));
  for (size_t a = 0; a < m_g.dim(); a++) {
    if (x[a] == 0) continue;
    for (size_t i = 0; i < m_h.dim(); i++) {
      if (y[i] == 0) continue;
      const Rational xy = x[a] * y[i];
      for (size_t j = 0; j < m_h.dim(); j++)
        if (m_rho[a][i][j] != 0) r[j] += xy * m_rho[a][i][j];
    }
  }
  return r;
}

RatVec DifferentialCrossedModule::alphaApply(const RatVec & y) const
{
  if (y.size() != m_h.dim()) throw std::invalid_argument("DifferentialCrossedModule::alphaApply: length mismatch");
  RatVec r(m_g.dim(), Rational(0));
  for (size_t a = 0; a < m_g.dim(); a++)
    for (size_t i = 0; i < m_h.dim(); i++)
      if (m_alpha[a][i] != 0) r[a] += m_alpha[a][i] * y[i];
  return r;
}

ValidationReport DifferentialCrossedModule::validate() const
{
  ValidationReport rep;
  const size_t dg = m_g.dim(), dh = m_h.dim();

  for (auto & a : m_g.validate().axioms) rep.axioms.push_back({"g-" + a.name, a.pass, a.witness});
  for (auto & a : m_h.validate().axioms) rep.axioms.push_back({"h-" + a.name, a.pass, a.witness});

  AxiomResult der{"action-derivation"};
  for (size_t a = 0; a < dg && der.pass; a++)
    for (size_t i = 0; i < dh && der.pass; i++)
      for (size_t j = 0; j < dh; j++) {
        const RatVec x = basisVec(dg, a), y = basisVec(dh, i), yp = basisVec(dh, j);
        const RatVec lhs = act(x, m_h.bracket(y, yp));
        const RatVec rhs = vecAdd(m_h.bracket(act(x, y), yp), m_h.bracket(y, act(x, yp)));
        if (!vecIsZero(vecSub(lhs, rhs))) {
          der.pass = false;
          der.witness = tupleStr({a, i, j});
          break;
        }
      }
  rep.axioms.push_back(der);

  AxiomResult mor{"action-lie-morphism"};
  for (size_t a = 0; a < dg && mor.pass; a++)
    for (size_t b = 0; b < dg && mor.pass; b++)
      for (size_t i = 0; i < dh; i++) {
        const RatVec x = basisVec(dg, a), xp = basisVec(dg, b), y = basisVec(dh, i);
        const RatVec lhs = act(m_g.bracket(x, xp), y);
        const RatVec rhs = vecSub(act(x, act(xp, y)), act(xp, act(x, y)));
        if (!vecIsZero(vecSub(lhs, rhs))) {
          mor.pass = false;
          mor.witness = tupleStr({a, b, i});
          break;
        }
      }
  rep.axioms.push_back(mor);

  AxiomResult equi{"alpha-equivariance"};
  for (size_t a = 0; a < dg && equi.pass; a++)
    for (size_t i = 0; i < dh; i++) {
      const RatVec x = basisVec(dg, a), y = basisVec(dh, i);
      const RatVec lhs = alphaApply(act(x, y));
      const RatVec rhs = m_g.bracket(x, alphaApply(y));
      if (!vecIsZero(vecSub(lhs, rhs))) {
        equi.pass = false;
        equi.witness = tupleStr({a, i});
        break;
      }
    }
  rep.axioms.push_back(equi);

  AxiomResult peif{"peiffer"};
  for (size_t i = 0; i < dh && peif.pass; i++)
    for (size_t j = 0; j < dh; j++) {
      const RatVec y = basisVec(dh, i), yp = basisVec(dh, j);
      const RatVec lhs = act(alphaApply(y), yp);
      const RatVec rhs = m_h.bracket(y, yp);
      if (!vecIsZero(vecSub(lhs, rhs))) {
        peif.pass = false;
        peif.witness = tupleStr({i, j});
        break;
      }
    }
  rep.axioms.push_back(peif);

  return rep;
}

// --- InvariantPolynomial ----------------------------------------------------

InvariantPolynomial::InvariantPolynomial(size_t arity, size_t dim_g, size_t dim_h,
                                         std::vector<Rational> tensor)
  : m_n(arity), m_dim_g(dim_g), m_dim_h(dim_h), m_tensor(std::move(tensor))
{
  size_t expect = dim_h;
  for (size_t i = 0; i < arity; i++) expect *= dim_g;
  if (m_tensor.size() != expect) throw std::invalid_argument("InvariantPolynomial: tensor size mismatch");
}

size_t InvariantPolynomial::flatIndex(const std::vector<size_t> & g_indices, size_t h_index) const
{
  if (g_indices.size() != m_n) throw std::invalid_argument("InvariantPolynomial: arity mismatch");
  size_t idx = 0;
  for (size_t a : g_indices) idx = idx * m_dim_g + a;
  return idx * m_dim_h + h_index;
}

const Rational & InvariantPolynomial::at(const std::vector<size_t> & g_indices, size_t h_index) const
{
  return m_tensor.at(flatIndex(g_indices, h_index));
}

Rational & InvariantPolynomial::at(const std::vector<size_t> & g_indices, size_t h_index)
{
  return m_tensor.at(flatIndex(g_indices, h_index));
}

Rational InvariantPolynomial::contract(const std::vector<RatVec> & g_args, const RatVec & h_arg) const
{
  if (g_args.size() != m_n) throw std::invalid_argument("InvariantPolynomial::contract: arity mismatch");
  Rational sum = 0;
  std::vector<size_t> idx(m_n, 0);
  // iterate over all index tuples
  while (true) {
    Rational coeff = 1;
    bool zero = false;
    for (size_t s = 0; s < m_n && !zero; s++) {
      coeff *= g_args[s].at(idx[s]);
      zero = (coeff == 0);
    }
    if (!zero) {
      for (size_t i = 0; i < m_dim_h; i++) {
        if (h_arg.at(i) == 0) continue;
        const Rational & t = m_tensor[flatIndex(idx, i)];
        if (t != 0) sum += coeff * h_arg[i] * t;
      }
    }
    size_t s = 0;
    while (s < m_n && ++idx[s] == m_dim_g) idx[s++] = 0;
    if (s == m_n) break;
    if (m_n == 0) break;
  }
  return sum;
}

bool InvariantPolynomial::isZero() const
{
  for (const auto & c : m_tensor)
    if (c != 0) return false;
  return true;
}

ValidationReport InvariantPolynomial::validate(const DifferentialCrossedModule & cm) const
{
  if (m_dim_g != cm.g().dim() || m_dim_h != cm.h().dim())
    throw std::invalid_argument("InvariantPolynomial::validate: arity mismatch with module");
  ValidationReport rep;
  const size_t dg = m_dim_g, dh = m_dim_h;

  auto forEachTuple = [&](auto && fn) {
    std::vector<size_t> idx(m_n, 0);
    while (true) {
      if (!fn(idx)) return false;
      size_t s = 0;
      while (s < m_n && ++idx[s] == dg) idx[s++] = 0;
      if (s == m_n) break;
    }
    return true;
  };

  AxiomResult sy4{"sy4-symmetry"};
  forEachTuple([&](const std::vector<size_t> & idx) {
    for (size_t s = 0; s + 1 < m_n; s++) {
      std::vector<size_t> swapped = idx;
      std::swap(swapped[s], swapped[s + 1]);
      for (size_t i = 0; i < dh; i++)
        if (at(idx, i) != at(swapped, i)) {
          sy4.pass = false;
          sy4.witness = tupleStr({s, i});
          return false;
        }
    }
    return true;
  });
  rep.axioms.push_back(sy4);

  AxiomResult sy2{"sy2-ad-invariance"};
  forEachTuple([&](const std::vector<size_t> & idx) {
    for (size_t b = 0; b < dg; b++)
      for (size_t i = 0; i < dh; i++) {
        // <X_a1..X_an, X_b |> Y_i>
        Rational lhs = 0;
        for (size_t j = 0; j < dh; j++)
          if (cm.rho(b, i, j) != 0) lhs += cm.rho(b, i, j) * at(idx, j);
        // -sum_s <X_a1..[X_b, X_as]..X_an, Y_i>
        Rational rhs = 0;
        for (size_t s = 0; s < m_n; s++) {
          std::vector<size_t> mod = idx;
          for (size_t c = 0; c < dg; c++) {
            const Rational & fc = cm.g().f(b, idx[s], c);
            if (fc == 0) continue;
            mod[s] = c;
            rhs -= fc * at(mod, i);
          }
          mod[s] = idx[s];
        }
        if (lhs != rhs) {
          sy2.pass = false;
          sy2.witness = tupleStr({b, i});
          return false;
        }
      }
    return true;
  });
  rep.axioms.push_back(sy2);

  AxiomResult sy3{"sy3-alpha-exchange"};
  forEachTuple([&](const std::vector<size_t> & idx) {
    for (size_t s = 0; s < m_n; s++)
      for (size_t j = 0; j < dh; j++)
        for (size_t i = 0; i < dh; i++) {
          Rational lhs = 0, rhs = 0;
          std::vector<size_t> mod = idx;
          for (size_t b = 0; b < dg; b++) {
            const Rational & ab_j = cm.alphaMatrix()[b][j];
            const Rational & ab_i = cm.alphaMatrix()[b][i];
            mod[s] = b;
            if (ab_j != 0) lhs += ab_j * at(mod, i);
            if (ab_i != 0) rhs += ab_i * at(mod, j);
          }
          if (lhs != rhs) {
            sy3.pass = false;
            sy3.witness = tupleStr({s, j, i});
            return false;
          }
        }
    return true;
  });
  rep.axioms.push_back(sy3);

  return rep;
}

// --- builders ---------------------------------------------------------------

namespace {

/// Structure constants from a basis of matrices (commutators must close).
LieAlgebra algebraFromMatrices(std::vector<std::string> names, std::vector<RatMat> mats)
{
  const size_t d = names.size();
  LieAlgebra probe(names, std::vector<std::vector<RatVec>>(d, std::vector<RatVec>(d, RatVec(d, Rational(0)))), mats);
  std::vector<std::vector<RatVec>> f(d, std::vector<RatVec>(d));
  for (size_t a = 0; a < d; a++)
    for (size_t b = 0; b < d; b++) {
      const RatMat comm = matSub(matMul(mats[a], mats[b]), matMul(mats[b], mats[a]));
      auto coords = probe.coordinatesOf(comm);
      if (!coords) throw std::logic_error("algebraFromMatrices: commutator outside span");
      f[a][b] = std::move(*coords);
    }
  return LieAlgebra(std::move(names), std::move(f), std::move(mats));
}

} // namespace

LieAlgebra buildGl(size_t n)
{
  std::vector<std::string> names;
  std::vector<RatMat> mats;
  for (size_t i = 0; i < n; i++)
    for (size_t j = 0; j < n; j++) {
      names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      RatMat e = matZero(n, n);
      e[i][j] = 1;
      mats.push_back(e);
    }
  return algebraFromMatrices(std::move(names), std::move(mats));
}

LieAlgebra buildSo3()
{
  // R(L_a)[b][c] = -eps_{abc}
  auto eps = [](size_t a, size_t b, size_t c) -> int {
    if (a == b || b == c || a == c) return 0;
    if ((a == 0 && b == 1 && c == 2) || (a == 1 && b == 2 && c == 0) || (a == 2 && b == 0 && c == 1)) return 1;
    return -1;
  };
  std::vector<std::string> names{"L1", "L2", "L3"};
  std::vector<RatMat> mats;
  for (size_t a = 0; a < 3; a++) {
    RatMat m = matZero(3, 3);
    for (size_t b = 0; b < 3; b++)
      for (size_t c = 0; c < 3; c++) m[b][c] = -eps(a, b, c);
    mats.push_back(m);
  }
  return algebraFromMatrices(std::move(names), std::move(mats));
}

LieAlgebra buildSo31()
{
  const int eta[4] = {-1, 1, 1, 1};
  std::vector<std::string> names;
  std::vector<RatMat> mats;
  for (size_t a = 0; a < 4; a++)
    for (size_t b = a + 1; b < 4; b++) {
      names.push_back("M" + std::to_string(a) + std::to_string(b));
      // M_ab P_d = eta_bd P_a - eta_ad P_b
      RatMat m = matZero(4, 4);
      for (size_t d = 0; d < 4; d++) {
        if (d == b) m[a][d] += eta[b];
        if (d == a) m[b][d] -= eta[a];
      }
      mats.push_back(m);
    }
  return algebraFromMatrices(std::move(names), std::move(mats));
}

LieAlgebra buildAbelian(size_t dim)
{
  std::vector<std::string> names;
  for (size_t i = 0; i < dim; i++) names.push_back("P" + std::to_string(i));
  return LieAlgebra(std::move(names),
                    std::vector<std::vector<RatVec>>(dim, std::vector<RatVec>(dim, RatVec(dim, Rational(0)))));
}

DifferentialCrossedModule buildPoincare2()
{
  LieAlgebra g = buildSo31();
  LieAlgebra h = buildAbelian(4);
  RatMat alpha = matZero(g.dim(), h.dim());
  std::vector<std::vector<RatVec>> rho(g.dim(), std::vector<RatVec>(h.dim(), RatVec(h.dim(), Rational(0))));
  for (size_t a = 0; a < g.dim(); a++)
    for (size_t i = 0; i < 4; i++)
      for (size_t j = 0; j < 4; j++) rho[a][i][j] = g.representation()[a][j][i];
  return DifferentialCrossedModule(std::move(g), std::move(h), std::move(alpha), std::move(rho));
}

DifferentialCrossedModule buildAdjointModule(const LieAlgebra & L)
{
  if (!L.hasRepresentation()) throw std::invalid_argument("buildAdjointModule: representation missing");
  const size_t d = L.dim();
  RatMat alpha = matIdentity(d);
  std::vector<std::vector<RatVec>> rho(d, std::vector<RatVec>(d));
  for (size_t a = 0; a < d; a++)
    for (size_t i = 0; i < d; i++) {
      rho[a][i] = RatVec(d);
      for (size_t j = 0; j < d; j++) rho[a][i][j] = L.f(a, i, j);
    }
  return DifferentialCrossedModule(L, L, std::move(alpha), std::move(rho), /*conjugation*/ true);
}

InvariantPolynomial invpolyFromTrace(const DifferentialCrossedModule & cm, size_t n)
{
  const LieAlgebra & g = cm.g();
  if (!g.hasRepresentation()) throw std::invalid_argument("invpolyFromTrace: representation missing");
  const size_t dg = g.dim(), dh = cm.h().dim();
  size_t total = dh;
  for (size_t i = 0; i < n; i++) total *= dg;
  std::vector<Rational> tensor(total, Rational(0));
  InvariantPolynomial P(n, dg, dh, std::move(tensor));

  // representation matrices of alpha(Y_i)
  std::vector<RatMat> alpha_mats;
  for (size_t i = 0; i < dh; i++) {
    RatVec y(dh, Rational(0));
    y[i] = 1;
    alpha_mats.push_back(g.repOf(cm.alphaApply(y)));
  }

  std::vector<size_t> perm(n + 1);
  std::vector<size_t> idx(n, 0);
  const Rational norm(1, factorial(static_cast<unsigned>(n + 1)));
  while (true) {
    for (size_t i = 0; i < dh; i++) {
      // symmetrized trace over the n+1 factors
      for (size_t p = 0; p <= n; p++) perm[p] = p;
      Rational sum = 0;
      do {
        RatMat prod = matIdentity(g.repDim());
        for (size_t p = 0; p <= n; p++) {
          const RatMat & factor = (perm[p] < n) ? g.representation()[idx[perm[p]]] : alpha_mats[i];
          prod = matMul(prod, factor);
        }
        Rational tr = 0;
        for (size_t r = 0; r < g.repDim(); r++) tr += prod[r][r];
        sum += tr;
      } while (std::next_permutation(perm.begin(), perm.end()));
      P.at(idx, i) = sum * norm;
    }
    size_t s = 0;
    while (s < n && ++idx[s] == dg) idx[s++] = 0;
    if (s == n || n == 0) break;
  }
  return P;
}

// --- file format ------------------------------------------------------------

namespace {

struct TokenStream
{
  std::vector<std::string> tokens;
  size_t pos = 0;

  explicit TokenStream(std::istream & in)
  {
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens.push_back(tok);
    }
  }

  bool done() const { return pos >= tokens.size(); }
  std::string next()
  {
    if (done()) throw std::runtime_error("algebra file: unexpected end of input");
    return tokens[pos++];
  }
  size_t nextIndex(size_t bound)
  {
    const long v = std::stol(next());
    if (v < 1 || static_cast<size_t>(v) > bound) throw std::runtime_error("algebra file: index out of range");
    return static_cast<size_t>(v - 1);
  }
  Rational nextRational()
  {
    const std::string tok = next();
    auto slash = tok.find('/');
    if (slash == std::string::npos) return Rational(BigInt(tok));
    return Rational(BigInt(tok.substr(0, slash)), BigInt(tok.substr(slash + 1)));
  }
};

struct AlgebraDraft
{
  size_t dim = 0;
  size_t repdim = 0;
  std::vector<std::string> names;
  std::vector<std::vector<RatVec>> f;
  std::vector<RatMat> rep;

  void requireDim() const
  {
    if (dim == 0) throw std::runtime_error("algebra file: dim must come first in a stanza");
  }
  void setDim(size_t d)
  {
    dim = d;
    names.clear();
    for (size_t i = 1; i <= d; i++) names.push_back("b" + std::to_string(i));
    f.assign(d, std::vector<RatVec>(d, RatVec(d, Rational(0))));
  }
  LieAlgebra build() const
  {
    return LieAlgebra(names, f, rep);
  }
};

} // namespace

DifferentialCrossedModule parseCrossedModuleFile(const std::string & path)
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("algebra file: cannot open " + path);
  TokenStream ts(in);

  AlgebraDraft g, h;
  std::vector<std::tuple<size_t, size_t, Rational>> alpha_entries;
  std::vector<std::tuple<size_t, size_t, size_t, Rational>> action_entries;
  bool conjugation = false;

  while (!ts.done()) {
    const std::string key = ts.next();
    AlgebraDraft * d = nullptr;
    if (key.size() > 1 && (key[0] == 'g' || key[0] == 'h')) d = (key[0] == 'g') ? &g : &h;
    if (d && key.substr(1) == "dim") {
      d->setDim(static_cast<size_t>(std::stol(ts.next())));
    } else if (d && key.substr(1) == "basis") {
      d->requireDim();
      for (size_t i = 0; i < d->dim; i++) d->names[i] = ts.next();
    } else if (d && key.substr(1) == "f") {
      d->requireDim();
      const size_t a = ts.nextIndex(d->dim), b = ts.nextIndex(d->dim), c = ts.nextIndex(d->dim);
      d->f[a][b][c] = ts.nextRational();
    } else if (d && key.substr(1) == "repdim") {
      d->requireDim();
      d->repdim = static_cast<size_t>(std::stol(ts.next()));
      d->rep.assign(d->dim, matZero(d->repdim, d->repdim));
    } else if (d && key.substr(1) == "rep") {
      if (d->repdim == 0) throw std::runtime_error("algebra file: repdim must precede rep");
      const size_t a = ts.nextIndex(d->dim);
      for (size_t i = 0; i < d->repdim; i++)
        for (size_t j = 0; j < d->repdim; j++) d->rep[a][i][j] = ts.nextRational();
    } else if (key == "alpha") {
      const size_t a = ts.nextIndex(g.dim), i = ts.nextIndex(h.dim);
      alpha_entries.emplace_back(a, i, ts.nextRational());
    } else if (key == "action") {
      const size_t a = ts.nextIndex(g.dim), i = ts.nextIndex(h.dim), j = ts.nextIndex(h.dim);
      action_entries.emplace_back(a, i, j, ts.nextRational());
    } else if (key == "conjugation") {
      conjugation = (ts.next() == "1");
    } else {
      throw std::runtime_error("algebra file: unknown directive '" + key + "'");
    }
  }
  if (g.dim == 0 || h.dim == 0) throw std::runtime_error("algebra file: both gdim and hdim required");

  RatMat alpha = matZero(g.dim, h.dim);
  for (const auto & [a, i, v] : alpha_entries) alpha[a][i] = v;
  std::vector<std::vector<RatVec>> rho(g.dim, std::vector<RatVec>(h.dim, RatVec(h.dim, Rational(0))));
  for (const auto & [a, i, j, v] : action_entries) rho[a][i][j] = v;

  return DifferentialCrossedModule(g.build(), h.build(), std::move(alpha), std::move(rho), conjugation);
}

} // namespace gauge2
