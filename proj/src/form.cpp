#include "gauge2/form.hpp"

#include <bit>
#include <sstream>

namespace gauge2 {

namespace {

void checkSameRegistry(const BiGradedForm & a, const BiGradedForm & b)
{
  if (!(*a.registry() == *b.registry())) throw std::invalid_argument("BiGradedForm: registry mismatch");
}

uint32_t lowBits(size_t n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

} // namespace

int shuffleSign(uint32_t a, uint32_t b)
{
  // (-1)^{#{(i,j) : i in a, j in b, i > j}}
  int inversions = 0;
  uint32_t bb = b;
  while (bb) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(bb));
    bb &= bb - 1;
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

BiGradedForm::BiGradedForm(RegistryPtr reg, ValueTag tag, size_t value_dim)
  : m_reg(std::move(reg)), m_tag(tag), m_vdim(value_dim)
{
  if (m_vdim == 0 || (tag == ValueTag::Scalar && m_vdim != 1))
    throw std::invalid_argument("BiGradedForm: bad value dimension");
}

size_t BiGradedForm::termCount() const
{
  size_t n = 0;
  for (const auto & [k, vec] : m_comps)
    for (const auto & p : vec) n += p.termCount();
  return n;
}

void BiGradedForm::addTerm(const FormKey & key, size_t v, const Poly & coeff)
{
  if (coeff.isZero()) return;
  auto it = m_comps.find(key);
  if (it == m_comps.end()) it = m_comps.emplace(key, std::vector<Poly>(m_vdim, Poly(m_reg))).first;
  it->second.at(v) += coeff;
  for (const auto & p : it->second)
    if (!p.isZero()) return;
  m_comps.erase(it);
}

BiGradedForm BiGradedForm::operator+(const BiGradedForm & o) const
{
  BiGradedForm r = *this;
  r += o;
  return r;
}

BiGradedForm & BiGradedForm::operator+=(const BiGradedForm & o)
{
  checkSameRegistry(*this, o);
  if (m_vdim != o.m_vdim) throw std::invalid_argument("BiGradedForm: value dimension mismatch");
  for (const auto & [k, vec] : o.m_comps)
    for (size_t v = 0; v < m_vdim; v++) addTerm(k, v, vec[v]);
  return *this;
}

BiGradedForm BiGradedForm::operator-() const
{
  BiGradedForm r(m_reg, m_tag, m_vdim);
  for (const auto & [k, vec] : m_comps) {
    std::vector<Poly> nv;
    nv.reserve(vec.size());
    for (const auto & p : vec) nv.push_back(-p);
    r.m_comps.emplace(k, std::move(nv));
  }
  return r;
}

BiGradedForm BiGradedForm::operator-(const BiGradedForm & o) const { return *this + (-o); }

BiGradedForm BiGradedForm::operator*(const Rational & c) const
{
  BiGradedForm r(m_reg, m_tag, m_vdim);
  if (c == 0) return r;
  for (const auto & [k, vec] : m_comps) {
    std::vector<Poly> nv;
    nv.reserve(vec.size());
    for (const auto & p : vec) nv.push_back(p * c);
    r.m_comps.emplace(k, std::move(nv));
  }
  return r;
}

bool BiGradedForm::operator==(const BiGradedForm & o) const
{
  return m_vdim == o.m_vdim && m_comps == o.m_comps;
}

BiGradedForm BiGradedForm::scaleBy(const Poly & p) const
{
  BiGradedForm r(m_reg, m_tag, m_vdim);
  for (const auto & [k, vec] : m_comps)
    for (size_t v = 0; v < m_vdim; v++) r.addTerm(k, v, vec[v] * p);
  return r;
}

BiGradedForm BiGradedForm::slice(size_t a) const
{
  BiGradedForm r(m_reg, ValueTag::Scalar, 1);
  for (const auto & [k, vec] : m_comps) r.addTerm(k, 0, vec.at(a));
  return r;
}

BiGradedForm BiGradedForm::retag(ValueTag tag) const
{
  BiGradedForm r(m_reg, tag, m_vdim);
  r.m_comps = m_comps;
  return r;
}

BiGradedForm BiGradedForm::dX() const
{
  BiGradedForm r(m_reg, m_tag, m_vdim);
  const size_t m = m_reg->numX();
  for (const auto & [k, vec] : m_comps) {
    const int dt_sign = (std::popcount(k.dt) % 2 == 0) ? 1 : -1;
    for (size_t i = 0; i < m; i++) {
      const uint32_t bit = 1u << i;
      if (k.dx & bit) continue;
      const int sign = dt_sign * ((std::popcount(k.dx & lowBits(i)) % 2 == 0) ? 1 : -1);
      const FormKey nk{k.dt, k.dx | bit};
      for (size_t v = 0; v < m_vdim; v++) {
        Poly d = vec[v].diff(m_reg->xIndex(i));
        if (!d.isZero()) r.addTerm(nk, v, sign > 0 ? d : -d);
      }
    }
  }
  return r;
}

BiGradedForm BiGradedForm::dT() const
{
  BiGradedForm r(m_reg, m_tag, m_vdim);
  const size_t kk = m_reg->numT();
  for (const auto & [k, vec] : m_comps) {
    for (size_t j = 0; j < kk; j++) {
      const uint32_t bit = 1u << j;
      if (k.dt & bit) continue;
      const int sign = (std::popcount(k.dt & lowBits(j)) % 2 == 0) ? 1 : -1;
      const FormKey nk{k.dt | bit, k.dx};
      for (size_t v = 0; v < m_vdim; v++) {
        Poly d = vec[v].diff(m_reg->tIndex(j));
        if (!d.isZero()) r.addTerm(nk, v, sign > 0 ? d : -d);
      }
    }
  }
  return r;
}

BiGradedForm BiGradedForm::toRegistry(const RegistryPtr & new_reg) const
{
  // variable map by name
  std::vector<int> var_map(m_reg->arity(), -1);
  std::vector<int> t_bit_map(m_reg->numT(), -1);
  auto find = [&](const std::string & nm) -> int {
    try {
      return static_cast<int>(new_reg->indexOf(nm));
    } catch (const std::invalid_argument &) {
      return -1;
    }
  };
  for (size_t i = 0; i < m_reg->numX(); i++) var_map[m_reg->xIndex(i)] = find(m_reg->xNames()[i]);
  for (size_t j = 0; j < m_reg->numT(); j++) {
    const int ni = find(m_reg->tNames()[j]);
    var_map[m_reg->tIndex(j)] = ni;
    if (ni >= 0) t_bit_map[j] = static_cast<int>(ni - static_cast<int>(new_reg->numX()));
  }
  BiGradedForm r(new_reg, m_tag, m_vdim);
  for (const auto & [k, vec] : m_comps) {
    FormKey nk{0, 0};
    uint32_t dx = k.dx;
    while (dx) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(dx));
      dx &= dx - 1;
      const int ni = var_map[m_reg->xIndex(i)];
      if (ni < 0) throw std::invalid_argument("BiGradedForm::toRegistry: dx variable missing in target");
      nk.dx |= 1u << ni;
    }
    uint32_t dt = k.dt;
    while (dt) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(dt));
      dt &= dt - 1;
      if (t_bit_map[j] < 0) throw std::invalid_argument("BiGradedForm::toRegistry: dt variable missing in target");
      nk.dt |= 1u << t_bit_map[j];
    }
    for (size_t v = 0; v < m_vdim; v++)
      if (!vec[v].isZero()) r.addTerm(nk, v, vec[v].mapRegistry(new_reg, var_map));
  }
  return r;
}

Rational BiGradedForm::absEvaluate(const std::vector<Rational> & point) const
{
  Rational sum = 0;
  for (const auto & [k, vec] : m_comps)
    for (const auto & p : vec) {
      Rational v = p.evaluate(point);
      sum += (v < 0) ? Rational(-v) : v;
    }
  return sum;
}

std::string BiGradedForm::str() const
{
  std::ostringstream os;
  for (const auto & [k, vec] : m_comps) {
    os << "[dt=" << k.dt << ",dx=" << k.dx << "](";
    for (size_t v = 0; v < vec.size(); v++) {
      if (v) os << "; ";
      os << vec[v].str();
    }
    os << ")\n";
  }
  return os.str();
}

// --- products ---------------------------------------------------------------

namespace {

/// Structural data of a single wedge of two component keys.
struct WedgedKey
{
  FormKey key;
  int sign = 0; // 0 => vanishes
};

WedgedKey wedgeKeys(const FormKey & a, const FormKey & b)
{
  if ((a.dt & b.dt) || (a.dx & b.dx)) return {};
  int sign = shuffleSign(a.dt, b.dt) * shuffleSign(a.dx, b.dx);
  // move b's dt block left across a's dx block
  if ((std::popcount(a.dx) * std::popcount(b.dt)) % 2 != 0) sign = -sign;
  return {{a.dt | b.dt, a.dx | b.dx}, sign};
}

/// Generic bilinear component wedge: out[c] += tensor(a,b,c) * w1^a ^ w2^b.
template <typename Tensor>
BiGradedForm wedgeBilinear(const BiGradedForm & w1, const BiGradedForm & w2, size_t out_dim,
                           ValueTag out_tag, Tensor && tensor)
{
  checkSameRegistry(w1, w2);
  BiGradedForm r(w1.registry(), out_tag, out_dim);
  for (const auto & [k1, v1] : w1.components()) {
    for (const auto & [k2, v2] : w2.components()) {
      const WedgedKey wk = wedgeKeys(k1, k2);
      if (wk.sign == 0) continue;
      for (size_t a = 0; a < w1.valueDim(); a++) {
        if (v1[a].isZero()) continue;
        for (size_t b = 0; b < w2.valueDim(); b++) {
          if (v2[b].isZero()) continue;
          Poly prod = v1[a] * v2[b];
          if (wk.sign < 0) prod = -prod;
          for (size_t c = 0; c < out_dim; c++) {
            const Rational & t = tensor(a, b, c);
            if (t != 0) r.addTerm(wk.key, c, prod * t);
          }
        }
      }
    }
  }
  return r;
}

} // namespace

BiGradedForm wedge(const BiGradedForm & a, const BiGradedForm & b)
{
  if (a.tag() != ValueTag::Scalar || b.tag() != ValueTag::Scalar)
    throw std::invalid_argument("wedge: scalar forms expected");
  return wedgeBilinear(a, b, 1, ValueTag::Scalar,
                       [](size_t, size_t, size_t) -> const Rational & {
                         static const Rational one(1);
                         return one;
                       });
}

BiGradedForm wedgeBracket(const LieAlgebra & L, const BiGradedForm & a, const BiGradedForm & b)
{
  if (a.tag() != ValueTag::G || b.tag() != ValueTag::G)
    throw std::invalid_argument("wedgeBracket: g-valued forms expected");
  return wedgeBilinear(a, b, L.dim(), ValueTag::G,
                       [&L](size_t x, size_t y, size_t c) -> const Rational & { return L.f(x, y, c); });
}

BiGradedForm wedgeAction(const DifferentialCrossedModule & cm, const BiGradedForm & a, const BiGradedForm & b)
{
  if (a.tag() != ValueTag::G || b.tag() != ValueTag::H)
    throw std::invalid_argument("wedgeAction: (g, h)-valued forms expected");
  return wedgeBilinear(a, b, cm.h().dim(), ValueTag::H,
                       [&cm](size_t x, size_t i, size_t j) -> const Rational & { return cm.rho(x, i, j); });
}

BiGradedForm wedgeMatrix(const LieAlgebra & L, const BiGradedForm & a, const BiGradedForm & b)
{
  if (a.tag() != b.tag()) throw std::invalid_argument("wedgeMatrix: tag mismatch");
  const auto & prod = L.productTensor(); // throws if it does not close
  return wedgeBilinear(a, b, L.dim(), a.tag(),
                       [&prod](size_t x, size_t y, size_t c) -> const Rational & { return prod[x][y][c]; });
}

BiGradedForm alphaPush(const DifferentialCrossedModule & cm, const BiGradedForm & b)
{
  if (b.tag() != ValueTag::H) throw std::invalid_argument("alphaPush: h-valued form expected");
  BiGradedForm r(b.registry(), ValueTag::G, cm.g().dim());
  const RatMat & alpha = cm.alphaMatrix();
  for (const auto & [k, vec] : b.components())
    for (size_t a = 0; a < cm.g().dim(); a++)
      for (size_t i = 0; i < cm.h().dim(); i++)
        if (alpha[a][i] != 0 && !vec[i].isZero()) r.addTerm(k, a, vec[i] * alpha[a][i]);
  return r;
}

namespace {

void pairRecurse(const InvariantPolynomial & P, const std::vector<const BiGradedForm *> & g_forms,
                 const BiGradedForm & h_form, size_t slot, std::vector<size_t> & idx,
                 const BiGradedForm & partial, BiGradedForm & out)
{
  if (partial.isZero()) return;
  if (slot == g_forms.size()) {
    for (size_t i = 0; i < h_form.valueDim(); i++) {
      BiGradedForm s = h_form.slice(i);
      if (s.isZero()) continue;
      // weight by the tensor entry before the final wedge
      const Rational & t = P.at(idx, i);
      if (t == 0) continue;
      out += wedge(partial, s) * t;
    }
    return;
  }
  for (size_t a = 0; a < g_forms[slot]->valueDim(); a++) {
    BiGradedForm s = g_forms[slot]->slice(a);
    if (s.isZero()) continue;
    idx[slot] = a;
    pairRecurse(P, g_forms, h_form, slot + 1, idx, wedge(partial, s), out);
  }
}

} // namespace

BiGradedForm pairForms(const InvariantPolynomial & P, const std::vector<const BiGradedForm *> & g_forms,
                       const BiGradedForm & h_form)
{
  if (g_forms.size() != P.arity()) throw std::invalid_argument("pairForms: arity mismatch");
  for (const auto * w : g_forms) {
    if (w->tag() != ValueTag::G) throw std::invalid_argument("pairForms: g-valued form expected");
    checkSameRegistry(*w, h_form);
  }
  if (h_form.tag() != ValueTag::H) throw std::invalid_argument("pairForms: h-valued form expected");
  const RegistryPtr & reg = h_form.registry();
  BiGradedForm out(reg, ValueTag::Scalar, 1);
  BiGradedForm one(reg, ValueTag::Scalar, 1);
  one.addTerm(FormKey{}, 0, Poly(reg, 1));
  std::vector<size_t> idx(P.arity(), 0);
  pairRecurse(P, g_forms, h_form, 0, idx, one, out);
  return out;
}

BiGradedForm simplexIntegrateForm(const BiGradedForm & w)
{
  const size_t k = w.registry()->numT();
  if (k == 0) return w;
  const uint32_t top = lowBits(k);
  std::vector<size_t> t_idx;
  for (size_t j = 0; j < k; j++) t_idx.push_back(w.registry()->tIndex(j));
  BiGradedForm r(w.registry(), w.tag(), w.valueDim());
  for (const auto & [key, vec] : w.components()) {
    if (key.dt != top) continue; // incomplete integration keeps the dt-top part only
    const FormKey nk{0, key.dx};
    for (size_t v = 0; v < w.valueDim(); v++)
      if (!vec[v].isZero()) r.addTerm(nk, v, vec[v].simplexIntegrate(t_idx));
  }
  return r;
}

BiGradedForm faceRestrict(const BiGradedForm & w, size_t face)
{
  const RegistryPtr & reg = w.registry();
  const size_t k = reg->numT();
  if (k == 0 || face > k) throw std::invalid_argument("faceRestrict: invalid face index");

  // target registry: same x block, t variables t1..t_{k-1}
  std::vector<std::string> tnames;
  for (size_t j = 1; j < k; j++) tnames.push_back("t" + std::to_string(j));
  auto new_reg = std::make_shared<VarRegistry>(reg->xNames(), tnames);

  std::vector<int> var_map(reg->arity(), -1);
  for (size_t i = 0; i < reg->numX(); i++) var_map[reg->xIndex(i)] = static_cast<int>(i);

  BiGradedForm r(new_reg, w.tag(), w.valueDim());

  if (face >= 1) {
    // substitute t_face = 0, drop dt_face, shift later t variables down
    const size_t jb = face - 1; // 0-based bit
    const uint32_t bit = 1u << jb;
    for (size_t j = 0; j < k; j++) {
      if (j == jb) continue;
      var_map[reg->tIndex(j)] = static_cast<int>(new_reg->tIndex(j < jb ? j : j - 1));
    }
    for (const auto & [key, vec] : w.components()) {
      if (key.dt & bit) continue;
      FormKey nk{0, key.dx};
      uint32_t dt = key.dt;
      while (dt) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(dt));
        dt &= dt - 1;
        nk.dt |= 1u << (j < jb ? j : j - 1);
      }
      for (size_t v = 0; v < w.valueDim(); v++) {
        if (vec[v].isZero()) continue;
        // keep only terms free of t_face (substitution by zero)
        Poly sub = vec[v].substitute(reg->tIndex(jb), Poly(reg));
        if (!sub.isZero()) r.addTerm(nk, v, sub.mapRegistry(new_reg, var_map));
      }
    }
    return r;
  }

  // face 0: t_1 = 1 - sum_{j>=2} t_j, dt_1 = -sum_{j>=2} dt_j, relabel down
  Poly t1_value(reg, 1);
  for (size_t j = 1; j < k; j++) t1_value += -Poly::variable(reg, reg->tIndex(j));
  for (size_t j = 1; j < k; j++) var_map[reg->tIndex(j)] = static_cast<int>(new_reg->tIndex(j - 1));

  for (const auto & [key, vec] : w.components()) {
    std::vector<std::pair<FormKey, int>> targets; // (new key, sign)
    if (!(key.dt & 1u)) {
      FormKey nk{key.dt >> 1, key.dx};
      targets.emplace_back(nk, 1);
    } else {
      const uint32_t rest = key.dt & ~1u;
      for (size_t j = 1; j < k; j++) {
        const uint32_t bit = 1u << j;
        if (rest & bit) continue;
        int sign = -shuffleSign(static_cast<uint32_t>(bit), rest); // insert dt_j from the left
        FormKey nk{(rest | bit) >> 1, key.dx};
        targets.emplace_back(nk, sign);
      }
    }
    if (targets.empty()) continue;
    for (size_t v = 0; v < w.valueDim(); v++) {
      if (vec[v].isZero()) continue;
      Poly sub = vec[v].substitute(reg->tIndex(0), t1_value);
      if (sub.isZero()) continue;
      Poly mapped = sub.mapRegistry(new_reg, var_map);
      for (const auto & [nk, sign] : targets) r.addTerm(nk, v, sign > 0 ? mapped : -mapped);
    }
  }
  return r;
}

} // namespace gauge2
