#include "gauge2/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gauge2 {

namespace {

std::string readWholeFile(const std::string & path)
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// One scenario line split into tokens with recorded column positions.
struct TokenLine
{
  size_t line_no = 0;
  std::vector<std::string> tokens;
  std::vector<size_t> cols; // 1-based column of each token
};

std::vector<TokenLine> tokenize(const std::string & text)
{
  std::vector<TokenLine> lines;
  std::istringstream in(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    line_no++;
    TokenLine tl;
    tl.line_no = line_no;
    size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) { i++; continue; }
      if (raw[i] == '#') break;
      size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])) && raw[i] != '#') i++;
      tl.tokens.push_back(raw.substr(start, i - start));
      tl.cols.push_back(start + 1);
    }
    if (!tl.tokens.empty()) lines.push_back(std::move(tl));
  }
  return lines;
}

[[noreturn]] void fail(const TokenLine & tl, size_t tok, const std::string & msg)
{
  size_t col = tok < tl.cols.size() ? tl.cols[tok] : (tl.cols.empty() ? 1 : tl.cols.back() + tl.tokens.back().size());
  throw ScenarioError(tl.line_no, col, msg);
}

const std::string & need(const TokenLine & tl, size_t tok, const std::string & what)
{
  if (tok >= tl.tokens.size()) fail(tl, tok, "expected " + what);
  return tl.tokens[tok];
}

long needInt(const TokenLine & tl, size_t tok, const std::string & what)
{
  const std::string & s = need(tl, tok, what);
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("");
    return v;
  } catch (...) {
    fail(tl, tok, what + " must be an integer, got '" + s + "'");
  }
}

Rational parseRational(const std::string & s)
{
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

const std::vector<std::string> kSuites = {"validate",  "bianchi", "closedness",       "chern-weil",
                                          "chsas",     "triangle", "cartan",          "descent",
                                          "gauge",     "graded-relations", "stokes-selfcal", "all"};

} // namespace

ScenarioError::ScenarioError(size_t line, size_t col, const std::string & msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
      m_line(line), m_col(col)
{
}

Scenario parseScenario(const std::string & text)
{
  Scenario s;
  s.source_text = text;
  s.descent_p = {0, 1, 2};
  bool any_random = false;

  for (const TokenLine & tl : tokenize(text)) {
    const std::string & kw = tl.tokens[0];
    if (kw == "algebra") {
      const std::string & name = need(tl, 1, "algebra name");
      if (name == "gl") {
        s.algebra_name = "gl";
        s.algebra_param = static_cast<size_t>(needInt(tl, 2, "gl size"));
        if (s.algebra_param < 1) fail(tl, 2, "gl size must be positive");
      } else if (name == "so3" || name == "poincare2") {
        s.algebra_name = name;
      } else if (name == "file") {
        s.algebra_name = "file";
        s.algebra_file = need(tl, 2, "algebra file path");
      } else {
        fail(tl, 1, "unknown algebra '" + name + "' (expected gl, so3, poincare2, or file)");
      }
    } else if (kw == "pairing") {
      const std::string & name = need(tl, 1, "pairing kind");
      if (name == "symtrace") {
        const std::string & arg = need(tl, 2, "pairing arity n=<int>");
        if (arg.rfind("n=", 0) != 0) fail(tl, 2, "expected n=<int>, got '" + arg + "'");
        try {
          s.pairing_n = static_cast<size_t>(std::stoul(arg.substr(2)));
        } catch (...) {
          fail(tl, 2, "bad pairing arity '" + arg + "'");
        }
        if (s.pairing_n < 1) fail(tl, 2, "pairing arity must be >= 1");
        s.pairing_name = "symtrace";
      } else if (name == "file") {
        s.pairing_name = "file";
        s.pairing_file = need(tl, 2, "pairing file path");
      } else {
        fail(tl, 1, "unknown pairing '" + name + "' (expected symtrace or file)");
      }
    } else if (kw == "dim") {
      long v = needInt(tl, 1, "manifold dimension");
      if (v < 1 || v > 12) fail(tl, 1, "dim must be in 1..12");
      s.dim = static_cast<size_t>(v);
    } else if (kw == "degree") {
      long v = needInt(tl, 1, "coefficient degree bound");
      if (v < 0) fail(tl, 1, "degree must be >= 0");
      s.degree = static_cast<int>(v);
    } else if (kw == "seed") {
      s.seed = static_cast<uint64_t>(needInt(tl, 1, "seed"));
    } else if (kw == "connection") {
      ConnectionSpec cs;
      cs.name = need(tl, 1, "connection identifier");
      for (const auto & prev : s.connections)
        if (prev.name == cs.name) fail(tl, 1, "duplicate connection identifier '" + cs.name + "'");
      const std::string & kind = need(tl, 2, "'random' or 'file'");
      if (kind == "random") {
        cs.random = true;
        cs.degree = s.degree;
        if (tl.tokens.size() > 3) {
          const std::string & opt = tl.tokens[3];
          if (opt.rfind("degree=", 0) != 0) fail(tl, 3, "unknown option '" + opt + "' (expected degree=<int>)");
          try {
            cs.degree = std::stoi(opt.substr(7));
          } catch (...) {
            fail(tl, 3, "bad degree option '" + opt + "'");
          }
        }
        any_random = true;
      } else if (kind == "file") {
        cs.random = false;
        cs.path = need(tl, 3, "connection file path");
      } else {
        fail(tl, 2, "expected 'random' or 'file', got '" + kind + "'");
      }
      s.connections.push_back(std::move(cs));
    } else if (kw == "suite") {
      const std::string & name = need(tl, 1, "suite name");
      bool known = false;
      for (const auto & k : kSuites) known = known || k == name;
      if (!known) fail(tl, 1, "unknown suite '" + name + "'");
      s.suites.push_back(name);
    } else if (kw == "descent-p") {
      s.descent_p.clear();
      for (size_t i = 1; i < tl.tokens.size(); i++) {
        long v = needInt(tl, i, "descent level");
        if (v < 0) fail(tl, i, "descent level must be >= 0");
        s.descent_p.push_back(static_cast<size_t>(v));
      }
      if (s.descent_p.empty()) fail(tl, 1, "expected at least one descent level");
    } else {
      fail(tl, 0, "unknown directive '" + kw + "'");
    }
  }

  if (any_random && !s.seed)
    throw ScenarioError(1, 1, "seed required: scenario uses randomized connections");
  s.low_dim_warning = s.dim < 2 * s.pairing_n + 3;
  return s;
}

Scenario loadScenarioFile(const std::string & path)
{
  Scenario s = parseScenario(readWholeFile(path));
  // referenced files resolve relative to the scenario file's directory
  const auto slash = path.find_last_of('/');
  if (slash != std::string::npos) {
    const std::string dir = path.substr(0, slash + 1);
    auto anchor = [&dir](std::string & p) {
      if (!p.empty() && p[0] != '/') p = dir + p;
    };
    anchor(s.algebra_file);
    anchor(s.pairing_file);
    for (auto & c : s.connections) anchor(c.path);
  }
  return s;
}

TwoConnection loadConnectionFile(const std::string & path, const RegistryPtr & reg,
                                 const DifferentialCrossedModule & cm)
{
  const size_t m = reg->numX();
  BiGradedForm A(reg, ValueTag::G, cm.g().dim());
  BiGradedForm B(reg, ValueTag::H, cm.h().dim());
  for (const TokenLine & tl : tokenize(readWholeFile(path))) {
    const std::string & kw = tl.tokens[0];
    const bool isA = kw == "A";
    if (!isA && kw != "B") fail(tl, 0, "expected 'A' or 'B' entry");
    const size_t dim_v = isA ? cm.g().dim() : cm.h().dim();
    size_t tok = 1;
    long comp = needInt(tl, tok++, "value component index");
    if (comp < 1 || static_cast<size_t>(comp) > dim_v) fail(tl, tok - 1, "component index out of range");
    FormKey key;
    const size_t num_dx = isA ? 1 : 2;
    for (size_t d = 0; d < num_dx; d++) {
      long i = needInt(tl, tok++, "dx index");
      if (i < 1 || static_cast<size_t>(i) > m) fail(tl, tok - 1, "dx index out of range");
      uint32_t bit = 1u << (i - 1);
      if (key.dx & bit) fail(tl, tok - 1, "repeated dx index");
      key.dx |= bit;
    }
    const std::string & cs = need(tl, tok++, "coefficient");
    Rational coeff;
    try {
      coeff = parseRational(cs);
    } catch (...) {
      fail(tl, tok - 1, "bad rational '" + cs + "'");
    }
    Poly::Exponents exp(reg->arity(), 0);
    for (size_t i = 0; i < m; i++) {
      long e = needInt(tl, tok++, "exponent");
      if (e < 0) fail(tl, tok - 1, "negative exponent");
      exp[reg->xIndex(i)] = static_cast<int>(e);
    }
    if (tok != tl.tokens.size()) fail(tl, tok, "trailing tokens");
    (isA ? A : B).addTerm(key, static_cast<size_t>(comp - 1), Poly::monomial(reg, exp, coeff));
  }
  return {std::move(A), std::move(B)};
}

InvariantPolynomial loadInvariantPolynomialFile(const std::string & path,
                                                const DifferentialCrossedModule & cm)
{
  const auto lines = tokenize(readWholeFile(path));
  if (lines.empty() || lines[0].tokens[0] != "arity")
    throw std::runtime_error(path + ": pairing file must start with 'arity <n>'");
  const size_t n = static_cast<size_t>(needInt(lines[0], 1, "arity"));
  const size_t dg = cm.g().dim(), dh = cm.h().dim();
  size_t flat = dh;
  for (size_t i = 0; i < n; i++) flat *= dg;
  InvariantPolynomial P(n, dg, dh, std::vector<Rational>(flat, Rational(0)));
  for (size_t l = 1; l < lines.size(); l++) {
    const TokenLine & tl = lines[l];
    if (tl.tokens[0] != "entry") fail(tl, 0, "expected 'entry'");
    std::vector<size_t> g_idx(n);
    size_t tok = 1;
    for (size_t i = 0; i < n; i++) {
      long a = needInt(tl, tok++, "g index");
      if (a < 1 || static_cast<size_t>(a) > dg) fail(tl, tok - 1, "g index out of range");
      g_idx[i] = static_cast<size_t>(a - 1);
    }
    long h = needInt(tl, tok++, "h index");
    if (h < 1 || static_cast<size_t>(h) > dh) fail(tl, tok - 1, "h index out of range");
    Rational v;
    try {
      v = parseRational(need(tl, tok, "value"));
    } catch (...) {
      fail(tl, tok, "bad rational value");
    }
    // symmetrize over the g-slots so sy4 holds by construction
    std::vector<size_t> perm = g_idx;
    std::sort(perm.begin(), perm.end());
    std::vector<std::vector<size_t>> orbit;
    do {
      orbit.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rational share = v / Rational(static_cast<long>(orbit.size()));
    for (const auto & p : orbit) P.at(p, static_cast<size_t>(h - 1)) += share;
  }
  return P;
}

} // namespace gauge2
