// Sparse multivariate polynomial layer: grlex term maps, parser/formatter,
// homogenization, derivatives, substitution, Sylvester/Bareiss resultants,
// exact division. All arithmetic is exact over the field towers.
#include "recipdim/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace recipdim {

namespace {

int exp_total(const ExpVec& e) { return std::accumulate(e.begin(), e.end(), 0); }

void check_same_ring(const MultiPoly& a, const MultiPoly& b) {
  require_internal(a.valid() && b.valid(), "operation on unset polynomial");
  if (!field_eq(a.field(), b.field()) || a.vars() != b.vars())
    fail(ErrorCode::DescriptorMismatch,
         "polynomials live in different rings: " + poly_format(a) + " vs " +
             poly_format(b));
}

}  // namespace

bool GrlexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = exp_total(a), db = exp_total(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::zero(const Field& k, std::vector<std::string> vars) {
  MultiPoly f;
  f.k_ = k;
  f.vars_ = std::move(vars);
  return f;
}

MultiPoly MultiPoly::constant(const Field& k, std::vector<std::string> vars,
                              const Value& c) {
  MultiPoly f = zero(k, std::move(vars));
  f.add_term(ExpVec(f.vars_.size(), 0), c);
  return f;
}

MultiPoly MultiPoly::variable(const Field& k, std::vector<std::string> vars,
                              const std::string& name) {
  MultiPoly f = zero(k, std::move(vars));
  int i = f.var_index(name);
  if (i < 0) fail(ErrorCode::UnknownVariable, "variable '" + name + "'");
  ExpVec e(f.vars_.size(), 0);
  e[i] = 1;
  f.add_term(e, Value::one(k));
  return f;
}

MultiPoly MultiPoly::monomial(const Field& k, std::vector<std::string> vars,
                              ExpVec exp, const Value& c) {
  MultiPoly f = zero(k, std::move(vars));
  require_internal(exp.size() == f.vars_.size(),
                   "monomial exponent vector length mismatch");
  f.add_term(exp, c);
  return f;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

Value MultiPoly::constant_value() const {
  require_internal(is_constant(), "constant_value on nonconstant polynomial");
  if (terms_.empty()) return Value::zero(k_);
  return terms_.begin()->second;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return exp_total(terms_.begin()->first);  // leading term comes first
}

int MultiPoly::degree_in(const std::string& var) const {
  int i = var_index(var);
  if (i < 0) fail(ErrorCode::UnknownVariable, "variable '" + var + "'");
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

int MultiPoly::var_index(const std::string& var) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == var) return static_cast<int>(i);
  return -1;
}

Value MultiPoly::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Value::zero(k_) : it->second;
}

std::vector<std::string> MultiPoly::occurring_vars() const {
  std::vector<std::string> out;
  for (size_t i = 0; i < vars_.size(); ++i) {
    bool occurs = false;
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        occurs = true;
        break;
      }
    if (occurs) out.push_back(vars_[i]);
  }
  return out;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = exp_total(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (exp_total(e) != d) return false;
  return true;
}

void MultiPoly::add_term(const ExpVec& e, const Value& c) {
  require_internal(e.size() == vars_.size(), "exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  Value s = fe_add(it->second, c);
  if (s.is_zero())
    terms_.erase(it);
  else
    it->second = s;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same_ring(*this, o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_same_ring(*this, o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, fe_neg(c));
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_ring(*this, o);
  MultiPoly r = zero(k_, vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      ExpVec e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, fe_mul(ca, cb));
    }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = zero(k_, vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, fe_neg(c));
  return r;
}

MultiPoly MultiPoly::scaled(const Value& c) const {
  MultiPoly r = zero(k_, vars_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, fe_mul(v, c));
  return r;
}

MultiPoly MultiPoly::pow(int e) const {
  require_internal(e >= 0, "negative polynomial power");
  MultiPoly r = constant(k_, vars_, Value::one(k_));
  MultiPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  check_same_ring(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin(), jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (it->first != jt->first || !fe_eq(it->second, jt->second)) return false;
  return true;
}

// --- parser ------------------------------------------------------------------

namespace {

struct Parser {
  const std::string& text;
  const std::vector<std::string>& vars;
  const Field& k;
  size_t pos = 0;

  [[noreturn]] void syntax(size_t at, const std::string& what) {
    fail(ErrorCode::SyntaxError,
         what + " at position " + std::to_string(at + 1) + " in \"" + text +
             "\"");
  }

  void skip_ws() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool at_end() {
    skip_ws();
    return pos == text.size();
  }

  MultiPoly parse() {
    MultiPoly r = parse_expr();
    if (!at_end()) syntax(pos, "unexpected character '" + std::string(1, text[pos]) + "'");
    return r;
  }

  MultiPoly parse_expr() {
    MultiPoly r = parse_term();
    while (true) {
      skip_ws();
      if (peek_is('+')) {
        ++pos;
        r = r + parse_term();
      } else if (peek_is('-')) {
        ++pos;
        r = r - parse_term();
      } else {
        return r;
      }
    }
  }

  MultiPoly parse_term() {
    MultiPoly r = parse_factor();
    while (peek_is('*')) {
      ++pos;
      r = r * parse_factor();
    }
    return r;
  }

  MultiPoly parse_factor() {
    skip_ws();
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      bool neg = text[pos] == '-';
      ++pos;
      MultiPoly inner = parse_factor();
      return neg ? -inner : inner;
    }
    MultiPoly base = parse_primary();
    if (peek_is('^')) {
      ++pos;
      skip_ws();
      size_t at = pos;
      BigInt e = parse_integer_literal();
      if (e > 4096) syntax(at, "exponent too large");
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  BigInt parse_integer_literal() {
    skip_ws();
    size_t at = pos;
    if (pos == text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos])))
      syntax(at, "expected integer");
    BigInt n = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      n = n * 10 + (text[pos] - '0');
      ++pos;
    }
    return n;
  }

  MultiPoly parse_primary() {
    skip_ws();
    if (pos == text.size()) syntax(pos, "unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      MultiPoly inner = parse_expr();
      if (!peek_is(')')) syntax(pos, "expected ')'");
      ++pos;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt n = parse_integer_literal();
      // Implicit multiplication like "2X" is rejected: the next token must
      // be an operator, ')' or end.
      skip_ws();
      if (pos < text.size() &&
          (std::isalpha(static_cast<unsigned char>(text[pos])) ||
           text[pos] == '_' || text[pos] == '('))
        syntax(pos, "implicit multiplication not allowed; use '*'");
      return MultiPoly::constant(k, vars, Value::integer(k, n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t at = pos;
      std::string name;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_')) {
        name += text[pos];
        ++pos;
      }
      for (const auto& v : vars)
        if (v == name) {
          skip_ws();
          if (pos < text.size() &&
              (std::isalpha(static_cast<unsigned char>(text[pos])) ||
               text[pos] == '_' ||
               std::isdigit(static_cast<unsigned char>(text[pos])) ||
               text[pos] == '('))
            syntax(pos, "implicit multiplication not allowed; use '*'");
          return MultiPoly::variable(k, vars, name);
        }
      fail(ErrorCode::UnknownVariable,
           "variable '" + name + "' at position " + std::to_string(at + 1) +
               " is not declared");
    }
    syntax(pos, "unexpected character '" + std::string(1, c) + "'");
  }
};

}  // namespace

MultiPoly poly_parse(const std::string& text,
                     const std::vector<std::string>& vars, const Field& k) {
  Parser p{text, vars, k};
  return p.parse();
}

// --- formatting --------------------------------------------------------------

namespace {

// Renders one coefficient together with the sign/joiner that precedes it.
// `leading` suppresses the '+' for the first term.
void format_coeff(std::ostringstream& out, const Value& c, bool has_monomial,
                  bool leading) {
  const Field& k = c.field();
  bool composite = k->kind == FieldKind::Extension ||
                   k->kind == FieldKind::RationalFunctions;
  if (composite) {
    if (!leading) out << '+';
    std::string s = fe_to_string(c);
    if (!has_monomial) {
      out << '(' << s << ')';
    } else if (c.is_one()) {
      // elide unit coefficient
    } else {
      out << '(' << s << ")*";
    }
    return;
  }
  // Rationals and prime fields: extract the sign for Q; GF(p) residues are
  // already canonical in [0, p).
  bool negative = false;
  Value a = c;
  if (k->kind == FieldKind::Rationals && fe_cmp(c, Value::zero(k)) < 0) {
    negative = true;
    a = fe_neg(c);
  }
  out << (negative ? "-" : (leading ? "" : "+"));
  if (!has_monomial) {
    out << fe_to_string(a);
    return;
  }
  if (a.is_one()) return;  // elide unit coefficient
  std::string s = fe_to_string(a);
  bool needs_parens = s.find('/') != std::string::npos;
  if (needs_parens)
    out << '(' << s << ")*";
  else
    out << s << '*';
}

}  // namespace

std::string poly_format(const MultiPoly& f) {
  require_internal(f.valid(), "format of unset polynomial");
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool leading = true;
  for (const auto& [e, c] : f.terms()) {
    std::string mon;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mon.empty()) mon += '*';
      mon += f.vars()[i];
      if (e[i] > 1) mon += '^' + std::to_string(e[i]);
    }
    format_coeff(out, c, !mon.empty(), leading);
    out << mon;
    leading = false;
  }
  return out.str();
}

// --- structural operations ---------------------------------------------------

HomogeneousForm leading_form(const MultiPoly& f) {
  if (f.is_zero())
    fail(ErrorCode::ZeroPolynomial, "leading form of the zero polynomial");
  int d = f.total_degree();
  MultiPoly r = MultiPoly::zero(f.field(), f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (exp_total(e) == d) r.add_term(e, c);
  }
  return HomogeneousForm{r, d};
}

HomogeneousForm homogenize(const MultiPoly& f, const std::string& newvar) {
  if (f.is_zero())
    fail(ErrorCode::ZeroPolynomial, "homogenization of the zero polynomial");
  if (f.var_index(newvar) >= 0)
    fail(ErrorCode::VariableClash,
         "homogenization variable '" + newvar + "' is already declared");
  int d = f.total_degree();
  std::vector<std::string> nv;
  nv.reserve(f.vars().size() + 1);
  nv.push_back(newvar);
  nv.insert(nv.end(), f.vars().begin(), f.vars().end());
  MultiPoly r = MultiPoly::zero(f.field(), nv);
  for (const auto& [e, c] : f.terms()) {
    ExpVec ne(e.size() + 1);
    ne[0] = d - exp_total(e);
    std::copy(e.begin(), e.end(), ne.begin() + 1);
    r.add_term(ne, c);
  }
  return HomogeneousForm{r, d};
}

MultiPoly dehomogenize(const MultiPoly& f, const std::string& var) {
  int i = f.var_index(var);
  if (i < 0)
    fail(ErrorCode::VariableClash,
         "dehomogenization variable '" + var + "' is not declared");
  std::vector<std::string> nv = f.vars();
  nv.erase(nv.begin() + i);
  MultiPoly r = MultiPoly::zero(f.field(), nv);
  for (const auto& [e, c] : f.terms()) {
    ExpVec ne = e;
    ne.erase(ne.begin() + i);
    r.add_term(ne, c);
  }
  return r;
}

MultiPoly partial_derivative(const MultiPoly& f, const std::string& var) {
  int i = f.var_index(var);
  if (i < 0) fail(ErrorCode::UnknownVariable, "variable '" + var + "'");
  MultiPoly r = MultiPoly::zero(f.field(), f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    ExpVec ne = e;
    ne[i] -= 1;
    r.add_term(ne, fe_mul(c, Value::integer(f.field(), e[i])));
  }
  return r;
}

MultiPoly substitute(const MultiPoly& f, const std::string& var,
                     const MultiPoly& image) {
  int i = f.var_index(var);
  if (i < 0) fail(ErrorCode::UnknownVariable, "variable '" + var + "'");
  check_same_ring(f, image);
  // Cache image powers up to the needed degree.
  int d = f.degree_in(var);
  std::vector<MultiPoly> pw;
  pw.reserve(d + 1);
  pw.push_back(MultiPoly::constant(f.field(), f.vars(), Value::one(f.field())));
  for (int j = 1; j <= d; ++j) pw.push_back(pw.back() * image);
  MultiPoly r = MultiPoly::zero(f.field(), f.vars());
  for (const auto& [e, c] : f.terms()) {
    ExpVec ne = e;
    ne[i] = 0;
    r = r + pw[e[i]].scaled(c) * MultiPoly::monomial(f.field(), f.vars(), ne,
                                                     Value::one(f.field()));
  }
  return r;
}

MultiPoly substitute_all(const MultiPoly& f,
                         const std::vector<MultiPoly>& images) {
  require_internal(images.size() == f.vars().size(),
                   "substitute_all image count mismatch");
  for (const auto& g : images) check_same_ring(f, g);
  MultiPoly r = MultiPoly::zero(f.field(), f.vars());
  for (const auto& [e, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(f.field(), f.vars(), c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = t * images[i].pow(e[i]);
    r = r + t;
  }
  return r;
}

Value poly_eval(const MultiPoly& f, const std::vector<Value>& point) {
  require_internal(point.size() == f.vars().size(),
                   "evaluation point arity mismatch");
  Field target = point.empty() ? f.field() : point[0].field();
  for (const auto& v : point)
    if (!field_eq(v.field(), target))
      fail(ErrorCode::DescriptorMismatch,
           "evaluation point has mixed coordinate fields");
  // per-coordinate power tables up to the occurring exponents
  std::vector<int> maxe(point.size(), 0);
  for (const auto& [e, c] : f.terms())
    for (size_t i = 0; i < e.size(); ++i) maxe[i] = std::max(maxe[i], e[i]);
  std::vector<std::vector<Value>> pows(point.size());
  for (size_t i = 0; i < point.size(); ++i) {
    pows[i].reserve(maxe[i] + 1);
    pows[i].push_back(Value::one(target));
    for (int j = 1; j <= maxe[i]; ++j)
      pows[i].push_back(fe_mul(pows[i].back(), point[i]));
  }
  Value acc = Value::zero(target);
  for (const auto& [e, c] : f.terms()) {
    Value t = embed(target, c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t = fe_mul(t, pows[i][e[i]]);
    acc = fe_add(acc, t);
  }
  return acc;
}

MultiPoly coeff_in(const MultiPoly& f, const std::string& var, int k) {
  int i = f.var_index(var);
  if (i < 0) fail(ErrorCode::UnknownVariable, "variable '" + var + "'");
  MultiPoly r = MultiPoly::zero(f.field(), f.vars());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] != k) continue;
    ExpVec ne = e;
    ne[i] = 0;
    r.add_term(ne, c);
  }
  return r;
}

std::optional<MultiPoly> poly_divexact(const MultiPoly& f,
                                       const MultiPoly& g) {
  check_same_ring(f, g);
  require_internal(!g.is_zero(), "division by the zero polynomial");
  MultiPoly q = MultiPoly::zero(f.field(), f.vars());
  MultiPoly r = f;
  const auto& glead = *g.terms().begin();
  while (!r.is_zero()) {
    const auto& rlead = *r.terms().begin();
    // If g | r then the leading terms divide in any monomial order, so a
    // failed leading-term division certifies indivisibility.
    ExpVec qe(rlead.first.size());
    bool ok = true;
    for (size_t i = 0; i < qe.size(); ++i) {
      qe[i] = rlead.first[i] - glead.first[i];
      if (qe[i] < 0) {
        ok = false;
        break;
      }
    }
    if (!ok) return std::nullopt;
    Value qc = fe_div(rlead.second, glead.second);
    MultiPoly qterm = MultiPoly::monomial(f.field(), f.vars(), qe, qc);
    q = q + qterm;
    r = r - qterm * g;
  }
  return q;
}

bool poly_divides(const MultiPoly& g, const MultiPoly& f) {
  if (f.is_zero()) return true;
  if (g.is_zero()) return false;
  return poly_divexact(f, g).has_value();
}

MultiPoly poly_embed(const MultiPoly& f, const Field& target) {
  MultiPoly r = MultiPoly::zero(target, f.vars());
  for (const auto& [e, c] : f.terms()) r.add_term(e, embed(target, c));
  return r;
}

MultiPoly poly_change_vars(const MultiPoly& f,
                           const std::vector<std::string>& newvars) {
  MultiPoly r = MultiPoly::zero(f.field(), newvars);
  std::vector<int> slot(f.vars().size(), -1);
  for (size_t i = 0; i < f.vars().size(); ++i) {
    for (size_t j = 0; j < newvars.size(); ++j)
      if (newvars[j] == f.vars()[i]) slot[i] = static_cast<int>(j);
  }
  for (const auto& [e, c] : f.terms()) {
    ExpVec ne(newvars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (slot[i] < 0)
        fail(ErrorCode::UnknownVariable,
             "variable '" + f.vars()[i] + "' missing from the new list");
      ne[slot[i]] = e[i];
    }
    r.add_term(ne, c);
  }
  return r;
}

UniPoly to_unipoly(const MultiPoly& f, const std::string& var) {
  int i = f.var_index(var);
  if (i < 0) fail(ErrorCode::UnknownVariable, "variable '" + var + "'");
  std::vector<Value> coeffs(static_cast<size_t>(f.degree_in(var)) + 1,
                            Value::zero(f.field()));
  for (const auto& [e, c] : f.terms()) {
    for (size_t j = 0; j < e.size(); ++j)
      if (static_cast<int>(j) != i && e[j] != 0)
        fail(ErrorCode::UnsupportedShape,
             "polynomial is not univariate in '" + var + "': " +
                 poly_format(f));
    coeffs[e[i]] = c;
  }
  return up_from_coeffs(std::move(coeffs));
}

MultiPoly from_unipoly(const UniPoly& u, const Field& k,
                       const std::vector<std::string>& vars,
                       const std::string& var) {
  MultiPoly r = MultiPoly::zero(k, vars);
  int i = r.var_index(var);
  if (i < 0) fail(ErrorCode::UnknownVariable, "variable '" + var + "'");
  for (size_t j = 0; j < u.size(); ++j) {
    if (u[j].is_zero()) continue;
    ExpVec e(vars.size(), 0);
    e[i] = static_cast<int>(j);
    r.add_term(e, u[j]);
  }
  return r;
}

// --- resultant ---------------------------------------------------------------

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g,
                    const std::string& var) {
  check_same_ring(f, g);
  if (f.is_zero() || g.is_zero())
    fail(ErrorCode::ZeroPolynomial, "resultant with a zero operand");
  int m = f.degree_in(var), n = g.degree_in(var);
  if (m == 0 && n == 0)
    fail(ErrorCode::DegreeZeroInVariable,
         "both operands have degree 0 in '" + var + "'");
  if (m == 0) return f.pow(n);
  if (n == 0) return g.pow(m);

  std::vector<MultiPoly> fc, gc;
  for (int i = 0; i <= m; ++i) fc.push_back(coeff_in(f, var, i));
  for (int i = 0; i <= n; ++i) gc.push_back(coeff_in(g, var, i));

  // Sylvester matrix: n shifted rows of f's coefficients, then m of g's,
  // columns indexed by descending powers of var.
  int sz = m + n;
  MultiPoly z = MultiPoly::zero(f.field(), f.vars());
  std::vector<std::vector<MultiPoly>> a(sz, std::vector<MultiPoly>(sz, z));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) a[r][r + i] = fc[m - i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) a[n + r][r + i] = gc[n - i];

  // Fraction-free (Bareiss) elimination: every division is exact.
  MultiPoly prev = MultiPoly::constant(f.field(), f.vars(),
                                       Value::one(f.field()));
  int sign = 1;
  for (int k = 0; k < sz - 1; ++k) {
    if (a[k][k].is_zero()) {
      int swap = -1;
      for (int i = k + 1; i < sz; ++i)
        if (!a[i][k].is_zero()) {
          swap = i;
          break;
        }
      if (swap < 0) return z;  // singular: resultant vanishes identically
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (int i = k + 1; i < sz; ++i) {
      for (int j = k + 1; j < sz; ++j) {
        MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = poly_divexact(num, prev);
        require_internal(q.has_value(), "fraction-free elimination division");
        a[i][j] = *q;
      }
      a[i][k] = z;
    }
    prev = a[k][k];
  }
  MultiPoly det = a[sz - 1][sz - 1];
  return sign < 0 ? -det : det;
}

}  // namespace recipdim
