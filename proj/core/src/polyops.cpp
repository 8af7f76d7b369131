// Shape-restricted gcd/squarefree helpers, univariate and binary-form
// factorization over the tower fields, and exact quadratic-form Gram data
// with congruence diagonalization (characteristic != 2).
#include "recipdim/polyops.hpp"

#include <algorithm>

namespace recipdim {

namespace {

// Occurring variables of f and g combined, in declared order.
std::vector<std::string> union_vars(const MultiPoly& f, const MultiPoly& g) {
  std::vector<std::string> u = f.occurring_vars();
  for (const auto& v : g.occurring_vars())
    if (std::find(u.begin(), u.end(), v) == u.end()) u.push_back(v);
  std::sort(u.begin(), u.end(), [&](const std::string& a, const std::string& b) {
    return f.var_index(a) < f.var_index(b);
  });
  return u;
}

// Minimal exponent of variable #i across the terms of a nonzero polynomial.
int min_exp(const MultiPoly& f, int i) {
  int m = -1;
  for (const auto& [e, c] : f.terms()) m = (m < 0) ? e[i] : std::min(m, e[i]);
  return std::max(m, 0);
}

struct BinarySplit {
  int a = 0, b = 0;     // powers of u and v divided out
  UniPoly core;         // dehomogenized residual, nonzero constant term
};

// Decompose a nonzero homogeneous form in the two variables u, v as
// u^a * v^b * core(u/v) * v^(deg core).
BinarySplit split_binary(const MultiPoly& f, const std::string& u,
                         const std::string& v) {
  BinarySplit s;
  int iu = f.var_index(u), iv = f.var_index(v);
  s.a = min_exp(f, iu);
  s.b = min_exp(f, iv);
  int d = f.total_degree() - s.a - s.b;
  std::vector<Value> coeffs(static_cast<size_t>(d) + 1, Value::zero(f.field()));
  for (const auto& [e, c] : f.terms()) coeffs[e[iu] - s.a] = c;
  s.core = up_from_coeffs(std::move(coeffs));
  return s;
}

// Rebuild u^a * v^b * (core rehomogenized in u, v) over the variable list.
MultiPoly assemble_binary(const Field& k, const std::vector<std::string>& vars,
                          const std::string& u, const std::string& v, int a,
                          int b, const UniPoly& core) {
  MultiPoly r = MultiPoly::zero(k, vars);
  int iu = r.var_index(u), iv = r.var_index(v);
  int d = up_deg(core);
  for (int i = 0; i <= d; ++i) {
    if (core[i].is_zero()) continue;
    ExpVec e(vars.size(), 0);
    e[iu] = a + i;
    e[iv] = b + (d - i);
    r.add_term(e, core[i]);
  }
  return r;
}

// Rehomogenize a univariate polynomial with nonzero constant term into a
// binary form of the same degree.
MultiPoly rehomogenize(const UniPoly& h, const Field& k,
                       const std::vector<std::string>& vars,
                       const std::string& u, const std::string& v) {
  return assemble_binary(k, vars, u, v, 0, 0, h);
}

enum class PairShape { Constants, Univariate, Binary };

// Classify the shape the gcd/squarefree operations support. `u`/`v` receive
// the occurring variables.
PairShape classify_shape(const MultiPoly& f, const MultiPoly& g,
                         std::string& u, std::string& v) {
  std::vector<std::string> occ = union_vars(f, g);
  if (occ.empty()) return PairShape::Constants;
  if (occ.size() == 1) {
    u = occ[0];
    return PairShape::Univariate;
  }
  if (occ.size() == 2 && f.is_homogeneous() && g.is_homogeneous()) {
    u = occ[0];
    v = occ[1];
    return PairShape::Binary;
  }
  fail(ErrorCode::UnsupportedShape,
       "gcd/squarefree need univariate or binary homogeneous input, got " +
           poly_format(f) + " and " + poly_format(g));
}

MultiPoly monic_in_grlex(const MultiPoly& f) {
  if (f.is_zero()) return f;
  return f.scaled(fe_inv(f.terms().begin()->second));
}

}  // namespace

MultiPoly gcd_poly(const MultiPoly& f, const MultiPoly& g) {
  require_internal(f.valid() && g.valid(), "gcd of unset polynomial");
  if (f.is_zero() && g.is_zero()) return f;
  if (f.is_zero()) return monic_in_grlex(g);
  if (g.is_zero()) return monic_in_grlex(f);
  std::string u, v;
  switch (classify_shape(f, g, u, v)) {
    case PairShape::Constants:
      return MultiPoly::constant(f.field(), f.vars(), Value::one(f.field()));
    case PairShape::Univariate: {
      UniPoly d = up_gcd(to_unipoly(f, u), to_unipoly(g, u));
      return from_unipoly(d, f.field(), f.vars(), u);
    }
    case PairShape::Binary: {
      BinarySplit sf = split_binary(f, u, v);
      BinarySplit sg = split_binary(g, u, v);
      UniPoly core = up_gcd(sf.core, sg.core);
      return assemble_binary(f.field(), f.vars(), u, v,
                             std::min(sf.a, sg.a), std::min(sf.b, sg.b), core);
    }
  }
  fail(ErrorCode::Internal, "unreachable shape");
}

MultiPoly reduce_mod_principal(const MultiPoly& f, const MultiPoly& g) {
  require_internal(f.valid() && g.valid(), "reduction of unset polynomial");
  require_internal(!g.is_zero(), "reduction modulo the zero polynomial");
  auto lead = [](const MultiPoly& p) { return *p.terms().begin(); };
  auto divides = [](const ExpVec& a, const ExpVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  auto [ge, gc] = lead(g);
  MultiPoly h = f;
  MultiPoly r = MultiPoly::zero(f.field(), f.vars());
  while (!h.is_zero()) {
    auto [he, hc] = lead(h);
    if (divides(ge, he)) {
      ExpVec q(he.size());
      for (size_t i = 0; i < he.size(); ++i) q[i] = he[i] - ge[i];
      MultiPoly m = MultiPoly::monomial(f.field(), f.vars(), q, fe_div(hc, gc));
      h = h - m * g;
    } else {
      r.add_term(he, hc);
      h.add_term(he, fe_neg(hc));
    }
  }
  return r;
}

MultiPoly squarefree_part(const MultiPoly& f) {
  require_internal(f.valid(), "squarefree part of unset polynomial");
  if (f.is_zero())
    fail(ErrorCode::ZeroPolynomial, "squarefree part of the zero polynomial");
  std::string u, v;
  switch (classify_shape(f, f, u, v)) {
    case PairShape::Constants:
      return MultiPoly::constant(f.field(), f.vars(), Value::one(f.field()));
    case PairShape::Univariate: {
      UniPoly p = to_unipoly(f, u);
      UniPoly d = up_gcd(p, up_derivative(p));
      UniPoly part = up_monic(up_div(p, d));
      return from_unipoly(part, f.field(), f.vars(), u);
    }
    case PairShape::Binary: {
      BinarySplit s = split_binary(f, u, v);
      UniPoly d = up_gcd(s.core, up_derivative(s.core));
      UniPoly part = up_monic(up_div(s.core, d));
      return assemble_binary(f.field(), f.vars(), u, v, std::min(s.a, 1),
                             std::min(s.b, 1), part);
    }
  }
  fail(ErrorCode::Internal, "unreachable shape");
}

MPFactorization factor_univariate(const MultiPoly& f) {
  require_internal(f.valid(), "factorization of unset polynomial");
  if (f.is_zero())
    fail(ErrorCode::ZeroPolynomial, "factorization of the zero polynomial");
  std::vector<std::string> occ = f.occurring_vars();
  if (occ.size() > 1)
    fail(ErrorCode::UnsupportedShape,
         "factor_univariate needs a univariate input, got " + poly_format(f));
  MPFactorization out;
  if (occ.empty()) {
    out.unit = f.constant_value();
    return out;
  }
  UPFactorization uf = up_factor(to_unipoly(f, occ[0]));
  out.unit = uf.unit;
  for (const auto& fac : uf.factors)
    out.factors.push_back(
        {from_unipoly(fac.poly, f.field(), f.vars(), occ[0]),
         fac.multiplicity});
  return out;
}

MPFactorization factor_binary_form(const MultiPoly& f) {
  require_internal(f.valid(), "factorization of unset polynomial");
  if (f.is_zero())
    fail(ErrorCode::ZeroPolynomial, "factorization of the zero form");
  if (!f.is_homogeneous())
    fail(ErrorCode::UnsupportedShape,
         "factor_binary_form needs a homogeneous input, got " +
             poly_format(f));
  std::vector<std::string> occ = f.occurring_vars();
  if (occ.size() > 2)
    fail(ErrorCode::UnsupportedShape,
         "factor_binary_form supports at most two occurring variables, got " +
             poly_format(f));
  const Field& k = f.field();
  MPFactorization out;
  if (occ.empty()) {
    out.unit = f.constant_value();
    return out;
  }
  if (occ.size() == 1) {
    // A homogeneous form in one variable is a single monomial c * u^d.
    const auto& [e, c] = *f.terms().begin();
    out.unit = c;
    out.factors.push_back(
        {MultiPoly::variable(k, f.vars(), occ[0]), f.total_degree()});
    return out;
  }
  const std::string& u = occ[0];
  const std::string& v = occ[1];
  BinarySplit s = split_binary(f, u, v);
  UPFactorization uf = up_factor(s.core);
  out.unit = uf.unit;
  if (s.b > 0)
    out.factors.push_back({MultiPoly::variable(k, f.vars(), v), s.b});
  if (s.a > 0)
    out.factors.push_back({MultiPoly::variable(k, f.vars(), u), s.a});
  for (const auto& fac : uf.factors)
    out.factors.push_back(
        {rehomogenize(fac.poly, k, f.vars(), u, v), fac.multiplicity});
  // Reconstruction check mirrors the univariate kernel's.
  MultiPoly prod = MultiPoly::constant(k, f.vars(), out.unit);
  for (const auto& fac : out.factors)
    prod = prod * fac.poly.pow(fac.multiplicity);
  require_internal(prod == f, "binary form factorization reconstruction");
  return out;
}

// --- quadratic forms ----------------------------------------------------------

namespace {

void congruence_swap(std::vector<std::vector<Value>>& a,
                     std::vector<std::vector<Value>>& p, int i, int j) {
  int n = static_cast<int>(a.size());
  for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
  std::swap(a[i], a[j]);
  for (int r = 0; r < n; ++r) std::swap(p[r][i], p[r][j]);
}

// Column/row operation e_i <- e_i + c * e_j on the symmetric matrix and the
// accumulated transform.
void congruence_add(std::vector<std::vector<Value>>& a,
                    std::vector<std::vector<Value>>& p, int i, int j,
                    const Value& c) {
  int n = static_cast<int>(a.size());
  for (int r = 0; r < n; ++r) a[r][i] = fe_add(a[r][i], fe_mul(c, a[r][j]));
  for (int r = 0; r < n; ++r) a[i][r] = fe_add(a[i][r], fe_mul(c, a[j][r]));
  for (int r = 0; r < n; ++r) p[r][i] = fe_add(p[r][i], fe_mul(c, p[r][j]));
}

}  // namespace

QuadraticFormData quadratic_form_data(const MultiPoly& f) {
  require_internal(f.valid(), "quadratic form data of unset polynomial");
  const Field& k = f.field();
  if (field_char(k) == 2)
    fail(ErrorCode::CharacteristicTwo,
         "quadratic form analysis requires characteristic != 2");
  if (f.is_zero() || f.total_degree() != 2 || !f.is_homogeneous())
    fail(ErrorCode::WrongDegree,
         "expected a homogeneous form of degree 2, got " + poly_format(f));
  int n = static_cast<int>(f.vars().size());
  Value zero = Value::zero(k), one = Value::one(k);
  Value half = fe_inv(Value::integer(k, 2));

  QuadraticFormData out;
  out.gram.assign(n, std::vector<Value>(n, zero));
  for (const auto& [e, c] : f.terms()) {
    int i = -1, j = -1;
    for (int t = 0; t < n; ++t) {
      if (e[t] == 2) i = j = t;
      if (e[t] == 1) (i < 0 ? i : j) = t;
    }
    if (i == j) {
      out.gram[i][i] = c;
    } else {
      Value hc = fe_mul(c, half);
      out.gram[i][j] = hc;
      out.gram[j][i] = hc;
    }
  }

  // Congruence diagonalization P^T M P = diag.
  std::vector<std::vector<Value>> a = out.gram;
  std::vector<std::vector<Value>> p(n, std::vector<Value>(n, zero));
  for (int i = 0; i < n; ++i) p[i][i] = one;
  for (int col = 0; col < n; ++col) {
    if (a[col][col].is_zero()) {
      int d = -1;
      for (int j = col + 1; j < n; ++j)
        if (!a[j][j].is_zero()) {
          d = j;
          break;
        }
      if (d >= 0) {
        congruence_swap(a, p, col, d);
      } else {
        // All remaining diagonal entries vanish; pull in an off-diagonal one
        // via e_i <- e_i + e_j (lands 2*a_ij on the diagonal, char != 2).
        int bi = -1, bj = -1;
        for (int i = col; i < n && bi < 0; ++i)
          for (int j = i + 1; j < n; ++j)
            if (!a[i][j].is_zero()) {
              bi = i;
              bj = j;
              break;
            }
        if (bi < 0) break;  // remaining block is zero
        congruence_add(a, p, bi, bj, one);
        if (bi != col) congruence_swap(a, p, col, bi);
      }
    }
    for (int j = col + 1; j < n; ++j) {
      if (a[col][j].is_zero()) continue;
      Value factor = fe_neg(fe_div(a[col][j], a[col][col]));
      congruence_add(a, p, j, col, factor);
    }
  }

  out.diag.reserve(n);
  for (int i = 0; i < n; ++i) {
    out.diag.push_back(a[i][i]);
    if (!a[i][i].is_zero()) ++out.rank;
  }
  out.transform = p;

  out.product_of_linear_forms_over_closure = out.rank <= 2;
  out.double_line = out.rank == 1;
  if (out.rank == 1) {
    out.splits_over_field = true;
  } else if (out.rank == 2) {
    std::vector<Value> nz;
    for (const auto& d : out.diag)
      if (!d.is_zero()) nz.push_back(d);
    out.splits_over_field = fe_is_square(fe_neg(fe_mul(nz[0], nz[1])));
  }
  return out;
}

}  // namespace recipdim
