// Projective point orbits, elimination-based solving of form pairs in P^2,
// Jacobian regularity, plane-curve smoothness/genus, and the finite-field
// brute-force oracle. Orbits are canonical: first nonzero coordinate
// normalized to 1, minimal polynomial monic over the base field.
#include "recipdim/projgeom.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

namespace recipdim {

namespace {

constexpr unsigned long long kDefaultSeed = 0x524543495044494dULL;

unsigned long long coordinate_change_seed() {
  if (const char* env = std::getenv("RECIPDIM_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return kDefaultSeed;
}

BigInt bipow(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Monic dehomogenization h(x, 1) of an irreducible binary form of degree
// >= 2 in (u, v); such a form is divisible by neither variable.
UniPoly binary_dehom(const MultiPoly& h, const std::string& u,
                     const std::string& v) {
  UniPoly hh = to_unipoly(dehomogenize(h, v), u);
  require_internal(up_deg(hh) == h.total_degree(),
                   "irreducible factor divisible by a variable");
  return up_monic(hh);
}

// Coordinate vector of a value of `ext` as a polynomial over the base field.
UniPoly ext_coord_poly(const Field& ext, const Value& v) {
  if (ext->kind == FieldKind::Extension && field_eq(v.field(), ext))
    return up_from_coeffs(std::get<ExtPayload>(v.payload()).c);
  return up_constant(v);
}

// Minimal polynomial over `base` of an element of base or of one extension
// layer over base, by incremental linear algebra on the power basis.
UniPoly min_poly_of_element(const Field& base, const Field& ext,
                            const Value& alpha) {
  if (field_eq(alpha.field(), base))
    return up_from_coeffs({fe_neg(alpha), Value::one(base)});
  int n = up_deg(ext->minpoly);
  // rows[i] = coordinates of alpha^i padded to length n, augmented with the
  // expression e_i over the original powers.
  std::vector<std::vector<Value>> basis;       // reduced rows, length n
  std::vector<std::vector<Value>> expr;        // companion expressions
  std::vector<int> lead;                       // pivot column of basis[r]
  Value pw = Value::one(ext);
  for (int i = 0; i <= n; ++i) {
    UniPoly cp = ext_coord_poly(ext, pw);
    std::vector<Value> row(n, Value::zero(base));
    for (size_t j = 0; j < cp.size(); ++j) row[j] = cp[j];
    std::vector<Value> ex(n + 1, Value::zero(base));
    ex[i] = Value::one(base);
    // reduce against current basis (copy the multiplier: the loop below
    // mutates row[lead[r]] itself)
    for (size_t r = 0; r < basis.size(); ++r) {
      Value c = row[lead[r]];
      if (c.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        row[j] = fe_sub(row[j], fe_mul(c, basis[r][j]));
      // careful: basis rows are normalized with pivot 1, so the multiplier
      // above is exactly c; mirror it on the expression part.
      for (int j = 0; j <= n; ++j)
        ex[j] = fe_sub(ex[j], fe_mul(c, expr[r][j]));
    }
    int piv = -1;
    for (int j = 0; j < n; ++j)
      if (!row[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) {
      // dependency found: sum ex[j] * alpha^j = 0 with ex[i] = 1.
      UniPoly m = up_trim(std::vector<Value>(ex.begin(), ex.begin() + i + 1));
      return up_monic(m);
    }
    Value inv = fe_inv(row[piv]);
    for (int j = 0; j < n; ++j) row[j] = fe_mul(row[j], inv);
    for (int j = 0; j <= n; ++j) ex[j] = fe_mul(ex[j], inv);
    basis.push_back(std::move(row));
    expr.push_back(std::move(ex));
    lead.push_back(piv);
    pw = fe_mul(pw, alpha);
  }
  fail(ErrorCode::Internal, "no minimal polynomial within extension degree");
}

int matrix_rank(std::vector<std::vector<Value>> m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && m[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Value inv = fe_inv(m[r][c]);
    for (size_t j = c; j < cols; ++j) m[r][j] = fe_mul(m[r][j], inv);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Value f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        m[i][j] = fe_sub(m[i][j], fe_mul(f, m[r][j]));
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

// --- orbits -------------------------------------------------------------------

ProjPointOrbit make_orbit(const Field& base, const UniPoly& minpoly,
                          const Field& ext, std::vector<Value> coords) {
  ProjPointOrbit p;
  p.base = base;
  p.ext = ext;
  p.minpoly = up_monic(minpoly);
  p.degree = up_deg(minpoly);
  require_internal(p.degree >= 1, "orbit minimal polynomial must be nonconstant");
  if (p.degree == 1)
    require_internal(field_eq(ext, base), "rational orbit over extension field");
  p.chart = -1;
  for (size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero()) {
      p.chart = static_cast<int>(i);
      break;
    }
  require_internal(p.chart >= 0, "zero coordinate vector is not a point");
  Value inv = fe_inv(coords[p.chart]);
  for (auto& c : coords) c = fe_mul(c, inv);
  p.coords = std::move(coords);
  return p;
}

ProjPointOrbit make_rational_orbit(const Field& base,
                                   std::vector<Value> coords) {
  return make_orbit(base, up_x(base), base, std::move(coords));
}

std::string orbit_to_string(const ProjPointOrbit& p) {
  std::string s = "[";
  for (size_t i = 0; i < p.coords.size(); ++i) {
    if (i) s += ":";
    s += fe_to_string(p.coords[i]);
  }
  s += "]";
  if (p.degree > 1) s += " where " + up_to_string(p.minpoly, "th") + "=0";
  return s;
}

bool orbit_less(const ProjPointOrbit& a, const ProjPointOrbit& b) {
  if (a.degree != b.degree) return a.degree < b.degree;
  if (a.chart != b.chart) return a.chart < b.chart;
  std::string ma = up_to_string(a.minpoly, "th"),
              mb = up_to_string(b.minpoly, "th");
  if (ma != mb) return ma < mb;
  return orbit_to_string(a) < orbit_to_string(b);
}

bool orbit_eq(const ProjPointOrbit& a, const ProjPointOrbit& b) {
  if (!field_eq(a.base, b.base) || a.degree != b.degree ||
      a.chart != b.chart || a.coords.size() != b.coords.size())
    return false;
  if (a.degree == 1) {
    for (size_t i = 0; i < a.coords.size(); ++i)
      if (!fe_eq(a.coords[i], b.coords[i])) return false;
    return true;
  }
  // Compare minimal polynomials of deterministic coordinate combinations;
  // these are invariants of the point set, independent of the presentation.
  const Field& K = a.base;
  std::vector<std::vector<int>> weights;
  for (size_t i = 0; i < a.coords.size(); ++i) {
    std::vector<int> w(a.coords.size(), 0);
    w[i] = 1;
    weights.push_back(w);
  }
  for (int lambda : {2, 3, 5, 7}) {
    std::vector<int> w(a.coords.size());
    int pw = 1;
    for (size_t i = 0; i < a.coords.size(); ++i) {
      w[i] = pw;
      pw *= lambda;
    }
    weights.push_back(w);
  }
  for (const auto& w : weights) {
    Value ca = Value::zero(a.ext), cb = Value::zero(b.ext);
    for (size_t i = 0; i < w.size(); ++i) {
      ca = fe_add(ca, fe_mul(a.coords[i], Value::integer(a.ext, w[i])));
      cb = fe_add(cb, fe_mul(b.coords[i], Value::integer(b.ext, w[i])));
    }
    UniPoly ma = min_poly_of_element(K, a.ext, ca);
    UniPoly mb = min_poly_of_element(K, b.ext, cb);
    if (ma.size() != mb.size()) return false;
    for (size_t i = 0; i < ma.size(); ++i)
      if (!fe_eq(ma[i], mb[i])) return false;
  }
  return true;
}

ProjPointOrbit orbit_embed_base(const ProjPointOrbit& p,
                                const Field& newbase) {
  if (field_eq(p.base, newbase)) return p;
  if (!field_is_subtower(p.base, newbase))
    fail(ErrorCode::DescriptorMismatch,
         "orbit base is not a stage of the target tower");
  UniPoly m;
  m.reserve(p.minpoly.size());
  for (const auto& c : p.minpoly) m.push_back(embed(newbase, c));
  if (p.degree == 1) {
    std::vector<Value> coords;
    for (const auto& c : p.coords) coords.push_back(embed(newbase, c));
    return make_rational_orbit(newbase, std::move(coords));
  }
  // The minimal polynomial stays irreducible over the larger tower for the
  // lifts this library performs (K relatively algebraically closed in K(t)).
  Field newext = ext_adjoin_trusted(newbase, m, "th");
  std::vector<Value> coords;
  for (const auto& c : p.coords) {
    UniPoly cp = ext_coord_poly(p.ext, c);
    std::vector<Value> lifted;
    for (const auto& cc : cp) lifted.push_back(embed(newbase, cc));
    coords.push_back(Value::make(newext, ExtPayload{std::move(lifted)}));
  }
  return make_orbit(newbase, m, newext, std::move(coords));
}

ProjPointOrbit orbit_prepend_zero(const ProjPointOrbit& p) {
  ProjPointOrbit q = p;
  q.coords.insert(q.coords.begin(), Value::zero(p.ext));
  q.chart += 1;
  return q;
}

// --- infinity profiles ---------------------------------------------------------

HomogeneousForm surface_infinity(const MultiPoly& f) {
  if (f.is_zero() || f.is_constant())
    fail(ErrorCode::ConstantPolynomial,
         "points at infinity need a nonconstant polynomial");
  return leading_form(f);
}

InfinityProfile curve_infinity_profile(const MultiPoly& f) {
  if (f.is_zero() || f.is_constant())
    fail(ErrorCode::ConstantPolynomial,
         "points at infinity need a nonconstant polynomial");
  require_internal(f.vars().size() == 2,
                   "curve infinity expects a plane curve in two variables");
  const Field& K = f.field();
  MultiPoly fd = leading_form(f).poly;
  MPFactorization fac = factor_binary_form(fd);
  InfinityProfile prof;
  const std::string& vx = f.vars()[0];
  const std::string& vy = f.vars()[1];
  for (const auto& h : fac.factors) {
    int d = h.poly.total_degree();
    if (d == 1) {
      ExpVec ex(2, 0), ey(2, 0);
      ex[0] = 1;
      ey[1] = 1;
      Value alpha = h.poly.coeff(ex), beta = h.poly.coeff(ey);
      // root (x:y) of alpha*x + beta*y: (beta : -alpha), sitting at W = 0.
      prof.orbits.push_back(
          {make_rational_orbit(K, {Value::zero(K), beta, fe_neg(alpha)}),
           OrbitRegularity::Undetermined});
    } else {
      UniPoly core = binary_dehom(h.poly, vx, vy);
      Field L = ext_adjoin_trusted(K, core, "th");
      prof.orbits.push_back(
          {make_orbit(K, core, L,
                      {Value::zero(L), Value::generator(L), Value::one(L)}),
           OrbitRegularity::Undetermined});
    }
  }
  std::sort(prof.orbits.begin(), prof.orbits.end(),
            [](const OrbitStatus& a, const OrbitStatus& b) {
              return orbit_less(a.orbit, b.orbit);
            });
  prof.geometric_count = 0;
  for (const auto& o : prof.orbits) prof.geometric_count += o.orbit.degree;
  return prof;
}

InfinityProfile regular_at_infinity(const MultiPoly& f,
                                    InfinityProfile profile) {
  // Curve orbits already carry three coordinates [0 : x : y] matching the
  // homogenized ring [W, X, Y].
  MultiPoly F = homogenize(f, "W").poly;
  for (auto& st : profile.orbits) {
    int rank = jacobian_rank_at({F}, st.orbit);
    st.flag = rank == 1 ? OrbitRegularity::Regular : OrbitRegularity::Singular;
  }
  return profile;
}

// --- Jacobian ranks ------------------------------------------------------------

int jacobian_rank_at(const std::vector<MultiPoly>& polys,
                     const ProjPointOrbit& p) {
  require_internal(!polys.empty(), "Jacobian of an empty system");
  const Field& Ff = polys[0].field();
  for (const auto& g : polys)
    require_internal(field_eq(g.field(), Ff) && g.vars() == polys[0].vars(),
                     "Jacobian system must share one ring");
  ProjPointOrbit q = p;
  if (!field_eq(Ff, p.base)) q = orbit_embed_base(p, Ff);
  require_internal(q.coords.size() == polys[0].vars().size(),
                   "point arity does not match the ring");
  for (const auto& g : polys)
    if (!poly_eval(g, q.coords).is_zero())
      fail(ErrorCode::PointNotOnVariety,
           "point " + orbit_to_string(q) + " does not satisfy " +
               poly_format(g));
  std::vector<std::vector<Value>> m;
  for (const auto& g : polys) {
    std::vector<Value> row;
    for (const auto& v : polys[0].vars())
      row.push_back(poly_eval(partial_derivative(g, v), q.coords));
    m.push_back(std::move(row));
  }
  return matrix_rank(std::move(m));
}

// --- solver --------------------------------------------------------------------

namespace {

struct Mat3 {
  int a[3][3];
  std::string label;
};

bool mat3_invertible(const Mat3& m, const Field& K) {
  long long det = 0;
  det += static_cast<long long>(m.a[0][0]) *
         (m.a[1][1] * m.a[2][2] - m.a[1][2] * m.a[2][1]);
  det -= static_cast<long long>(m.a[0][1]) *
         (m.a[1][0] * m.a[2][2] - m.a[1][2] * m.a[2][0]);
  det += static_cast<long long>(m.a[0][2]) *
         (m.a[1][0] * m.a[2][1] - m.a[1][1] * m.a[2][0]);
  return !Value::integer(K, BigInt(det)).is_zero();
}

std::string mat3_label(const Mat3& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? "," : "") << m.a[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

MultiPoly apply_change(const MultiPoly& f, const Mat3& m) {
  const Field& K = f.field();
  std::vector<MultiPoly> images;
  for (int i = 0; i < 3; ++i) {
    MultiPoly img = MultiPoly::zero(K, f.vars());
    for (int j = 0; j < 3; ++j) {
      if (m.a[i][j] == 0) continue;
      img = img + MultiPoly::variable(K, f.vars(), f.vars()[j])
                      .scaled(Value::integer(K, m.a[i][j]));
    }
    images.push_back(img);
  }
  return substitute_all(f, images);
}

// Univariate restriction of F to the line through [0:0:1] over the
// projection point (x0, y0): F(x0, y0, Z) as a polynomial in the last
// variable. The projection coordinates may live in an extension.
UniPoly fiber_poly(const MultiPoly& F, const Value& x0, const Value& y0) {
  const Field& L = x0.field();
  int d = F.degree_in(F.vars()[2]);
  std::vector<Value> c;
  c.reserve(d + 1);
  for (int k = 0; k <= d; ++k)
    c.push_back(
        poly_eval(coeff_in(F, F.vars()[2], k), {x0, y0, Value::zero(L)}));
  return up_from_coeffs(std::move(c));
}

// Smallest root (by the deterministic value order) of a polynomial over a
// finite field; the root must exist.
Value smallest_root(const UniPoly& f, const Field& Fq) {
  UniPoly g;
  g.reserve(f.size());
  for (const auto& c : f) g.push_back(embed(Fq, c));
  std::vector<Value> roots = up_roots_in_field(up_trim(std::move(g)));
  require_internal(!roots.empty(), "expected a root in the splitting field");
  return roots.front();  // up_roots_in_field returns a sorted list
}

// One solving attempt in fixed coordinates. Returns nullopt when a fiber
// over an extension projection point has degree >= 2 and the base field is
// not a prime field (the caller then retries after a coordinate change).
std::optional<std::vector<ProjPointOrbit>> try_solve(const MultiPoly& F,
                                                     const MultiPoly& G) {
  const Field& K = F.field();
  const auto& vars = F.vars();
  std::vector<ProjPointOrbit> out;

  // Coordinate point killed by the elimination below.
  std::vector<Value> e3 = {Value::zero(K), Value::zero(K), Value::one(K)};
  if (poly_eval(F, e3).is_zero() && poly_eval(G, e3).is_zero())
    out.push_back(make_rational_orbit(K, e3));

  MultiPoly R = F.degree_in(vars[2]) == 0   ? F
                : G.degree_in(vars[2]) == 0 ? G
                                            : resultant(F, G, vars[2]);
  require_internal(!R.is_zero(), "eliminant of a coprime pair vanished");
  if (R.is_constant()) return out;
  require_internal(R.is_homogeneous(), "eliminant is not a form");

  MPFactorization fac = factor_binary_form(R);
  for (const auto& h : fac.factors) {
    int e = h.poly.total_degree();
    Value x0, y0;
    Field L = K;
    UniPoly projection_minpoly = up_x(K);
    if (e == 1) {
      ExpVec ex(3, 0), ey(3, 0);
      ex[h.poly.var_index(vars[0])] = 1;
      ey[h.poly.var_index(vars[1])] = 1;
      Value alpha = h.poly.coeff(ex), beta = h.poly.coeff(ey);
      x0 = beta;
      y0 = fe_neg(alpha);
    } else {
      projection_minpoly = binary_dehom(h.poly, vars[0], vars[1]);
      L = ext_adjoin_trusted(K, projection_minpoly, "th");
      x0 = Value::generator(L);
      y0 = Value::one(L);
    }
    UniPoly fF = fiber_poly(poly_embed(F, L), x0, y0);
    UniPoly fG = fiber_poly(poly_embed(G, L), x0, y0);
    UniPoly g = up_gcd(fF, fG);
    require_internal(!up_is_zero(g), "both fiber restrictions vanished");
    if (up_deg(g) == 0) continue;  // spurious eliminant root
    if (e == 1) {
      UPFactorization gf = up_factor(g);
      for (const auto& q : gf.factors) {
        if (up_deg(q.poly) == 1) {
          Value z0 = fe_neg(q.poly[0]);
          out.push_back(make_rational_orbit(K, {x0, y0, z0}));
        } else {
          Field E = ext_adjoin_trusted(K, q.poly, "th");
          out.push_back(make_orbit(K, q.poly, E,
                                   {embed(E, x0), embed(E, y0),
                                    Value::generator(E)}));
        }
      }
    } else if (up_deg(g) == 1) {
      Value z0 = fe_neg(fe_div(g[0], g[1]));
      out.push_back(make_orbit(K, projection_minpoly, L, {x0, y0, z0}));
    } else if (K->kind == FieldKind::Prime) {
      // The fiber factors over the finite field L; linear factors keep the
      // presentation over L, while higher-degree ones are flattened into one
      // explicit stage GF(p^(e*r)) so the orbit has a single minimal
      // polynomial over GF(p).
      UPFactorization gf = up_factor(g);
      for (const auto& q : gf.factors) {
        int r = up_deg(q.poly);
        if (r == 1) {
          Value z0 = fe_neg(fe_div(q.poly[0], q.poly[1]));
          out.push_back(make_orbit(K, projection_minpoly, L, {x0, y0, z0}));
          continue;
        }
        Field M = make_finite_field(K->p, e * r);
        Value th = smallest_root(projection_minpoly, M);
        std::vector<Value> qc;
        for (const auto& c : q.poly)
          qc.push_back(up_eval(ext_coord_poly(L, c), th));
        Value z = smallest_root(up_trim(std::move(qc)), M);
        out.push_back(make_orbit(K, M->minpoly, M,
                                 {th, Value::one(M), z}));
      }
    } else {
      return std::nullopt;  // needs a separating coordinate change
    }
  }
  return out;
}

}  // namespace

std::vector<ProjPointOrbit> solve_proj_system(const MultiPoly& F,
                                              const MultiPoly& G,
                                              SolveTrace* trace) {
  require_internal(F.valid() && G.valid(), "solve of unset polynomial");
  if (F.is_zero() || G.is_zero())
    fail(ErrorCode::ZeroPolynomial, "projective system with a zero form");
  if (F.vars().size() != 3 || G.vars() != F.vars() ||
      !field_eq(F.field(), G.field()))
    fail(ErrorCode::UnsupportedShape,
         "projective solving expects two forms in the same three variables");
  if (!F.is_homogeneous() || !G.is_homogeneous())
    fail(ErrorCode::UnsupportedShape,
         "projective solving expects homogeneous forms");
  const Field& K = F.field();
  const auto& vars = F.vars();
  for (const auto& v : vars) {
    if (F.degree_in(v) == 0 && G.degree_in(v) == 0) continue;
    if (resultant(F, G, v).is_zero())
      fail(ErrorCode::CommonComponent,
           "forms share a component (resultant in '" + v +
               "' vanishes identically)");
  }

  std::vector<Mat3> changes;
  changes.push_back({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, "identity"});
  changes.push_back({{{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}, "X<-X+Z"});
  changes.push_back({{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}, "Y<-Y+Z"});
  changes.push_back({{{1, 0, 1}, {0, 1, 1}, {0, 0, 1}}, "X<-X+Z, Y<-Y+Z"});
  std::mt19937_64 rng(coordinate_change_seed());
  int attempts = 0;
  while (attempts < 60) {
    Mat3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        m.a[i][j] = static_cast<int>(rng() % 7) - 3;
    if (!mat3_invertible(m, K)) continue;
    m.label = mat3_label(m);
    changes.push_back(m);
    ++attempts;
  }

  for (const auto& ch : changes) {
    bool identity = ch.label == "identity";
    MultiPoly Fc = identity ? F : apply_change(F, ch);
    MultiPoly Gc = identity ? G : apply_change(G, ch);
    auto attempt = try_solve(Fc, Gc);
    if (!attempt) continue;
    if (trace && !identity) trace->coordinate_changes.push_back(ch.label);
    std::vector<ProjPointOrbit> out;
    for (const auto& p : *attempt) {
      if (identity) {
        out.push_back(p);
        continue;
      }
      std::vector<Value> mapped(3, Value::zero(p.ext));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          if (ch.a[i][j] == 0) continue;
          mapped[i] = fe_add(mapped[i],
                             fe_mul(p.coords[j],
                                    Value::integer(p.ext, ch.a[i][j])));
        }
      out.push_back(p.degree == 1
                        ? make_rational_orbit(K, std::move(mapped))
                        : make_orbit(K, p.minpoly, p.ext, std::move(mapped)));
    }
    int total = 0;
    for (const auto& p : out) {
      for (const auto& g : {F, G})
        require_internal(poly_eval(g, p.coords).is_zero(),
                         "solver produced an off-variety point");
      total += p.degree;
    }
    require_internal(total <= F.total_degree() * G.total_degree(),
                     "solution count exceeds the Bezout bound");
    std::sort(out.begin(), out.end(), orbit_less);
    return out;
  }
  fail(ErrorCode::Internal,
       "no separating coordinate change found for the projective system");
}

// --- singularity scan -----------------------------------------------------------

SingularityScan infinity_not_all_singular(const MultiPoly& f) {
  require_internal(f.valid(), "scan of unset polynomial");
  if (f.is_zero() || f.is_constant())
    fail(ErrorCode::ConstantPolynomial,
         "infinity scan needs a nonconstant polynomial");
  require_internal(f.vars().size() == 3,
                   "infinity scan expects a surface polynomial in X,Y,Z");
  const Field& K = f.field();
  MultiPoly fd = leading_form(f).poly;
  int d = fd.total_degree();

  // Cheap reducibility detection on the leading form; a full trivariate
  // decision is out of scope and the hypothesis stays with the caller.
  if (d == 2) {
    bool char2 = field_char(K) == 2;
    if (!char2) {
      QuadraticFormData qd = quadratic_form_data(fd);
      if (qd.rank <= 2 && qd.splits_over_field)
        fail(ErrorCode::ReducibleLeadingForm,
             "leading form splits into linear factors: " + poly_format(fd));
    }
  } else if (fd.occurring_vars().size() <= 2 && d >= 2) {
    try {
      MPFactorization fac = factor_binary_form(fd);
      if (fac.factors.size() > 1 || fac.factors[0].multiplicity > 1)
        fail(ErrorCode::ReducibleLeadingForm,
             "leading form is reducible: " + poly_format(fd));
    } catch (const Error& e) {
      // Reducibility over K(t) may be undecidable for the kernel (including
      // inseparable shapes over imperfect fields); the irreducibility
      // hypothesis then stays with the caller.
      if (e.code() != ErrorCode::UnsupportedFactorization &&
          e.code() != ErrorCode::UnsupportedField)
        throw;
    }
  }

  MultiPoly F = homogenize(f, "W").poly;
  // Containment test: every infinity point is singular iff all four partials
  // vanish on V(W, f_d), i.e. f_d divides each partial restricted to W = 0.
  MultiPoly fdW = poly_change_vars(fd, F.vars());
  bool contained = true;
  for (const auto& v : F.vars()) {
    MultiPoly pv = coeff_in(partial_derivative(F, v), "W", 0);
    if (!poly_divides(fdW, pv)) {
      contained = false;
      break;
    }
  }
  if (contained) {
    SingularityScan scan;
    scan.verdict = SingularityScan::Verdict::AllSingular;
    return scan;
  }

  // Witness search: cut the infinity curve with a deterministic family of
  // lines and test the resulting orbits on the closure's Jacobian.
  static const int kLines[][3] = {
      {1, 0, 0}, {0, 1, 0},  {0, 0, 1},  {1, 1, 0},  {1, -1, 0},
      {1, 0, 1}, {1, 0, -1}, {0, 1, 1},  {0, 1, -1}, {1, 1, 1},
      {1, 1, -1}, {1, -1, 1}, {1, 2, 3},  {3, 1, 2}};
  for (const auto& lc : kLines) {
    MultiPoly line = MultiPoly::zero(K, fd.vars());
    for (int i = 0; i < 3; ++i) {
      if (lc[i] == 0) continue;
      line = line + MultiPoly::variable(K, fd.vars(), fd.vars()[i])
                        .scaled(Value::integer(K, lc[i]));
    }
    std::vector<ProjPointOrbit> orbits;
    try {
      orbits = solve_proj_system(fd, line);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CommonComponent ||
          e.code() == ErrorCode::UnsupportedFactorization)
        continue;
      throw;
    }
    for (const auto& p : orbits) {
      ProjPointOrbit p4 = orbit_prepend_zero(p);
      if (jacobian_rank_at({F}, p4) == 1) {
        SingularityScan scan;
        scan.verdict = SingularityScan::Verdict::NotAllSingular;
        scan.witness = p4;
        return scan;
      }
    }
  }
  return SingularityScan{};  // Undetermined
}

// --- plane curve smoothness ------------------------------------------------------

bool smooth_plane_curve(const MultiPoly& F) {
  require_internal(F.valid(), "smoothness of unset polynomial");
  if (F.is_zero())
    fail(ErrorCode::ZeroPolynomial, "smoothness of the zero form");
  if (F.vars().size() != 3 || !F.is_homogeneous())
    fail(ErrorCode::UnsupportedShape,
         "smoothness test expects a plane projective curve in three variables");
  std::vector<MultiPoly> partials;
  bool constant_obstruction = false;
  for (const auto& v : F.vars()) {
    MultiPoly p = partial_derivative(F, v);
    if (p.is_zero()) continue;
    if (p.is_constant()) {
      constant_obstruction = true;  // the system contains c = 0, c != 0
      continue;
    }
    partials.push_back(p);
  }
  if (constant_obstruction) return true;
  if (partials.empty()) return false;  // gradient identically zero
  if (partials.size() == 1) return false;  // a plane curve of zeros exists
  std::vector<ProjPointOrbit> orbits;
  try {
    orbits = solve_proj_system(partials[0], partials[1]);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CommonComponent)
      return false;  // a whole curve of common gradient zeros
    throw;
  }
  for (const auto& p : orbits) {
    bool on_all = true;
    for (size_t i = 2; i < partials.size(); ++i)
      if (!poly_eval(poly_embed(partials[i], p.ext), p.coords).is_zero()) {
        on_all = false;
        break;
      }
    if (on_all) return false;
  }
  return true;
}

int genus_smooth_plane_curve(const MultiPoly& F) {
  if (!smooth_plane_curve(F))
    fail(ErrorCode::NotSmooth,
         "genus formula applies to smooth plane curves only");
  int d = F.total_degree();
  return (d - 1) * (d - 2) / 2;
}

// --- finite-field oracle ----------------------------------------------------------

Field make_finite_field(const BigInt& p, int k) {
  Field base = make_prime_field(p);
  if (k == 1) return base;
  require_internal(k >= 2, "extension degree must be positive");
  // Deterministic modulus: first monic irreducible of degree k in the
  // constant-term-first enumeration.
  BigInt count = bipow(p, k);
  for (BigInt idx = 0; idx < count; ++idx) {
    std::vector<Value> c;
    BigInt rest = idx;
    for (int i = 0; i < k; ++i) {
      c.push_back(Value::integer(base, bi_mod(rest, p)));
      rest /= p;
    }
    c.push_back(Value::one(base));
    UniPoly m = up_from_coeffs(std::move(c));
    if (up_is_irreducible(m, base)) return ext_adjoin_trusted(base, m, "th");
  }
  fail(ErrorCode::Internal, "no irreducible modulus found");
}

std::vector<std::vector<Value>> bruteforce_proj_points(const MultiPoly& F,
                                                       const MultiPoly& G,
                                                       const Field& gfp,
                                                       int k) {
  if (gfp->kind != FieldKind::Prime)
    fail(ErrorCode::UnsupportedField,
         "brute-force enumeration runs over prime fields");
  if (bipow(gfp->p, 2 * k) > 1000000)
    fail(ErrorCode::TooLarge, "enumeration space exceeds 10^6");
  require_internal(F.vars().size() == 3 && G.vars() == F.vars(),
                   "brute force expects forms in three shared variables");
  Field Fq = make_finite_field(gfp->p, k);
  BigInt q = *field_size(Fq);
  std::vector<Value> elems;
  for (BigInt i = 0; i < q; ++i) elems.push_back(fq_element_by_index(Fq, i));
  Value one = Value::one(Fq), zero = Value::zero(Fq);
  // write each form as a univariate polynomial in the last coordinate, so the
  // inner loop over that coordinate is a Horner evaluation rather than a
  // full term-by-term evaluation of the trivariate form
  const std::string& v2 = F.vars()[2];
  auto slices = [&](const MultiPoly& h) {
    std::vector<MultiPoly> s;
    for (int j = 0; j <= std::max(h.degree_in(v2), 0); ++j)
      s.push_back(coeff_in(h, v2, j));
    return s;
  };
  std::vector<MultiPoly> sf = slices(F), sg = slices(G);
  auto fiber = [&](const std::vector<MultiPoly>& s, const Value& w,
                   const Value& x) {
    UniPoly u;
    u.reserve(s.size());
    for (const auto& c : s) u.push_back(poly_eval(c, {w, x, zero}));
    return up_trim(std::move(u));
  };
  std::vector<std::vector<Value>> pts;
  for (const auto& a : elems) {
    UniPoly fa = fiber(sf, one, a), ga = fiber(sg, one, a);
    for (const auto& b : elems)
      if (up_eval(fa, b).is_zero() && up_eval(ga, b).is_zero())
        pts.push_back({one, a, b});
  }
  UniPoly f0 = fiber(sf, zero, one), g0 = fiber(sg, zero, one);
  for (const auto& b : elems)
    if (up_eval(f0, b).is_zero() && up_eval(g0, b).is_zero())
      pts.push_back({zero, one, b});
  if (poly_eval(F, {zero, zero, one}).is_zero() &&
      poly_eval(G, {zero, zero, one}).is_zero())
    pts.push_back({zero, zero, one});
  return pts;
}

std::vector<std::vector<Value>> expand_orbit(const ProjPointOrbit& p,
                                             const Field& gfq) {
  require_internal(field_size(gfq).has_value(),
                   "orbit expansion needs a finite field");
  UniPoly m;
  m.reserve(p.minpoly.size());
  for (const auto& c : p.minpoly) m.push_back(embed(gfq, c));
  std::vector<Value> roots = up_roots_in_field(m);
  std::vector<std::vector<Value>> pts;
  for (const auto& r : roots) {
    std::vector<Value> c;
    for (const auto& coord : p.coords)
      c.push_back(up_eval(ext_coord_poly(p.ext, coord), r));
    pts.push_back(std::move(c));
  }
  return pts;
}

}  // namespace recipdim
