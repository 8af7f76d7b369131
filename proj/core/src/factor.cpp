#include "recipdim/factor.hpp"

#include <algorithm>
#include <random>

namespace recipdim {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomials (dense, trimmed, empty == zero).
// ---------------------------------------------------------------------------

using ZPoly = std::vector<BigInt>;

ZPoly zp_trim(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return zp_trim(std::move(out));
}

ZPoly zp_mod(ZPoly a, const BigInt& m) {
  for (auto& c : a) c = bi_mod(c, m);
  return zp_trim(std::move(a));
}

// Symmetric representative with coefficients in (-m/2, m/2].
ZPoly zp_sym(ZPoly a, const BigInt& m) {
  const BigInt half = m / 2;
  for (auto& c : a) {
    c = bi_mod(c, m);
    if (c > half) c -= m;
  }
  return zp_trim(std::move(a));
}

ZPoly zpm_mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  return zp_mod(zp_mul(a, b), m);
}

ZPoly zpm_add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < out.size(); ++i) {
    BigInt s = (i < a.size() ? a[i] : BigInt(0)) + (i < b.size() ? b[i] : BigInt(0));
    out[i] = bi_mod(s, m);
  }
  return zp_trim(std::move(out));
}

ZPoly zpm_sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly out(std::max(a.size(), b.size()), BigInt(0));
  for (size_t i = 0; i < out.size(); ++i) {
    BigInt s = (i < a.size() ? a[i] : BigInt(0)) - (i < b.size() ? b[i] : BigInt(0));
    out[i] = bi_mod(s, m);
  }
  return zp_trim(std::move(out));
}

// Division with remainder modulo m by a monic divisor.
void zpm_divmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& m, ZPoly& q,
                      ZPoly& r) {
  require_internal(!b.empty() && bi_mod(b.back(), m) == 1,
                   "modular division requires a monic divisor");
  r = zp_mod(a, m);
  const int db = zp_deg(b);
  if (zp_deg(r) < db) {
    q = {};
    return;
  }
  q.assign(static_cast<size_t>(zp_deg(r) - db) + 1, BigInt(0));
  while (zp_deg(r) >= db) {
    const int k = zp_deg(r) - db;
    const BigInt c = r.back();
    q[static_cast<size_t>(k)] = c;
    for (int i = 0; i <= db; ++i) {
      size_t pos = static_cast<size_t>(i + k);
      r[pos] = bi_mod(r[pos] - c * b[static_cast<size_t>(i)], m);
    }
    r = zp_trim(std::move(r));
  }
  q = zp_trim(std::move(q));
}

// Exact division over Z by a monic divisor; nullopt if it does not divide.
std::optional<ZPoly> zp_div_exact_monic(const ZPoly& a, const ZPoly& b) {
  require_internal(!b.empty() && b.back() == 1, "exact division requires monic divisor");
  ZPoly r = a;
  const int db = zp_deg(b);
  if (zp_deg(r) < db) return r.empty() ? std::optional<ZPoly>(ZPoly{}) : std::nullopt;
  ZPoly q(static_cast<size_t>(zp_deg(r) - db) + 1, BigInt(0));
  while (zp_deg(r) >= db) {
    const int k = zp_deg(r) - db;
    const BigInt c = r.back();
    q[static_cast<size_t>(k)] = c;
    for (int i = 0; i <= db; ++i) r[static_cast<size_t>(i + k)] -= c * b[static_cast<size_t>(i)];
    r = zp_trim(std::move(r));
  }
  if (!r.empty()) return std::nullopt;
  return zp_trim(std::move(q));
}

BigInt zp_maxabs(const ZPoly& a) {
  BigInt m = 0;
  for (const auto& c : a) {
    BigInt v = c < 0 ? BigInt(-c) : c;
    if (v > m) m = v;
  }
  return m;
}

BigInt bi_pow(const BigInt& b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// ---------------------------------------------------------------------------
// Conversions between GF(p) polynomials and integer polynomials.
// ---------------------------------------------------------------------------

ZPoly zp_from_fp(const UniPoly& u) {
  ZPoly out;
  out.reserve(u.size());
  for (const auto& c : u) out.push_back(std::get<FpPayload>(c.payload()).r);
  return zp_trim(std::move(out));
}

UniPoly fp_from_zp(const ZPoly& z, const Field& K) {
  UniPoly out;
  out.reserve(z.size());
  for (const auto& c : z) out.push_back(Value::integer(K, c));
  return up_trim(std::move(out));
}

// ---------------------------------------------------------------------------
// Finite-field factorization: distinct-degree + equal-degree splitting.
// ---------------------------------------------------------------------------

UniPoly random_poly_below(int n, const Field& K, const BigInt& q,
                          std::mt19937_64& rng) {
  UniPoly a(static_cast<size_t>(n));
  for (auto& c : a) c = fq_element_by_index(K, bi_mod(BigInt(rng()), q));
  return up_trim(std::move(a));
}

void ff_edf(const UniPoly& f, int d, const Field& K, const BigInt& q,
            std::mt19937_64& rng, std::vector<UniPoly>& out) {
  if (up_deg(f) == d) {
    out.push_back(f);
    return;
  }
  const bool char2 = (field_char(K) == 2);
  int kd = 0;
  if (char2) {
    BigInt t = q;
    int k = 0;
    while (t > 1) {
      t >>= 1;
      ++k;
    }
    kd = k * d;
  }
  const BigInt exp_odd = char2 ? BigInt(0) : (bi_pow(q, d) - 1) / 2;
  for (int attempt = 0; attempt < 400; ++attempt) {
    UniPoly a = random_poly_below(up_deg(f), K, q, rng);
    if (up_deg(a) < 1) continue;
    UniPoly c = up_gcd(f, a);
    if (up_deg(c) == 0) {
      UniPoly w;
      if (!char2) {
        UniPoly b = up_powmod(a, exp_odd, f);
        w = up_sub(b, up_constant(Value::one(K)));
      } else {
        UniPoly acc = up_rem(a, f);
        UniPoly cur = acc;
        for (int i = 1; i < kd; ++i) {
          cur = up_rem(up_mul(cur, cur), f);
          acc = up_add(acc, cur);
        }
        w = acc;
      }
      c = up_gcd(f, w);
    }
    if (up_deg(c) > 0 && up_deg(c) < up_deg(f)) {
      ff_edf(c, d, K, q, rng, out);
      ff_edf(up_div(f, c), d, K, q, rng, out);
      return;
    }
  }
  fail(ErrorCode::Internal, "equal-degree splitting failed to converge");
}

// Factor a monic squarefree polynomial over a finite field.
std::vector<UniPoly> ff_factor_monic_squarefree(const UniPoly& g0, const Field& K,
                                                const BigInt& q) {
  std::vector<UniPoly> out;
  UniPoly g = g0;
  if (up_deg(g) <= 0) return out;
  if (up_deg(g) == 1) {
    out.push_back(g);
    return out;
  }
  std::mt19937_64 rng(0x524543495044494dULL);
  const UniPoly x = up_x(K);
  UniPoly h = up_rem(x, g);
  for (int i = 1; 2 * i <= up_deg(g); ++i) {
    h = up_powmod(h, q, g);
    UniPoly d = up_gcd(g, up_sub(h, x));
    if (up_deg(d) > 0) {
      ff_edf(d, i, K, q, rng, out);
      g = up_div(g, d);
      if (up_deg(g) == 0) break;
      h = up_rem(h, g);
    }
  }
  if (up_deg(g) > 0) out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting (quadratic, pairwise, over a balanced product tree).
// ---------------------------------------------------------------------------

struct HenselPair {
  ZPoly g, h, s, t;  // f == g*h, s*g + t*h == 1 (mod current modulus), h monic
};

// One quadratic step: from modulus m to m*m.
void hensel_step(const ZPoly& f, HenselPair& P, const BigInt& m) {
  const BigInt M = m * m;
  ZPoly e = zpm_sub(zp_mod(f, M), zpm_mul(P.g, P.h, M), M);
  ZPoly q, r;
  zpm_divmod_monic(zpm_mul(P.s, e, M), P.h, M, q, r);
  ZPoly g1 = zpm_add(P.g, zpm_add(zpm_mul(P.t, e, M), zpm_mul(q, P.g, M), M), M);
  ZPoly h1 = zpm_add(P.h, r, M);
  ZPoly b = zpm_sub(zpm_add(zpm_mul(P.s, g1, M), zpm_mul(P.t, h1, M), M), ZPoly{BigInt(1)}, M);
  ZPoly c, d;
  zpm_divmod_monic(zpm_mul(P.s, b, M), h1, M, c, d);
  ZPoly s1 = zpm_sub(P.s, d, M);
  ZPoly t1 = zpm_sub(zpm_sub(P.t, zpm_mul(P.t, b, M), M), zpm_mul(c, g1, M), M);
  P = HenselPair{std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
  require_internal(zpm_sub(zp_mod(f, M), zpm_mul(P.g, P.h, M), M).empty(),
                   "Hensel step failed to preserve the factorization");
}

// Lift the modular factors of a monic f (taken mod M) from mod p to mod M,
// where M is a power of p of the form p^(2^j).
std::vector<ZPoly> hensel_tree(const ZPoly& fM, const std::vector<UniPoly>& facs,
                               size_t lo, size_t hi, const Field& Fp, const BigInt& p,
                               const BigInt& M) {
  if (hi - lo == 1) return {fM};
  const size_t mid = lo + (hi - lo) / 2;
  UniPoly u = up_constant(Value::one(Fp));
  for (size_t i = lo; i < mid; ++i) u = up_mul(u, facs[i]);
  UniPoly v = up_constant(Value::one(Fp));
  for (size_t i = mid; i < hi; ++i) v = up_mul(v, facs[i]);
  ExtGcd eg = up_extgcd(u, v);
  require_internal(up_deg(eg.g) == 0, "modular factors are not pairwise coprime");
  HenselPair P{zp_from_fp(u), zp_from_fp(v), zp_from_fp(eg.u), zp_from_fp(eg.v)};
  BigInt m = p;
  while (m < M) {
    hensel_step(fM, P, m);
    m *= m;
  }
  require_internal(m == M, "lifting modulus drifted off the schedule");
  std::vector<ZPoly> left = hensel_tree(P.g, facs, lo, mid, Fp, p, M);
  std::vector<ZPoly> right = hensel_tree(P.h, facs, mid, hi, Fp, p, M);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

// ---------------------------------------------------------------------------
// Zassenhaus: factor a monic squarefree integer polynomial.
// ---------------------------------------------------------------------------

std::vector<ZPoly> factor_z_monic_squarefree(const ZPoly& G) {
  const int n = zp_deg(G);
  require_internal(n >= 1 && G.back() == 1, "expected a monic integer polynomial");
  if (n == 1) return {G};

  // A prime where G stays squarefree (it is monic, so the degree never drops).
  BigInt p = 0;
  Field Fp;
  UniPoly Gp;
  for (BigInt cand = 3; cand < 10000; ++cand) {
    if (!bi_is_prime(cand)) continue;
    Field K = make_prime_field(cand);
    UniPoly g = fp_from_zp(zp_mod(G, cand), K);
    if (up_deg(up_gcd(g, up_derivative(g))) == 0) {
      p = cand;
      Fp = K;
      Gp = std::move(g);
      break;
    }
  }
  require_internal(p > 0, "no squarefree reduction prime found");

  std::vector<UniPoly> facs = ff_factor_monic_squarefree(Gp, Fp, p);
  require_internal(!facs.empty(), "modular factorization came back empty");
  if (facs.size() == 1) return {G};

  // Coefficient bound for any monic factor of G, with room for the sign.
  const BigInt B = BigInt(n + 1) * bi_pow(BigInt(2), n) * zp_maxabs(G);
  BigInt M = p;
  while (M < 2 * B + 1) M *= M;

  std::vector<ZPoly> lifted = hensel_tree(zp_mod(G, M), facs, 0, facs.size(), Fp, p, M);

  // Recombine subsets of lifted factors into true integer factors.
  std::vector<ZPoly> out;
  ZPoly Grem = G;
  std::vector<ZPoly> live = std::move(lifted);
  size_t s = 1;
  while (2 * s <= live.size()) {
    bool hit = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly prod{BigInt(1)};
      for (size_t i : idx) prod = zpm_mul(prod, live[i], M);
      ZPoly h = zp_sym(std::move(prod), M);
      bool plausible = !h.empty() && h.back() == 1;
      if (plausible && !Grem.empty()) {
        const BigInt& h0 = h.front();
        const BigInt& g0 = Grem.front();
        if (zp_deg(h) > 0) {
          if (h0 == 0)
            plausible = (g0 == 0);
          else
            plausible = (g0 % h0 == 0);
        }
      }
      if (plausible && zp_deg(h) > 0 && zp_deg(h) <= zp_deg(Grem)) {
        if (auto quo = zp_div_exact_monic(Grem, h)) {
          out.push_back(h);
          Grem = std::move(*quo);
          for (size_t i = idx.size(); i-- > 0;) live.erase(live.begin() + static_cast<long>(idx[i]));
          hit = true;
          break;
        }
      }
      // next s-combination of [0, live.size())
      size_t k = s;
      while (k > 0 && idx[k - 1] == live.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t i = k; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (zp_deg(Grem) > 0) out.push_back(Grem);
  return out;
}

// ---------------------------------------------------------------------------
// Field-specific drivers.
// ---------------------------------------------------------------------------

void factor_monic_squarefree_rational(const UniPoly& part, int mult,
                                      std::vector<UPFactor>& out) {
  const Field Q = up_field(part);
  const int n = up_deg(part);
  if (n == 1) {
    out.push_back({part, mult});
    return;
  }
  // Clear denominators: part is monic over Q, so L*part has integer entries
  // and positive leading coefficient L.
  BigInt L = 1;
  for (const auto& c : part) {
    const auto& r = std::get<RatPayload>(c.payload());
    L = L / bi_gcd(L, r.den) * r.den;
  }
  ZPoly F(part.size());
  for (size_t i = 0; i < part.size(); ++i) {
    const auto& r = std::get<RatPayload>(part[i].payload());
    F[i] = r.num * (L / r.den);
  }
  BigInt content = 0;
  for (const auto& c : F) content = bi_gcd(content, c < 0 ? BigInt(-c) : c);
  if (content > 1)
    for (auto& c : F) c /= content;
  const BigInt lc = F.back();

  // Monicize: G(x) = lc^(n-1) * F(x/lc) is monic with integer coefficients.
  ZPoly G(F.size());
  for (int i = 0; i < n; ++i) G[static_cast<size_t>(i)] = F[static_cast<size_t>(i)] * bi_pow(lc, n - 1 - i);
  G[static_cast<size_t>(n)] = 1;

  for (const ZPoly& hz : factor_z_monic_squarefree(G)) {
    // Undo the substitution: the matching monic factor of part is
    // sum_i hz[i] * lc^(i - deg hz) * x^i.
    const int m = zp_deg(hz);
    UniPoly h(hz.size());
    for (int i = 0; i <= m; ++i)
      h[static_cast<size_t>(i)] = Value::rational(Q, hz[static_cast<size_t>(i)], bi_pow(lc, m - i));
    out.push_back({up_trim(std::move(h)), mult});
  }
}

void factor_monic_squarefree_finite(const UniPoly& part, int mult, const Field& K,
                                    const BigInt& q, std::vector<UPFactor>& out) {
  for (auto& g : ff_factor_monic_squarefree(part, K, q)) out.push_back({std::move(g), mult});
}

bool kt_coeff_is_constant(const Value& c) {
  const auto& fr = std::get<FracPayload>(c.payload());
  return up_deg(fr.num) <= 0 && up_deg(fr.den) == 0;
}

Value kt_coeff_to_base(const Value& c) {
  const auto& fr = std::get<FracPayload>(c.payload());
  const Field base = c.field()->base;
  if (fr.num.empty()) return Value::zero(base);
  return fe_div(fr.num[0], fr.den[0]);
}

void factor_monic_squarefree_kt(const UniPoly& part, int mult, const Field& Kt,
                                std::vector<UPFactor>& out);

void factor_kt_constant_coeffs(const UniPoly& part, int mult, const Field& Kt,
                               std::vector<UPFactor>& out) {
  UniPoly down(part.size());
  for (size_t i = 0; i < part.size(); ++i) down[i] = kt_coeff_to_base(part[i]);
  UPFactorization base = up_factor(down);
  for (auto& f : base.factors) {
    UniPoly up(f.poly.size());
    for (size_t i = 0; i < f.poly.size(); ++i) up[i] = embed(Kt, f.poly[i]);
    out.push_back({std::move(up), mult * f.multiplicity});
  }
}

void factor_monic_squarefree_kt(const UniPoly& part, int mult, const Field& Kt,
                                std::vector<UPFactor>& out) {
  const int n = up_deg(part);
  if (n == 1) {
    out.push_back({part, mult});
    return;
  }
  bool constant = true;
  for (const auto& c : part)
    if (!kt_coeff_is_constant(c)) {
      constant = false;
      break;
    }
  if (constant) {
    factor_kt_constant_coeffs(part, mult, Kt, out);
    return;
  }
  if (n == 2) {
    if (field_char(Kt) == 2)
      fail(ErrorCode::UnsupportedFactorization,
           "quadratics over GF(2)(t) are not supported");
    const Value b = part[1];
    const Value c = part[0];
    const Value four = Value::integer(Kt, 4);
    const Value disc = b * b - four * c;
    if (auto s = fe_sqrt(disc)) {
      const Value two = Value::integer(Kt, 2);
      const Value r1 = (-b + *s) / two;
      const Value r2 = (-b - *s) / two;
      UniPoly f1{-r1, Value::one(Kt)};
      UniPoly f2{-r2, Value::one(Kt)};
      out.push_back({std::move(f1), mult});
      out.push_back({std::move(f2), mult});
    } else {
      out.push_back({part, mult});
    }
    return;
  }
  fail(ErrorCode::UnsupportedFactorization,
       "factorization over " + field_to_string(Kt) +
           " is only supported for constant coefficients or degree <= 2, got degree " +
           std::to_string(n));
}

}  // namespace

// ---------------------------------------------------------------------------
// Public interface.
// ---------------------------------------------------------------------------

Value fq_element_by_index(const Field& f, const BigInt& i) {
  require_internal(f != nullptr, "null field");
  auto q = field_size(f);
  if (!q) fail(ErrorCode::FiniteField, "field is not finite: " + field_to_string(f));
  require_internal(i >= 0 && i < *q, "element index out of range");
  switch (f->kind) {
    case FieldKind::Prime:
      return Value::integer(f, i);
    case FieldKind::Extension: {
      const BigInt b = *field_size(f->base);
      ExtPayload p;
      BigInt rest = i;
      for (int j = 0; j < up_deg(f->minpoly); ++j) {
        p.c.push_back(fq_element_by_index(f->base, rest % b));
        rest /= b;
      }
      return Value::make(f, std::move(p));
    }
    default:
      fail(ErrorCode::Internal, "finite field of unexpected shape");
  }
}

UPFactorization up_factor(const UniPoly& f0) {
  UniPoly f = up_trim(f0);
  if (f.empty()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
  const Field K = up_field(f);
  UPFactorization result;
  result.unit = up_lc(f);
  if (up_deg(f) == 0) return result;

  const UniPoly fm = up_monic(f);
  std::vector<SquarefreePart> parts = up_squarefree_decomposition(fm);

  switch (K->kind) {
    case FieldKind::Rationals:
      for (const auto& pt : parts)
        factor_monic_squarefree_rational(pt.poly, pt.mult, result.factors);
      break;
    case FieldKind::Prime:
      for (const auto& pt : parts)
        factor_monic_squarefree_finite(pt.poly, pt.mult, K, K->p, result.factors);
      break;
    case FieldKind::Extension: {
      auto q = field_size(K);
      if (!q)
        fail(ErrorCode::UnsupportedFactorization,
             "factorization over infinite extensions is not supported: " +
                 field_to_string(K));
      for (const auto& pt : parts)
        factor_monic_squarefree_finite(pt.poly, pt.mult, K, *q, result.factors);
      break;
    }
    case FieldKind::RationalFunctions:
      for (const auto& pt : parts)
        factor_monic_squarefree_kt(pt.poly, pt.mult, K, result.factors);
      break;
  }

  std::sort(result.factors.begin(), result.factors.end(),
            [](const UPFactor& a, const UPFactor& b) {
              if (up_deg(a.poly) != up_deg(b.poly)) return up_deg(a.poly) < up_deg(b.poly);
              int c = 0;
              for (size_t i = a.poly.size(); c == 0 && i-- > 0;)
                c = fe_cmp(a.poly[i], b.poly[i]);
              if (c != 0) return c < 0;
              return a.multiplicity < b.multiplicity;
            });

  UniPoly recon = up_constant(result.unit);
  for (const auto& fac : result.factors)
    recon = up_mul(recon, up_pow(fac.poly, fac.multiplicity));
  require_internal(up_sub(recon, f).empty(), "factorization failed verification");
  return result;
}

bool up_is_irreducible(const UniPoly& f0, const Field& K) {
  UniPoly f = up_trim(f0);
  if (up_deg(f) < 1) return false;
  for (const auto& c : f)
    if (!field_eq(c.field(), K))
      fail(ErrorCode::DescriptorMismatch, "polynomial is not over the stated field");
  if (up_deg(f) == 1) return true;
  UPFactorization fac = up_factor(f);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::vector<Value> up_roots_in_field(const UniPoly& f0) {
  UniPoly f = up_trim(f0);
  std::vector<Value> roots;
  if (up_deg(f) < 1) return roots;
  UPFactorization fac = up_factor(f);
  for (const auto& g : fac.factors)
    if (up_deg(g.poly) == 1) roots.push_back(fe_neg(g.poly[0]));
  std::sort(roots.begin(), roots.end(),
            [](const Value& a, const Value& b) { return fe_cmp(a, b) < 0; });
  return roots;
}

}  // namespace recipdim
