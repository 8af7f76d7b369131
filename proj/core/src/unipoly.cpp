#include "recipdim/unipoly.hpp"

#include <algorithm>
#include <sstream>

namespace recipdim {

UniPoly up_trim(UniPoly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

int up_deg(const UniPoly& f) { return static_cast<int>(f.size()) - 1; }

bool up_is_zero(const UniPoly& f) { return f.empty(); }

const Value& up_lc(const UniPoly& f) {
  require_internal(!f.empty(), "up_lc of zero polynomial");
  return f.back();
}

UniPoly up_zero() { return {}; }

UniPoly up_constant(const Value& c) {
  if (c.is_zero()) return {};
  return {c};
}

UniPoly up_x(const Field& k) { return {Value::zero(k), Value::one(k)}; }

UniPoly up_from_coeffs(std::vector<Value> c) { return up_trim(std::move(c)); }

Field up_field(const UniPoly& f) {
  for (const auto& c : f)
    if (c.valid()) return c.field();
  fail(ErrorCode::Internal, "up_field: cannot infer field of zero polynomial");
}

UniPoly up_add(const UniPoly& a, const UniPoly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  UniPoly r = a;
  if (b.size() > r.size()) r.resize(b.size(), Value::zero(up_field(b)));
  for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
  return up_trim(std::move(r));
}

UniPoly up_neg(const UniPoly& a) {
  UniPoly r = a;
  for (auto& c : r) c = -c;
  return r;
}

UniPoly up_sub(const UniPoly& a, const UniPoly& b) { return up_add(a, up_neg(b)); }

UniPoly up_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  const Field k = up_field(a);
  UniPoly r(a.size() + b.size() - 1, Value::zero(k));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return up_trim(std::move(r));
}

UniPoly up_scale(const UniPoly& a, const Value& c) {
  if (c.is_zero()) return {};
  UniPoly r = a;
  for (auto& x : r) x = x * c;
  return up_trim(std::move(r));
}

UniPoly up_shift(const UniPoly& a, int k) {
  if (a.empty()) return {};
  require_internal(k >= 0, "up_shift: negative shift");
  UniPoly r(a.size() + k, Value::zero(up_field(a)));
  for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
  return r;
}

UniPoly up_pow(const UniPoly& a, const BigInt& e) {
  require_internal(e >= 0, "up_pow: negative exponent");
  if (e == 0) return up_constant(Value::one(up_field(a)));
  UniPoly result;
  UniPoly base = a;
  BigInt n = e;
  bool started = false;
  while (n > 0) {
    if (boost::multiprecision::bit_test(n, 0)) {
      result = started ? up_mul(result, base) : base;
      started = true;
    }
    n >>= 1;
    if (n > 0) base = up_mul(base, base);
  }
  return result;
}

std::pair<UniPoly, UniPoly> up_divmod(const UniPoly& a, const UniPoly& b) {
  if (b.empty()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  const Field k = up_field(b);
  if (a.empty()) return {up_zero(), up_zero()};
  if (a.size() < b.size()) return {up_zero(), a};
  UniPoly r = a;
  UniPoly q(a.size() - b.size() + 1, Value::zero(k));
  const Value lcb_inv = fe_inv(b.back());
  for (int i = static_cast<int>(a.size()) - static_cast<int>(b.size()); i >= 0; --i) {
    size_t top = i + b.size() - 1;
    if (top >= r.size() || r[top].is_zero()) continue;
    Value c = r[top] * lcb_inv;
    q[i] = c;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] - c * b[j];
  }
  return {up_trim(std::move(q)), up_trim(std::move(r))};
}

UniPoly up_div(const UniPoly& a, const UniPoly& b) { return up_divmod(a, b).first; }
UniPoly up_rem(const UniPoly& a, const UniPoly& b) { return up_divmod(a, b).second; }

bool up_divides(const UniPoly& b, const UniPoly& a) {
  if (b.empty()) return a.empty();
  return up_rem(a, b).empty();
}

UniPoly up_monic(const UniPoly& a) {
  require_internal(!a.empty(), "up_monic of zero polynomial");
  if (a.back().is_one()) return a;
  return up_scale(a, fe_inv(a.back()));
}

UniPoly up_gcd(const UniPoly& a0, const UniPoly& b0) {
  UniPoly a = a0, b = b0;
  while (!b.empty()) {
    UniPoly r = up_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  return up_monic(a);
}

ExtGcd up_extgcd(const UniPoly& a, const UniPoly& b) {
  // Invariants: r0 = u0*a + v0*b, r1 = u1*a + v1*b.
  const Field k = up_field(a.empty() ? b : a);
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = up_constant(Value::one(k)), u1 = up_zero();
  UniPoly v0 = up_zero(), v1 = up_constant(Value::one(k));
  while (!r1.empty()) {
    auto [q, r2] = up_divmod(r0, r1);
    UniPoly u2 = up_sub(u0, up_mul(q, u1));
    UniPoly v2 = up_sub(v0, up_mul(q, v1));
    r0 = std::move(r1); r1 = std::move(r2);
    u0 = std::move(u1); u1 = std::move(u2);
    v0 = std::move(v1); v1 = std::move(v2);
  }
  if (r0.empty()) return {r0, u0, v0};
  Value s = fe_inv(r0.back());
  return {up_scale(r0, s), up_scale(u0, s), up_scale(v0, s)};
}

UniPoly up_derivative(const UniPoly& a) {
  if (a.size() <= 1) return {};
  const Field k = up_field(a);
  UniPoly r(a.size() - 1, Value::zero(k));
  for (size_t i = 1; i < a.size(); ++i)
    r[i - 1] = a[i] * Value::integer(k, BigInt(static_cast<long long>(i)));
  return up_trim(std::move(r));
}

Value up_eval(const UniPoly& a, const Value& x) {
  if (a.empty()) return Value::zero(x.field());
  Value acc = Value::zero(x.field());
  for (size_t i = a.size(); i-- > 0;) acc = acc * x + embed(x.field(), a[i]);
  return acc;
}

UniPoly up_compose(const UniPoly& a, const UniPoly& b) {
  if (a.empty()) return {};
  const Field k = up_field(a);
  UniPoly acc = up_zero();
  for (size_t i = a.size(); i-- > 0;)
    acc = up_add(up_mul(acc, b), up_constant(a[i]));
  return acc;
}

UniPoly up_powmod(const UniPoly& a0, const BigInt& e, const UniPoly& m) {
  require_internal(e >= 0 && up_deg(m) >= 1, "up_powmod: bad arguments");
  const Field k = up_field(m);
  UniPoly result = up_constant(Value::one(k));
  UniPoly base = up_rem(a0, m);
  BigInt n = e;
  while (n > 0) {
    if (boost::multiprecision::bit_test(n, 0)) result = up_rem(up_mul(result, base), m);
    n >>= 1;
    if (n > 0) base = up_rem(up_mul(base, base), m);
  }
  return result;
}

std::optional<UniPoly> up_pth_root(const UniPoly& f) {
  if (f.empty()) return f;
  const Field k = up_field(f);
  BigInt p = field_char(k);
  require_internal(p > 0, "up_pth_root in characteristic zero");
  size_t psz = static_cast<size_t>(p);
  if ((f.size() - 1) % psz != 0) return std::nullopt;
  UniPoly r((f.size() - 1) / psz + 1, Value::zero(k));
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    if (i % psz != 0) return std::nullopt;
    auto root = fe_pth_root(f[i]);
    if (!root) return std::nullopt;
    r[i / psz] = *root;
  }
  return up_trim(std::move(r));
}

std::vector<SquarefreePart> up_squarefree_decomposition(const UniPoly& f0) {
  std::vector<SquarefreePart> out;
  if (up_deg(f0) <= 0) return out;
  const Field k = up_field(f0);
  const BigInt p = field_char(k);
  UniPoly f = up_monic(f0);
  UniPoly d = up_derivative(f);

  auto append_scaled = [&out](std::vector<SquarefreePart> sub, int scale) {
    for (auto& part : sub) out.push_back({part.poly, part.mult * scale});
  };

  if (d.empty()) {
    // f = h(x^p); in characteristic p this means f is a p-th power exactly
    // when every coefficient has a p-th root in the coefficient field.
    require_internal(p > 0, "zero derivative of nonconstant polynomial in char 0");
    auto root = up_pth_root(f);
    if (!root)
      fail(ErrorCode::UnsupportedField,
           "inseparable polynomial over an imperfect coefficient field");
    append_scaled(up_squarefree_decomposition(*root), static_cast<int>(p));
    return out;
  }

  UniPoly c = up_gcd(f, d);
  UniPoly w = up_div(f, c);
  int i = 1;
  while (up_deg(w) > 0) {
    UniPoly y = up_gcd(w, c);
    UniPoly z = up_div(w, y);
    if (up_deg(z) > 0) out.push_back({up_monic(z), i});
    ++i;
    w = std::move(y);
    c = up_div(c, w);
  }
  if (up_deg(c) > 0) {
    require_internal(p > 0, "residual gcd factor in characteristic 0");
    auto root = up_pth_root(c);
    if (!root)
      fail(ErrorCode::UnsupportedField,
           "inseparable polynomial over an imperfect coefficient field");
    append_scaled(up_squarefree_decomposition(*root), static_cast<int>(p));
  }
  return out;
}

UniPoly up_squarefree_part(const UniPoly& f) {
  if (up_deg(f) <= 0) return f;
  auto parts = up_squarefree_decomposition(f);
  UniPoly r = up_constant(Value::one(up_field(f)));
  for (const auto& part : parts) r = up_mul(r, part.poly);
  return r;
}

bool up_is_squarefree(const UniPoly& f) {
  if (up_deg(f) <= 0) return true;
  auto parts = up_squarefree_decomposition(f);
  int total = 0;
  for (const auto& part : parts) {
    if (part.mult > 1) return false;
    total += part.mult * up_deg(part.poly);
  }
  return total == up_deg(f);
}

std::optional<UniPoly> up_sqrt(const UniPoly& f) {
  if (f.empty()) return f;
  const Field k = up_field(f);
  if (field_char(k) == 2) fail(ErrorCode::UnsupportedField, "square roots in characteristic 2");
  int n = up_deg(f);
  if (n % 2 != 0) return std::nullopt;
  int m = n / 2;
  auto lead = fe_sqrt(f.back());
  if (!lead) return std::nullopt;
  UniPoly s(m + 1, Value::zero(k));
  s[m] = *lead;
  const Value two_sm_inv = fe_inv(Value::integer(k, 2) * s[m]);
  for (int j = m - 1; j >= 0; --j) {
    // Coefficient of x^(m+j) in s^2 is 2*s[m]*s[j] + sum over interior pairs.
    Value acc = Value::zero(k);
    for (int i = j + 1; i <= m - 1; ++i) {
      int other = m + j - i;
      if (other > i) {
        acc = acc + Value::integer(k, 2) * s[i] * s[other];
      } else if (other == i) {
        acc = acc + s[i] * s[i];
      }
    }
    Value target = (m + j <= n) ? f[m + j] : Value::zero(k);
    s[j] = (target - acc) * two_sm_inv;
  }
  UniPoly cand = up_trim(std::move(s));
  if (up_sub(up_mul(cand, cand), f).empty()) return cand;
  return std::nullopt;
}

std::string up_to_string(const UniPoly& f, const std::string& var) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    std::string cs = fe_to_string(f[i]);
    bool negative = !cs.empty() && cs[0] == '-';
    std::string mag = negative ? cs.substr(1) : cs;
    bool composite = mag.find_first_of("+-*/^ ") != std::string::npos;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? '-' : '+');
    }
    if (i == 0) {
      os << (composite ? "(" + mag + ")" : mag);
      continue;
    }
    bool is_unit_coeff = (mag == "1") && !composite;
    if (!is_unit_coeff) os << (composite ? "(" + mag + ")" : mag) << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

}  // namespace recipdim
