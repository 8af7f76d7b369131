#include "recipdim/field.hpp"

#include "recipdim/factor.hpp"
#include "recipdim/unipoly.hpp"

#include <sstream>

namespace recipdim {

namespace {

const RatPayload& as_rat(const Value& v) { return std::get<RatPayload>(v.payload()); }
const FpPayload& as_fp(const Value& v) { return std::get<FpPayload>(v.payload()); }
const ExtPayload& as_ext(const Value& v) { return std::get<ExtPayload>(v.payload()); }
const FracPayload& as_frac(const Value& v) { return std::get<FracPayload>(v.payload()); }

void check_valid(const Value& v) {
  require_internal(v.valid(), "arithmetic on default-constructed value");
}

void check_same_field(const Value& a, const Value& b) {
  check_valid(a);
  check_valid(b);
  if (!field_eq(a.field(), b.field()))
    fail(ErrorCode::DescriptorMismatch,
         "operands live in different fields: " + field_to_string(a.field()) +
             " vs " + field_to_string(b.field()));
}

}  // namespace

Value fe_make_raw(const Field& f, Value::Payload payload);

// --- canonical construction -------------------------------------------------

Value Value::make(const Field& f, Payload payload) {
  require_internal(f != nullptr, "Value::make with null field");
  switch (f->kind) {
    case FieldKind::Rationals: {
      auto* r = std::get_if<RatPayload>(&payload);
      require_internal(r, "payload kind mismatch (Rationals)");
      if (r->den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
      if (r->den < 0) {
        r->num = -r->num;
        r->den = -r->den;
      }
      BigInt g = bi_gcd(r->num < 0 ? BigInt(-r->num) : r->num, r->den);
      if (g > 1) {
        r->num /= g;
        r->den /= g;
      }
      if (r->num == 0) r->den = 1;
      break;
    }
    case FieldKind::Prime: {
      auto* r = std::get_if<FpPayload>(&payload);
      require_internal(r, "payload kind mismatch (Prime)");
      r->r = bi_mod(r->r, f->p);
      break;
    }
    case FieldKind::Extension: {
      auto* r = std::get_if<ExtPayload>(&payload);
      require_internal(r, "payload kind mismatch (Extension)");
      UniPoly c = up_trim(std::move(r->c));
      if (up_deg(c) >= up_deg(f->minpoly)) c = up_rem(c, f->minpoly);
      r->c = std::move(c);
      break;
    }
    case FieldKind::RationalFunctions: {
      auto* r = std::get_if<FracPayload>(&payload);
      require_internal(r, "payload kind mismatch (RationalFunctions)");
      UniPoly n = up_trim(std::move(r->num));
      UniPoly d = up_trim(std::move(r->den));
      if (d.empty()) fail(ErrorCode::DivisionByZero, "zero denominator in K(t)");
      if (n.empty()) {
        d = {Value::one(f->base)};
      } else {
        UniPoly g = up_gcd(n, d);
        if (up_deg(g) >= 1) {
          n = up_div(n, g);
          d = up_div(d, g);
        }
        if (!d.back().is_one()) {
          Value s = fe_inv(d.back());
          n = up_scale(n, s);
          d = up_scale(d, s);
        }
      }
      r->num = std::move(n);
      r->den = std::move(d);
      break;
    }
  }
  return fe_make_raw(f, std::move(payload));
}

Value fe_make_raw(const Field& f, Value::Payload payload) {
  Value v;
  v.f_ = f;
  v.v_ = std::move(payload);
  return v;
}

Value Value::zero(const Field& f) {
  require_internal(f != nullptr, "Value::zero with null field");
  switch (f->kind) {
    case FieldKind::Rationals: return fe_make_raw(f, RatPayload{0, 1});
    case FieldKind::Prime: return fe_make_raw(f, FpPayload{0});
    case FieldKind::Extension: return fe_make_raw(f, ExtPayload{{}});
    case FieldKind::RationalFunctions:
      return fe_make_raw(f, FracPayload{{}, {Value::one(f->base)}});
  }
  fail(ErrorCode::Internal, "unreachable");
}

Value Value::one(const Field& f) { return Value::integer(f, 1); }

Value Value::integer(const Field& f, const BigInt& n) {
  require_internal(f != nullptr, "Value::integer with null field");
  switch (f->kind) {
    case FieldKind::Rationals: return fe_make_raw(f, RatPayload{n, 1});
    case FieldKind::Prime: return fe_make_raw(f, FpPayload{bi_mod(n, f->p)});
    case FieldKind::Extension: {
      Value b = Value::integer(f->base, n);
      ExtPayload p;
      if (!b.is_zero()) p.c.push_back(b);
      return fe_make_raw(f, std::move(p));
    }
    case FieldKind::RationalFunctions: {
      Value b = Value::integer(f->base, n);
      FracPayload p;
      if (!b.is_zero()) p.num.push_back(b);
      p.den.push_back(Value::one(f->base));
      return fe_make_raw(f, std::move(p));
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

Value Value::rational(const Field& f, const BigInt& num, const BigInt& den) {
  if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
  return fe_div(Value::integer(f, num), Value::integer(f, den));
}

Value Value::generator(const Field& f) {
  require_internal(f != nullptr, "Value::generator with null field");
  switch (f->kind) {
    case FieldKind::Extension: {
      ExtPayload p;
      p.c = {Value::zero(f->base), Value::one(f->base)};
      return Value::make(f, std::move(p));
    }
    case FieldKind::RationalFunctions: {
      FracPayload p;
      p.num = {Value::zero(f->base), Value::one(f->base)};
      p.den = {Value::one(f->base)};
      return fe_make_raw(f, std::move(p));
    }
    default:
      fail(ErrorCode::UnsupportedField, "field has no generator: " + field_to_string(f));
  }
}

bool Value::is_zero() const {
  check_valid(*this);
  switch (f_->kind) {
    case FieldKind::Rationals: return as_rat(*this).num == 0;
    case FieldKind::Prime: return as_fp(*this).r == 0;
    case FieldKind::Extension: return as_ext(*this).c.empty();
    case FieldKind::RationalFunctions: return as_frac(*this).num.empty();
  }
  return false;
}

bool Value::is_one() const {
  check_valid(*this);
  switch (f_->kind) {
    case FieldKind::Rationals: {
      const auto& r = as_rat(*this);
      return r.num == 1 && r.den == 1;
    }
    case FieldKind::Prime: return as_fp(*this).r == 1;
    case FieldKind::Extension: {
      const auto& c = as_ext(*this).c;
      return c.size() == 1 && c[0].is_one();
    }
    case FieldKind::RationalFunctions: {
      const auto& fr = as_frac(*this);
      return fr.num.size() == 1 && fr.num[0].is_one() && fr.den.size() == 1 &&
             fr.den[0].is_one();
    }
  }
  return false;
}

Value Value::operator+(const Value& o) const { return fe_add(*this, o); }
Value Value::operator-(const Value& o) const { return fe_sub(*this, o); }
Value Value::operator*(const Value& o) const { return fe_mul(*this, o); }
Value Value::operator/(const Value& o) const { return fe_div(*this, o); }
Value Value::operator-() const { return fe_neg(*this); }
bool Value::operator==(const Value& o) const { return fe_eq(*this, o); }

// --- field constructors ------------------------------------------------------

Field make_rationals() {
  static const Field q = [] {
    auto n = std::make_shared<FieldNode>();
    n->kind = FieldKind::Rationals;
    return Field(n);
  }();
  return q;
}

Field make_prime_field(const BigInt& p) {
  if (!bi_is_prime(p)) fail(ErrorCode::NotPrime, "modulus " + p.str() + " is not prime");
  auto n = std::make_shared<FieldNode>();
  n->kind = FieldKind::Prime;
  n->p = p;
  return n;
}

Field make_rational_functions(const Field& base, const std::string& var) {
  require_internal(base != nullptr, "null base field");
  if (base->kind != FieldKind::Rationals && base->kind != FieldKind::Prime)
    fail(ErrorCode::UnsupportedField,
         "rational-function layer must sit directly over Q or GF(p)");
  auto n = std::make_shared<FieldNode>();
  n->kind = FieldKind::RationalFunctions;
  n->base = base;
  n->gen = var;
  return n;
}

static Field ext_adjoin_impl(const Field& base, const UniPoly& minpoly,
                             const std::string& gen, bool check) {
  require_internal(base != nullptr, "null base field");
  UniPoly m = up_trim(minpoly);
  if (up_deg(m) < 2)
    fail(ErrorCode::WrongDegree, "extension minimal polynomial must have degree >= 2");
  m = up_monic(m);
  for (const auto& c : m)
    if (!field_eq(c.field(), base))
      fail(ErrorCode::DescriptorMismatch, "minimal polynomial not over the base field");
  if (check && !up_is_irreducible(m, base))
    fail(ErrorCode::ReduciblePolynomial,
         "minimal polynomial is reducible over " + field_to_string(base));
  auto n = std::make_shared<FieldNode>();
  n->kind = FieldKind::Extension;
  n->base = base;
  n->minpoly = std::move(m);
  n->gen = gen;
  return n;
}

Field ext_adjoin(const Field& base, const UniPoly& minpoly, const std::string& gen) {
  return ext_adjoin_impl(base, minpoly, gen, true);
}

Field ext_adjoin_trusted(const Field& base, const UniPoly& minpoly,
                         const std::string& gen) {
  return ext_adjoin_impl(base, minpoly, gen, false);
}

bool field_eq(const Field& a, const Field& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FieldKind::Rationals: return true;
    case FieldKind::Prime: return a->p == b->p;
    case FieldKind::RationalFunctions:
      return a->gen == b->gen && field_eq(a->base, b->base);
    case FieldKind::Extension: {
      if (a->gen != b->gen || !field_eq(a->base, b->base)) return false;
      if (a->minpoly.size() != b->minpoly.size()) return false;
      for (size_t i = 0; i < a->minpoly.size(); ++i)
        if (!fe_eq(a->minpoly[i], b->minpoly[i])) return false;
      return true;
    }
  }
  return false;
}

BigInt field_char(const Field& f) {
  require_internal(f != nullptr, "field_char of null field");
  switch (f->kind) {
    case FieldKind::Rationals: return 0;
    case FieldKind::Prime: return f->p;
    default: return field_char(f->base);
  }
}

std::optional<BigInt> field_size(const Field& f) {
  require_internal(f != nullptr, "field_size of null field");
  switch (f->kind) {
    case FieldKind::Rationals: return std::nullopt;
    case FieldKind::Prime: return f->p;
    case FieldKind::RationalFunctions: return std::nullopt;
    case FieldKind::Extension: {
      auto b = field_size(f->base);
      if (!b) return std::nullopt;
      BigInt q = 1;
      for (int i = 0; i < up_deg(f->minpoly); ++i) q *= *b;
      return q;
    }
  }
  return std::nullopt;
}

std::string field_to_string(const Field& f) {
  if (!f) return "<null>";
  switch (f->kind) {
    case FieldKind::Rationals: return "Q";
    case FieldKind::Prime: return "GF(" + f->p.str() + ")";
    case FieldKind::RationalFunctions:
      return field_to_string(f->base) + "(" + f->gen + ")";
    case FieldKind::Extension:
      return field_to_string(f->base) + "[" + f->gen + "]/(" +
             up_to_string(f->minpoly, f->gen) + ")";
  }
  return "<unknown>";
}

Field parse_field_spec(const std::string& spec0) {
  std::string s;
  for (char c : spec0)
    if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
  bool with_t = false;
  if (s.size() >= 3 && s.substr(s.size() - 3) == "(t)") {
    with_t = true;
    s = s.substr(0, s.size() - 3);
  }
  Field base;
  if (s == "Q") {
    base = make_rationals();
  } else if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
    std::string digits = s.substr(3, s.size() - 4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      fail(ErrorCode::UnsupportedField, "bad field spec: " + spec0);
    base = make_prime_field(BigInt(digits));
  } else {
    fail(ErrorCode::UnsupportedField,
         "bad field spec (expected Q, GF(p), Q(t), GF(p)(t)): " + spec0);
  }
  return with_t ? make_rational_functions(base, "t") : base;
}

bool field_is_subtower(const Field& sub, const Field& sup) {
  if (field_eq(sub, sup)) return true;
  if (!sup) return false;
  if (sup->kind == FieldKind::Extension || sup->kind == FieldKind::RationalFunctions)
    return field_is_subtower(sub, sup->base);
  return false;
}

Value embed(const Field& target, const Value& x) {
  check_valid(x);
  if (field_eq(x.field(), target)) return fe_make_raw(target, x.payload());
  if (!target)
    fail(ErrorCode::DescriptorMismatch, "embed into null field");
  if (target->kind == FieldKind::Extension) {
    Value b = embed(target->base, x);
    ExtPayload p;
    if (!b.is_zero()) p.c.push_back(b);
    return fe_make_raw(target, std::move(p));
  }
  if (target->kind == FieldKind::RationalFunctions) {
    Value b = embed(target->base, x);
    FracPayload p;
    if (!b.is_zero()) p.num.push_back(b);
    p.den.push_back(Value::one(target->base));
    return fe_make_raw(target, std::move(p));
  }
  fail(ErrorCode::DescriptorMismatch,
       "cannot embed " + field_to_string(x.field()) + " into " + field_to_string(target));
}

// --- arithmetic --------------------------------------------------------------

Value fe_add(const Value& a, const Value& b) {
  check_same_field(a, b);
  const Field& f = a.field();
  switch (f->kind) {
    case FieldKind::Rationals: {
      const auto& x = as_rat(a);
      const auto& y = as_rat(b);
      return Value::make(f, RatPayload{x.num * y.den + y.num * x.den, x.den * y.den});
    }
    case FieldKind::Prime:
      return Value::make(f, FpPayload{as_fp(a).r + as_fp(b).r});
    case FieldKind::Extension:
      return fe_make_raw(f, ExtPayload{up_add(as_ext(a).c, as_ext(b).c)});
    case FieldKind::RationalFunctions: {
      const auto& x = as_frac(a);
      const auto& y = as_frac(b);
      UniPoly n = up_add(up_mul(x.num, y.den), up_mul(y.num, x.den));
      UniPoly d = up_mul(x.den, y.den);
      return Value::make(f, FracPayload{std::move(n), std::move(d)});
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

Value fe_neg(const Value& a) {
  check_valid(a);
  const Field& f = a.field();
  switch (f->kind) {
    case FieldKind::Rationals: {
      const auto& x = as_rat(a);
      return fe_make_raw(f, RatPayload{-x.num, x.den});
    }
    case FieldKind::Prime:
      return Value::make(f, FpPayload{-as_fp(a).r});
    case FieldKind::Extension:
      return fe_make_raw(f, ExtPayload{up_neg(as_ext(a).c)});
    case FieldKind::RationalFunctions: {
      const auto& x = as_frac(a);
      return fe_make_raw(f, FracPayload{up_neg(x.num), x.den});
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

Value fe_sub(const Value& a, const Value& b) { return fe_add(a, fe_neg(b)); }

Value fe_mul(const Value& a, const Value& b) {
  check_same_field(a, b);
  const Field& f = a.field();
  switch (f->kind) {
    case FieldKind::Rationals: {
      const auto& x = as_rat(a);
      const auto& y = as_rat(b);
      return Value::make(f, RatPayload{x.num * y.num, x.den * y.den});
    }
    case FieldKind::Prime:
      return Value::make(f, FpPayload{as_fp(a).r * as_fp(b).r});
    case FieldKind::Extension: {
      UniPoly prod = up_mul(as_ext(a).c, as_ext(b).c);
      if (up_deg(prod) >= up_deg(f->minpoly)) prod = up_rem(prod, f->minpoly);
      return fe_make_raw(f, ExtPayload{std::move(prod)});
    }
    case FieldKind::RationalFunctions: {
      const auto& x = as_frac(a);
      const auto& y = as_frac(b);
      return Value::make(f, FracPayload{up_mul(x.num, y.num), up_mul(x.den, y.den)});
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

Value fe_inv(const Value& a) {
  check_valid(a);
  if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
  const Field& f = a.field();
  switch (f->kind) {
    case FieldKind::Rationals: {
      const auto& x = as_rat(a);
      return Value::make(f, RatPayload{x.den, x.num});
    }
    case FieldKind::Prime:
      return fe_make_raw(f, FpPayload{bi_invmod(as_fp(a).r, f->p)});
    case FieldKind::Extension: {
      auto eg = up_extgcd(as_ext(a).c, f->minpoly);
      if (up_deg(eg.g) != 0)
        fail(ErrorCode::DivisionByZero,
             "non-invertible element (reducible modulus?) in " + field_to_string(f));
      UniPoly u = eg.u;  // already scaled so that g = 1
      if (up_deg(u) >= up_deg(f->minpoly)) u = up_rem(u, f->minpoly);
      return fe_make_raw(f, ExtPayload{std::move(u)});
    }
    case FieldKind::RationalFunctions: {
      const auto& x = as_frac(a);
      return Value::make(f, FracPayload{x.den, x.num});
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

Value fe_div(const Value& a, const Value& b) {
  if (!b.valid() || b.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
  return fe_mul(a, fe_inv(b));
}

Value fe_pow(const Value& a, const BigInt& e) {
  check_valid(a);
  if (e < 0) return fe_pow(fe_inv(a), -e);
  Value result = Value::one(a.field());
  Value base = a;
  BigInt n = e;
  while (n > 0) {
    if (boost::multiprecision::bit_test(n, 0)) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Value fe_normalize(const Value& a) {
  check_valid(a);
  return Value::make(a.field(), a.payload());
}

bool fe_eq(const Value& a, const Value& b) {
  if (!a.valid() || !b.valid()) return a.valid() == b.valid();
  if (!field_eq(a.field(), b.field())) return false;
  return fe_cmp(a, b) == 0;
}

static int cmp_bigint(const BigInt& a, const BigInt& b) {
  if (a < b) return -1;
  if (a > b) return 1;
  return 0;
}

static int cmp_vec(const std::vector<Value>& a, const std::vector<Value>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    int c = fe_cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

int fe_cmp(const Value& a, const Value& b) {
  check_same_field(a, b);
  switch (a.field()->kind) {
    case FieldKind::Rationals: {
      const auto& x = as_rat(a);
      const auto& y = as_rat(b);
      return cmp_bigint(x.num * y.den, y.num * x.den);
    }
    case FieldKind::Prime:
      return cmp_bigint(as_fp(a).r, as_fp(b).r);
    case FieldKind::Extension:
      return cmp_vec(as_ext(a).c, as_ext(b).c);
    case FieldKind::RationalFunctions: {
      const auto& x = as_frac(a);
      const auto& y = as_frac(b);
      int c = cmp_vec(x.den, y.den);
      if (c != 0) return c;
      return cmp_vec(x.num, y.num);
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

std::optional<Value> fe_sqrt(const Value& a) {
  check_valid(a);
  const Field& f = a.field();
  switch (f->kind) {
    case FieldKind::Rationals: {
      const auto& x = as_rat(a);
      if (x.num < 0) return std::nullopt;
      auto sn = bi_exact_sqrt(x.num);
      auto sd = bi_exact_sqrt(x.den);
      if (!sn || !sd) return std::nullopt;
      return fe_make_raw(f, RatPayload{*sn, *sd});
    }
    case FieldKind::Prime: {
      if (f->p == 2)
        fail(ErrorCode::UnsupportedField, "squareness over GF(2) is not supported");
      auto r = bi_sqrt_mod(as_fp(a).r, f->p);
      if (!r) return std::nullopt;
      return fe_make_raw(f, FpPayload{*r});
    }
    case FieldKind::Extension:
      fail(ErrorCode::UnsupportedField,
           "squareness over algebraic extensions is not supported");
    case FieldKind::RationalFunctions: {
      if (field_char(f) == 2)
        fail(ErrorCode::UnsupportedField, "squareness over GF(2)(t) is not supported");
      const auto& x = as_frac(a);
      if (x.num.empty()) return Value::zero(f);
      auto sn = up_sqrt(x.num);
      if (!sn) return std::nullopt;
      auto sd = up_sqrt(x.den);
      if (!sd) return std::nullopt;
      return Value::make(f, FracPayload{*sn, *sd});
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

bool fe_is_square(const Value& a) { return fe_sqrt(a).has_value(); }

std::optional<Value> fe_pth_root(const Value& a) {
  check_valid(a);
  const Field& f = a.field();
  const BigInt p = field_char(f);
  require_internal(p > 0, "fe_pth_root in characteristic zero");
  switch (f->kind) {
    case FieldKind::Prime:
      return a;  // Frobenius is the identity on the prime field
    case FieldKind::Extension: {
      auto q = field_size(f);
      if (!q)
        fail(ErrorCode::UnsupportedField,
             "p-th roots over infinite characteristic-p extensions are not supported");
      Value r = fe_pow(a, *q / p);
      return r;
    }
    case FieldKind::RationalFunctions: {
      const auto& x = as_frac(a);
      auto rn = up_pth_root(x.num);
      if (!rn) return std::nullopt;
      auto rd = up_pth_root(x.den);
      if (!rd) return std::nullopt;
      return Value::make(f, FracPayload{*rn, *rd});
    }
    default:
      fail(ErrorCode::Internal, "fe_pth_root over the rationals");
  }
}

std::string fe_to_string(const Value& a) {
  check_valid(a);
  const Field& f = a.field();
  switch (f->kind) {
    case FieldKind::Rationals: {
      const auto& x = as_rat(a);
      if (x.den == 1) return x.num.str();
      return x.num.str() + "/" + x.den.str();
    }
    case FieldKind::Prime:
      return as_fp(a).r.str();
    case FieldKind::Extension:
      if (a.is_zero()) return "0";
      return up_to_string(as_ext(a).c, f->gen);
    case FieldKind::RationalFunctions: {
      const auto& x = as_frac(a);
      if (x.num.empty()) return "0";
      std::string ns = up_to_string(x.num, f->gen);
      if (up_deg(x.den) == 0 && x.den[0].is_one()) return ns;
      std::string ds = up_to_string(x.den, f->gen);
      return "(" + ns + ")/(" + ds + ")";
    }
  }
  fail(ErrorCode::Internal, "unreachable");
}

}  // namespace recipdim
