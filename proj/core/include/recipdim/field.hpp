// Exact field towers: Q, GF(p), one optional rational-function layer K(t),
// and algebraic extension layers K[th]/(m) above any stage. Elements carry
// their descriptor and are kept in canonical form at all times (reduced
// fractions with positive denominator, residues in [0,p), extension
// coordinates of degree < deg m, reduced fractions in t with monic
// denominator).
#pragma once

#include "recipdim/bigint.hpp"
#include "recipdim/errors.hpp"

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace recipdim {

enum class FieldKind { Rationals, Prime, Extension, RationalFunctions };

class FieldNode;
using Field = std::shared_ptr<const FieldNode>;

class Value;

// Dense univariate polynomial over a field: c[0] + c[1]*x + ... .
// Invariants: empty vector is the zero polynomial; otherwise back() != 0.
using UniPoly = std::vector<Value>;

// --- element payloads ------------------------------------------------------

struct RatPayload {
  BigInt num;
  BigInt den;  // > 0, gcd(num, den) = 1
};

struct FpPayload {
  BigInt r;  // 0 <= r < p
};

struct ExtPayload {
  std::vector<Value> c;  // coordinates over base, trimmed, size < deg(minpoly)
};

struct FracPayload {
  std::vector<Value> num;  // polynomials in the function variable over base,
  std::vector<Value> den;  // reduced, den monic and nonzero
};

class Value {
 public:
  using Payload = std::variant<RatPayload, FpPayload, ExtPayload, FracPayload>;

  Value() = default;  // unset; arithmetic on it is an internal error

  static Value zero(const Field& f);
  static Value one(const Field& f);
  static Value integer(const Field& f, const BigInt& n);
  static Value rational(const Field& f, const BigInt& num, const BigInt& den);
  // Generator of the top tower layer: th for an extension, t for K(t).
  static Value generator(const Field& f);
  static Value make(const Field& f, Payload payload);  // canonicalizes

  const Field& field() const { return f_; }
  const Payload& payload() const { return v_; }
  bool valid() const { return f_ != nullptr; }
  bool is_zero() const;
  bool is_one() const;

  Value operator+(const Value& o) const;
  Value operator-(const Value& o) const;
  Value operator*(const Value& o) const;
  Value operator/(const Value& o) const;
  Value operator-() const;
  bool operator==(const Value& o) const;
  bool operator!=(const Value& o) const { return !(*this == o); }

 private:
  Field f_;
  Payload v_;
  friend Value fe_make_raw(const Field&, Value::Payload);
};

// --- field descriptors ------------------------------------------------------

class FieldNode {
 public:
  FieldKind kind = FieldKind::Rationals;
  BigInt p;                   // Prime
  Field base;                 // Extension / RationalFunctions
  std::vector<Value> minpoly; // Extension: monic irreducible over base
  std::string gen;            // Extension generator / function variable name
};

Field make_rationals();
Field make_prime_field(const BigInt& p);  // error NotPrime
// base must be Q or GF(p): at most one rational-function layer per tower.
Field make_rational_functions(const Field& base, const std::string& var = "t");
// Verifies minpoly is irreducible over base (error ReduciblePolynomial);
// normalizes it monic. deg >= 2 required.
Field ext_adjoin(const Field& base, const UniPoly& minpoly,
                 const std::string& gen = "z");
// Same construction without the irreducibility check, for minpolys whose
// irreducibility was established elsewhere (e.g. proven over K and lifted to
// K(t), where direct factorization is unavailable).
Field ext_adjoin_trusted(const Field& base, const UniPoly& minpoly,
                         const std::string& gen = "z");

bool field_eq(const Field& a, const Field& b);
BigInt field_char(const Field& f);
// Number of elements for finite fields; nullopt for infinite ones.
std::optional<BigInt> field_size(const Field& f);
std::string field_to_string(const Field& f);
// Accepts "Q", "GF(p)", "Q(t)", "GF(p)(t)". Error UnsupportedField.
Field parse_field_spec(const std::string& spec);

// True if `sub` is a stage of the tower `sup` (reflexive).
bool field_is_subtower(const Field& sub, const Field& sup);
// Re-express x in the larger tower `target` (error DescriptorMismatch if
// x.field() is not a stage of it).
Value embed(const Field& target, const Value& x);

// --- arithmetic -------------------------------------------------------------

Value fe_add(const Value& a, const Value& b);
Value fe_sub(const Value& a, const Value& b);
Value fe_mul(const Value& a, const Value& b);
Value fe_div(const Value& a, const Value& b);  // error DivisionByZero
Value fe_neg(const Value& a);
Value fe_inv(const Value& a);                  // error DivisionByZero
Value fe_pow(const Value& a, const BigInt& e); // negative e inverts first
// Identity on canonical values; property tests assert idempotence.
Value fe_normalize(const Value& a);

bool fe_eq(const Value& a, const Value& b);
// Total order on canonical payloads (for deterministic sorting only;
// unrelated to any field order).
int fe_cmp(const Value& a, const Value& b);

// Squareness over Q, odd GF(p), and K(t) over those bases; returns a square
// root witness when the element is a square. Error UnsupportedField.
std::optional<Value> fe_sqrt(const Value& a);
bool fe_is_square(const Value& a);

// p-th root in characteristic p > 0 when it exists (nullopt otherwise).
std::optional<Value> fe_pth_root(const Value& a);

std::string fe_to_string(const Value& a);

}  // namespace recipdim
