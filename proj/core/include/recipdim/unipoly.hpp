// Dense univariate polynomial arithmetic over any tower field: division,
// gcds, squarefree decomposition (characteristic-p aware), evaluation,
// modular exponentiation, square and p-th roots, rendering. These helpers
// back both the K(t) payload arithmetic and the factorization engine.
#pragma once

#include "recipdim/field.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace recipdim {

UniPoly up_trim(UniPoly f);
int up_deg(const UniPoly& f);  // -1 for the zero polynomial
bool up_is_zero(const UniPoly& f);
const Value& up_lc(const UniPoly& f);  // leading coefficient, f != 0

UniPoly up_zero();
UniPoly up_constant(const Value& c);
UniPoly up_x(const Field& k);                    // the monomial x
UniPoly up_from_coeffs(std::vector<Value> c);    // trims

UniPoly up_add(const UniPoly& a, const UniPoly& b);
UniPoly up_sub(const UniPoly& a, const UniPoly& b);
UniPoly up_neg(const UniPoly& a);
UniPoly up_mul(const UniPoly& a, const UniPoly& b);
UniPoly up_scale(const UniPoly& a, const Value& c);
UniPoly up_shift(const UniPoly& a, int k);  // multiply by x^k
UniPoly up_pow(const UniPoly& a, const BigInt& e);

// Euclidean division by a nonzero divisor with invertible leading coefficient
// (always true over a field). Returns {quotient, remainder}.
std::pair<UniPoly, UniPoly> up_divmod(const UniPoly& a, const UniPoly& b);
UniPoly up_div(const UniPoly& a, const UniPoly& b);
UniPoly up_rem(const UniPoly& a, const UniPoly& b);
bool up_divides(const UniPoly& b, const UniPoly& a);  // b | a

UniPoly up_monic(const UniPoly& a);                 // a != 0
UniPoly up_gcd(const UniPoly& a, const UniPoly& b); // monic (or zero)
// g = gcd (monic), and u, v with u*a + v*b = g.
struct ExtGcd {
  UniPoly g, u, v;
};
ExtGcd up_extgcd(const UniPoly& a, const UniPoly& b);

UniPoly up_derivative(const UniPoly& a);
Value up_eval(const UniPoly& a, const Value& x);
// Compose: a(b(x)).
UniPoly up_compose(const UniPoly& a, const UniPoly& b);

// a^e mod m (m nonconstant).
UniPoly up_powmod(const UniPoly& a, const BigInt& e, const UniPoly& m);

// Squarefree decomposition: monic pairwise-coprime squarefree parts g_i with
// multiplicities e_i such that input = unit * prod g_i^{e_i}. Handles
// characteristic p via p-th roots; error UnsupportedField when a coefficient
// p-th root is required but does not exist in the coefficient field
// (inseparable over an imperfect base such as GF(p)(t)).
struct SquarefreePart {
  UniPoly poly;
  int mult;
};
std::vector<SquarefreePart> up_squarefree_decomposition(const UniPoly& f);
UniPoly up_squarefree_part(const UniPoly& f);  // product of the g_i
bool up_is_squarefree(const UniPoly& f);

// Exact polynomial square root (char != 2) by top-down coefficient matching;
// nullopt if f is not a square.
std::optional<UniPoly> up_sqrt(const UniPoly& f);
// Exact p-th root in characteristic p when it exists.
std::optional<UniPoly> up_pth_root(const UniPoly& f);

std::string up_to_string(const UniPoly& f, const std::string& var);

// Field of the coefficients (polynomial must be nonzero or carry at least
// one constructed coefficient; zero polynomials are field-agnostic so
// callers pass the field explicitly where needed).
Field up_field(const UniPoly& f);

}  // namespace recipdim
