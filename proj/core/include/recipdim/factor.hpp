// Univariate factorization over the supported exact fields.
//
// Complete factorization is available over Q and over finite fields (prime
// fields and finite algebraic extensions of them).  Over rational-function
// fields K(t) three cases are handled exactly: polynomials whose coefficients
// are constants (factored over K, which is correct because K is relatively
// algebraically closed in K(t)), linear polynomials, and quadratics in odd or
// zero characteristic (via the discriminant).  Anything else raises
// ErrorCode::UnsupportedFactorization rather than guessing.
#pragma once

#include "recipdim/field.hpp"
#include "recipdim/unipoly.hpp"

#include <vector>

namespace recipdim {

struct UPFactor {
  UniPoly poly;  // monic irreducible
  int multiplicity = 1;
};

struct UPFactorization {
  Value unit;  // input == unit * prod(poly_i ^ mult_i)
  std::vector<UPFactor> factors;
};

// Factor a nonzero univariate polynomial over the field its coefficients
// live in.  Factors come back monic, irreducible, sorted deterministically
// (by degree, then coefficientwise).  The reconstructed product is verified
// internally before returning.
UPFactorization up_factor(const UniPoly& f);

// True iff f has degree >= 1 and is irreducible over K.  The coefficients of
// f must live in K.
bool up_is_irreducible(const UniPoly& f, const Field& K);

// Roots of f that lie in the coefficient field itself, without multiplicity,
// sorted deterministically.
std::vector<Value> up_roots_in_field(const UniPoly& f);

// Bijection [0, q) -> F_q for a finite field (prime field or finite tower of
// extensions).  Index 0 maps to zero.  Fails with ErrorCode::FiniteField if
// the field is infinite.
Value fq_element_by_index(const Field& f, const BigInt& i);

}  // namespace recipdim
