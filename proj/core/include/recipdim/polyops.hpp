// Polynomial-level decision helpers built on the factorization kernel:
// gcd and squarefree part for univariate or binary-homogeneous shapes,
// factorization of univariate polynomials and of binary forms (with the
// split-off variable powers tracked explicitly), and exact Gram-matrix data
// for quadratic forms in characteristic != 2.
#pragma once

#include "recipdim/factor.hpp"
#include "recipdim/multipoly.hpp"

#include <string>
#include <vector>

namespace recipdim {

struct MPFactor {
  MultiPoly poly;
  int multiplicity = 1;
};

struct MPFactorization {
  Value unit;
  std::vector<MPFactor> factors;  // irreducible over the coefficient field
  // unit * prod poly^multiplicity reconstructs the input (verified).
};

// Monic gcd for inputs that are univariate (at most one occurring variable
// between them) or binary homogeneous forms in the same two variables.
// Error UnsupportedShape otherwise.
MultiPoly gcd_poly(const MultiPoly& f, const MultiPoly& g);

// Remainder of f under multivariate division by the single divisor g in
// graded-lex order. One polynomial is a Groebner basis of the ideal it
// generates, so this is the canonical normal form modulo (g): f lies in
// K + (g) exactly when the result is constant. Error on zero g.
MultiPoly reduce_mod_principal(const MultiPoly& f, const MultiPoly& g);

// f / gcd(f, f'), monic, for the same shapes; equals (an associate of) f
// exactly when f is separable. In characteristic p an input of the shape
// h(x^p) has derivative 0 and squarefree part 1, correctly flagging
// inseparability.
MultiPoly squarefree_part(const MultiPoly& f);

// Complete factorization of a univariate polynomial into irreducibles over
// its exact coefficient field. Field scope matches the kernel: Q, GF(q), and
// K(t) inputs of degree <= 2 or with constant coefficients.
MPFactorization factor_univariate(const MultiPoly& f);

// Factorization of a nonzero homogeneous form in (at most) two occurring
// variables into irreducible forms over the field; the powers of each
// variable split off by dehomogenization appear as explicit linear factors.
MPFactorization factor_binary_form(const MultiPoly& f);

struct QuadraticFormData {
  std::vector<std::vector<Value>> gram;  // symmetric, f = x^T gram x
  int rank = 0;
  // Diagonal entries d_i and congruence transform P (columns are the new
  // basis) with P^T gram P = diag(d). Substituting x = P y gives
  // f = sum d_i y_i^2.
  std::vector<Value> diag;
  std::vector<std::vector<Value>> transform;
  bool product_of_linear_forms_over_closure = false;  // rank <= 2
  bool splits_over_field = false;  // two (possibly equal) K-linear factors
  bool double_line = false;        // rank 1: a linear factor of multiplicity 2
};

// Exact Gram data of a homogeneous degree-2 form in any number of variables.
// Errors: CharacteristicTwo; WrongDegree (degree != 2 or not homogeneous).
QuadraticFormData quadratic_form_data(const MultiPoly& f);

}  // namespace recipdim
