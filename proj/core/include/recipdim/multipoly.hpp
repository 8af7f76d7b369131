// Sparse exact multivariate polynomials over the field towers: graded-lex
// term order, parsing/formatting, homogenization, leading forms, partial
// derivatives, substitution, Sylvester resultants, and exact single-divisor
// division. The representation is a map from exponent vectors to nonzero
// coefficients, ordered leading-term-first for deterministic output.
#pragma once

#include "recipdim/field.hpp"
#include "recipdim/unipoly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace recipdim {

using ExpVec = std::vector<int>;

// Graded lexicographic order, descending: higher total degree first, ties by
// lexicographic comparison with earlier variables weighing more. Map
// iteration therefore starts at the leading term.
struct GrlexGreater {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<ExpVec, Value, GrlexGreater>;

  MultiPoly() = default;  // unset; arithmetic on it is an internal error

  static MultiPoly zero(const Field& k, std::vector<std::string> vars);
  static MultiPoly constant(const Field& k, std::vector<std::string> vars,
                            const Value& c);
  static MultiPoly variable(const Field& k, std::vector<std::string> vars,
                            const std::string& name);
  static MultiPoly monomial(const Field& k, std::vector<std::string> vars,
                            ExpVec exp, const Value& c);

  const Field& field() const { return k_; }
  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool valid() const { return k_ != nullptr; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Value of a constant polynomial (zero included).
  Value constant_value() const;
  int total_degree() const;            // -1 for the zero polynomial
  int degree_in(const std::string& var) const;
  int var_index(const std::string& var) const;  // -1 if absent
  // Coefficient of an exponent vector (zero Value if absent).
  Value coeff(const ExpVec& e) const;
  // Variables that actually occur with positive exponent.
  std::vector<std::string> occurring_vars() const;
  bool is_homogeneous() const;  // zero counts as homogeneous

  // Accumulate c into the term at e, dropping the term if the sum is zero.
  void add_term(const ExpVec& e, const Value& c);

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Value& c) const;
  MultiPoly pow(int e) const;  // e >= 0
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

 private:
  Field k_;
  std::vector<std::string> vars_;
  TermMap terms_;
};

// A polynomial together with its certified common term degree.
struct HomogeneousForm {
  MultiPoly poly;
  int degree = 0;
};

// Grammar: integer literals, declared variable names, + - * ^, parentheses;
// implicit multiplication is not accepted. Errors: SyntaxError (with 1-based
// position in the message), UnknownVariable.
MultiPoly poly_parse(const std::string& text,
                     const std::vector<std::string>& vars, const Field& k);
// Canonical rendering: terms in descending graded-lex order, explicit '*'
// and '^', no spaces. Integer-coefficient output re-parses to the same
// polynomial; composite coefficients (fractions, extension or K(t) elements)
// are parenthesized for display.
std::string poly_format(const MultiPoly& f);

// Sum of the terms of maximal total degree. Error ZeroPolynomial.
HomogeneousForm leading_form(const MultiPoly& f);

// Prepends `newvar` to the variable list and raises every term to total
// degree deg f. Errors: VariableClash (newvar already declared),
// ZeroPolynomial.
HomogeneousForm homogenize(const MultiPoly& f, const std::string& newvar);
// Sets `var` to 1 and removes it from the variable list. Error VariableClash
// when var is not declared.
MultiPoly dehomogenize(const MultiPoly& f, const std::string& var);

// Formal partial derivative; exponents map through the field characteristic.
MultiPoly partial_derivative(const MultiPoly& f, const std::string& var);

// Sylvester resultant eliminating `var`, computed by fraction-free Gaussian
// elimination. When exactly one operand has degree zero in `var` the
// standard convention res(f, g) = f^{deg_var g} applies; error
// DegreeZeroInVariable when both operands do.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g,
                    const std::string& var);

// Replace one variable by a polynomial over the same variable list.
MultiPoly substitute(const MultiPoly& f, const std::string& var,
                     const MultiPoly& image);
// Replace every variable simultaneously; images share f's variable list.
MultiPoly substitute_all(const MultiPoly& f,
                         const std::vector<MultiPoly>& images);
// Full evaluation at a point with coordinates in a tower extending f's field.
Value poly_eval(const MultiPoly& f, const std::vector<Value>& point);

// Coefficient of var^k as a polynomial in the remaining variables (same
// variable list, degree 0 in var).
MultiPoly coeff_in(const MultiPoly& f, const std::string& var, int k);

// Exact division: quotient when g divides f, nullopt otherwise (g != 0).
std::optional<MultiPoly> poly_divexact(const MultiPoly& f, const MultiPoly& g);
bool poly_divides(const MultiPoly& g, const MultiPoly& f);

// Re-express the coefficients in a larger tower (error DescriptorMismatch).
MultiPoly poly_embed(const MultiPoly& f, const Field& target);
// Rebuild f over a different variable list, which must contain every
// occurring variable of f (error UnknownVariable otherwise).
MultiPoly poly_change_vars(const MultiPoly& f,
                           const std::vector<std::string>& newvars);

// Conversions for polynomials involving at most one variable.
// to_unipoly: every variable except `var` must have degree 0
// (error UnsupportedShape).
UniPoly to_unipoly(const MultiPoly& f, const std::string& var);
MultiPoly from_unipoly(const UniPoly& u, const Field& k,
                       const std::vector<std::string>& vars,
                       const std::string& var);

}  // namespace recipdim
