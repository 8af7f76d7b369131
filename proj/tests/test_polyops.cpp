// Polynomial decision helpers: shape-restricted gcd and squarefree part,
// univariate and binary-form factorization with reconstruction checks, and
// exact quadratic-form data (Gram matrix, rank, diagonalization, splitting).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recipdim/polyops.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace recipdim;

namespace {

const std::vector<std::string> kXY = {"X", "Y"};
const std::vector<std::string> kYZ = {"Y", "Z"};
const std::vector<std::string> kXYZ = {"X", "Y", "Z"};

MultiPoly parse(const std::string& s, const std::vector<std::string>& vars,
                const Field& k) {
  return poly_parse(s, vars, k);
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

MultiPoly reassemble(const MPFactorization& fac, const Field& k,
                     const std::vector<std::string>& vars) {
  MultiPoly prod = MultiPoly::constant(k, vars, fac.unit);
  for (const auto& f : fac.factors) prod = prod * f.poly.pow(f.multiplicity);
  return prod;
}

}  // namespace

TEST_CASE("gcd for univariate and binary homogeneous shapes") {
  Field Q = make_rationals();
  CHECK(gcd_poly(parse("X^2-1", kXY, Q), parse("X^2-2*X+1", kXY, Q)) ==
        parse("X-1", kXY, Q));
  // coprime binary forms
  for (int m : {2, 3, 5}) {
    MultiPoly f =
        parse("Y^" + std::to_string(m) + "+Z^" + std::to_string(m), kYZ, Q);
    MultiPoly df = partial_derivative(f, "Y");
    MultiPoly g = gcd_poly(f, df);
    CHECK(g.is_constant());
    CHECK(fe_to_string(g.constant_value()) == "1");
  }
  CHECK(gcd_poly(parse("Y^2*Z", kYZ, Q), parse("Y*Z^2", kYZ, Q)) ==
        parse("Y*Z", kYZ, Q));
  // zero and constant edge cases
  MultiPoly z = MultiPoly::zero(Q, kXY);
  CHECK(gcd_poly(z, parse("3*X-3", kXY, Q)) == parse("X-1", kXY, Q));
  CHECK(gcd_poly(parse("5", kXY, Q), parse("X", kXY, Q)).is_constant());
  // mixed-variable non-homogeneous shapes are refused
  CHECK(code_of([&] {
          gcd_poly(parse("X*Y+1", kXY, Q), parse("X+Y", kXY, Q));
        }) == ErrorCode::UnsupportedShape);
}

TEST_CASE("squarefree part") {
  Field Q = make_rationals();
  CHECK(squarefree_part(parse("X^3-X^2", kXY, Q)) ==
        parse("X^2-X", kXY, Q));
  CHECK(squarefree_part(parse("Y^2*Z", kYZ, Q)) == parse("Y*Z", kYZ, Q));
  CHECK(squarefree_part(parse("(Y+Z)^3", kYZ, Q)) == parse("Y+Z", kYZ, Q));
  CHECK(squarefree_part(parse("X^2+1", kXY, Q)) == parse("X^2+1", kXY, Q));
  // characteristic p: h(x^p) has derivative zero; the quotient degenerates
  // to a constant, flagging inseparability instead of guessing
  Field F5 = make_prime_field(5);
  MultiPoly insep = parse("X^5+2", kXY, F5);
  CHECK(squarefree_part(insep).is_constant());
  // separable polynomial in characteristic p is untouched
  CHECK(squarefree_part(parse("X^5+X", kXY, F5)) ==
        parse("X^5+X", kXY, F5));
}

TEST_CASE("univariate factorization wraps the kernel") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^4-1", kXYZ, Q);
  MPFactorization fac = factor_univariate(f);
  CHECK(fac.factors.size() == 3);  // (X-1)(X+1)(X^2+1)
  CHECK(reassemble(fac, Q, kXYZ) == f);
  CHECK(code_of([&] { factor_univariate(parse("X*Y", kXYZ, Q)); }) ==
        ErrorCode::UnsupportedShape);
  MPFactorization c = factor_univariate(parse("7", kXYZ, Q));
  CHECK(c.factors.empty());
  CHECK(fe_to_string(c.unit) == "7");
}

TEST_CASE("binary form factorization") {
  Field Q = make_rationals();
  // Y^3 + Z^3 = (Y+Z)(Y^2-YZ+Z^2)
  MultiPoly f = parse("Y^3+Z^3", kYZ, Q);
  MPFactorization fac = factor_binary_form(f);
  REQUIRE(fac.factors.size() == 2);
  CHECK(reassemble(fac, Q, kYZ) == f);
  bool has_linear = false, has_quad = false;
  for (const auto& g : fac.factors) {
    if (g.poly == parse("Y+Z", kYZ, Q)) has_linear = true;
    if (g.poly == parse("Y^2-Y*Z+Z^2", kYZ, Q)) has_quad = true;
  }
  CHECK(has_linear);
  CHECK(has_quad);

  // variable powers split off by dehomogenization are reported as factors
  MultiPoly g = parse("2*X^2*Y^3*(X+Y)", kXY, Q);
  MPFactorization gf = factor_binary_form(g);
  CHECK(reassemble(gf, Q, kXY) == g);
  int xm = 0, ym = 0;
  for (const auto& h : gf.factors) {
    if (h.poly == parse("X", kXY, Q)) xm = h.multiplicity;
    if (h.poly == parse("Y", kXY, Q)) ym = h.multiplicity;
  }
  CHECK(xm == 2);
  CHECK(ym == 3);
  CHECK(fe_to_string(gf.unit) == "2");

  // irreducible over Q, split over GF(5)
  MultiPoly h = parse("X^2+Y^2", kXY, Q);
  MPFactorization hf = factor_binary_form(h);
  CHECK(hf.factors.size() == 1);
  CHECK(hf.factors[0].multiplicity == 1);
  Field F5 = make_prime_field(5);
  MPFactorization hf5 = factor_binary_form(parse("X^2+Y^2", kXY, F5));
  CHECK(hf5.factors.size() == 2);  // (X+2Y)(X-2Y) mod 5
  CHECK(reassemble(hf5, F5, kXY) == parse("X^2+Y^2", kXY, F5));

  // Y^2 + tYZ + Z^2 over Q(t): discriminant t^2 - 4 is not a square
  Field Qt = make_rational_functions(Q);
  MultiPoly ytz = parse("Y^2+Z^2", kYZ, Qt) +
                  (MultiPoly::variable(Qt, kYZ, "Y") *
                   MultiPoly::variable(Qt, kYZ, "Z"))
                      .scaled(Value::generator(Qt));
  MPFactorization kt = factor_binary_form(ytz);
  CHECK(kt.factors.size() == 1);
  CHECK(kt.factors[0].multiplicity == 1);

  // non-homogeneous and >2-variable inputs are refused
  CHECK(code_of([&] { factor_binary_form(parse("X^2+Y", kXY, Q)); }) ==
        ErrorCode::UnsupportedShape);
  CHECK(code_of([&] {
          factor_binary_form(parse("X*Y+Y*Z+X*Z", kXYZ, Q));
        }) == ErrorCode::UnsupportedShape);
  CHECK(code_of([&] {
          factor_binary_form(MultiPoly::zero(Q, kXY));
        }) == ErrorCode::ZeroPolynomial);

  // single monomial
  MPFactorization mono = factor_binary_form(parse("3*X^4", kXY, Q));
  CHECK(reassemble(mono, Q, kXY) == parse("3*X^4", kXY, Q));
}

TEST_CASE("binary factorization over K(t): t in the variable parse") {
  // the factor list for t-free forms matches the base-field factorization
  Field Qt = make_rational_functions(make_rationals());
  MultiPoly f = parse("Y^3+Z^3", kYZ, Qt);
  MPFactorization fac = factor_binary_form(f);
  CHECK(fac.factors.size() == 2);
  CHECK(reassemble(fac, Qt, kYZ) == f);
}

TEST_CASE("random binary forms reconstruct over GF(p)") {
  std::mt19937_64 rng(51);
  for (BigInt p : {2, 3, 5, 7}) {
    Field F = make_prime_field(p);
    for (int i = 0; i < 60; ++i) {
      int d = 1 + static_cast<int>(rng() % 5);
      MultiPoly f = MultiPoly::zero(F, kXY);
      for (int a = 0; a <= d; ++a)
        f.add_term({a, d - a}, Value::integer(F, BigInt(rng() % 19)));
      if (f.is_zero()) continue;
      MPFactorization fac = factor_binary_form(f);
      CHECK(reassemble(fac, F, kXY) == f);
      for (const auto& g : fac.factors) CHECK(g.poly.is_homogeneous());
    }
  }
}

TEST_CASE("quadratic form data") {
  Field Q = make_rationals();

  // XY: rank 2, splits over Q
  QuadraticFormData xy = quadratic_form_data(parse("X*Y", kXY, Q));
  CHECK(xy.rank == 2);
  CHECK(xy.product_of_linear_forms_over_closure);
  CHECK(xy.splits_over_field);
  CHECK(!xy.double_line);

  // X^2 + Y^2: rank 2, conjugate lines only
  QuadraticFormData cc = quadratic_form_data(parse("X^2+Y^2", kXY, Q));
  CHECK(cc.rank == 2);
  CHECK(cc.product_of_linear_forms_over_closure);
  CHECK(!cc.splits_over_field);

  // X^2 - 2Y^2 over Q: no rational split; over GF(7), 2 = 4^2 splits it
  CHECK(!quadratic_form_data(parse("X^2-2*Y^2", kXY, Q)).splits_over_field);
  Field F7 = make_prime_field(7);
  CHECK(quadratic_form_data(parse("X^2-2*Y^2", kXY, F7)).splits_over_field);

  // X^2: rank 1 double line
  QuadraticFormData dl = quadratic_form_data(parse("X^2", kXY, Q));
  CHECK(dl.rank == 1);
  CHECK(dl.double_line);
  CHECK(dl.splits_over_field);

  // full-rank ternary forms are not products of linear forms
  QuadraticFormData s3 = quadratic_form_data(parse("X^2+Y^2+Z^2", kXYZ, Q));
  CHECK(s3.rank == 3);
  CHECK(!s3.product_of_linear_forms_over_closure);
  CHECK(!s3.splits_over_field);
  CHECK(quadratic_form_data(parse("X^2-Y*Z", kXYZ, Q)).rank == 3);

  // errors
  CHECK(code_of([&] { quadratic_form_data(parse("X^3", kXY, Q)); }) ==
        ErrorCode::WrongDegree);
  CHECK(code_of([&] { quadratic_form_data(parse("X^2+Y", kXY, Q)); }) ==
        ErrorCode::WrongDegree);
  Field F2 = make_prime_field(2);
  CHECK(code_of([&] { quadratic_form_data(parse("X*Y", kXY, F2)); }) ==
        ErrorCode::CharacteristicTwo);
}

TEST_CASE("quadratic form diagonalization verifies congruence") {
  std::mt19937_64 rng(52);
  Field Q = make_rationals();
  for (int trial = 0; trial < 120; ++trial) {
    // random symmetric input via random quadratic form in 3 variables
    MultiPoly f = MultiPoly::zero(Q, kXYZ);
    for (int i = 0; i < 3; ++i)
      for (int j = i; j < 3; ++j) {
        ExpVec e(3, 0);
        e[i] += 1;
        e[j] += 1;
        f.add_term(e, Value::integer(Q, BigInt(static_cast<long long>(
                                             rng() % 11) -
                                         5)));
      }
    if (f.is_zero()) continue;
    QuadraticFormData qd = quadratic_form_data(f);
    size_t n = 3;
    // P^T G P must equal diag(d)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Value s = Value::zero(Q);
        for (size_t a = 0; a < n; ++a)
          for (size_t b = 0; b < n; ++b)
            s = fe_add(s, fe_mul(fe_mul(qd.transform[a][i], qd.gram[a][b]),
                                 qd.transform[b][j]));
        Value expect = (i == j) ? qd.diag[i] : Value::zero(Q);
        CHECK(fe_eq(s, expect));
      }
    // rank = number of nonzero diagonal entries
    int nz = 0;
    for (const auto& d : qd.diag)
      if (!d.is_zero()) ++nz;
    CHECK(nz == qd.rank);
    // f(x) = x^T G x reconstructs the form
    MultiPoly back = MultiPoly::zero(Q, kXYZ);
    std::vector<MultiPoly> vars;
    for (const auto& v : kXYZ)
      vars.push_back(MultiPoly::variable(Q, kXYZ, v));
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b)
        back = back + (vars[a] * vars[b]).scaled(qd.gram[a][b]);
    CHECK(back == f);
  }
}
