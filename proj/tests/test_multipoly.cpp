// Multivariate polynomial layer: parsing and rendering, ring arithmetic,
// leading forms and homogenization, derivatives, substitution/evaluation,
// exact division, and Sylvester resultants (with randomized cross-checks
// against univariate gcds over finite fields).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recipdim/multipoly.hpp"
#include "recipdim/unipoly.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace recipdim;

namespace {

const std::vector<std::string> kXY = {"X", "Y"};
const std::vector<std::string> kXYZ = {"X", "Y", "Z"};

MultiPoly parse_q(const std::string& s,
                  const std::vector<std::string>& vars = kXYZ) {
  return poly_parse(s, vars, make_rationals());
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

MultiPoly random_poly(const Field& k, const std::vector<std::string>& vars,
                      int maxdeg, std::mt19937_64& rng) {
  MultiPoly f = MultiPoly::zero(k, vars);
  int terms = 1 + static_cast<int>(rng() % 6);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(vars.size(), 0);
    int budget = static_cast<int>(rng() % (maxdeg + 1));
    for (int i = 0; i < budget; ++i) e[rng() % vars.size()] += 1;
    long long c = static_cast<long long>(rng() % 19) - 9;
    f.add_term(e, Value::integer(k, BigInt(c)));
  }
  return f;
}

}  // namespace

TEST_CASE("parser grammar and error positions") {
  Field Q = make_rationals();
  CHECK(poly_format(parse_q("X^2+Y^2-1")) == "X^2+Y^2-1");
  CHECK(poly_format(parse_q("(X+Y)*(X-Y)")) == "X^2-Y^2");
  CHECK(poly_format(parse_q("-X+-3*Y")) == "-X-3*Y");
  CHECK(poly_format(parse_q("2^3*X")) == "8*X");
  CHECK(poly_format(parse_q("X-Y-Z")) == "X-Y-Z");
  CHECK(poly_format(parse_q("0")) == "0");
  CHECK(parse_q("X*Y*Z-1").total_degree() == 3);

  // implicit multiplication is rejected, with a 1-based position
  try {
    poly_parse("2X", kXYZ, Q);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("position 2") != std::string::npos);
  }
  CHECK(code_of([&] { poly_parse("X Y", kXYZ, Q); }) ==
        ErrorCode::SyntaxError);
  CHECK(code_of([&] { poly_parse("X*(Y", kXYZ, Q); }) ==
        ErrorCode::SyntaxError);
  CHECK(code_of([&] { poly_parse("", kXYZ, Q); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { poly_parse("X+", kXYZ, Q); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { poly_parse("X^Y", kXYZ, Q); }) == ErrorCode::SyntaxError);
  CHECK(code_of([&] { poly_parse("X+W", kXYZ, Q); }) ==
        ErrorCode::UnknownVariable);
  try {
    poly_parse("X+Q*Y", kXYZ, Q);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownVariable);
    CHECK(std::string(e.what()).find("Q") != std::string::npos);
  }
}

TEST_CASE("format round-trips through the parser") {
  std::mt19937_64 rng(41);
  Field Q = make_rationals();
  Field F7 = make_prime_field(7);
  for (int i = 0; i < 200; ++i) {
    const Field& k = (i % 2) ? Q : F7;
    MultiPoly f = random_poly(k, kXYZ, 4, rng);
    CHECK(poly_parse(poly_format(f), kXYZ, k) == f);
  }
}

TEST_CASE("formatting of composite coefficients") {
  Field Qt = make_rational_functions(make_rationals());
  Value t = Value::generator(Qt);
  MultiPoly f = MultiPoly::variable(Qt, kXY, "X") +
                MultiPoly::constant(Qt, kXY, fe_neg(t));
  CHECK(poly_format(f) == "X+(-t)");
  MultiPoly g = MultiPoly::variable(Qt, kXY, "Y").scaled(t);
  CHECK(poly_format(g) == "(t)*Y");
  Field Q = make_rationals();
  MultiPoly h = MultiPoly::variable(Q, kXY, "X")
                    .scaled(Value::rational(Q, 1, 2));
  CHECK(poly_format(h) == "(1/2)*X");
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(42);
  for (const auto& k : {make_rationals(), make_prime_field(5)}) {
    for (int i = 0; i < 120; ++i) {
      MultiPoly a = random_poly(k, kXYZ, 3, rng);
      MultiPoly b = random_poly(k, kXYZ, 3, rng);
      MultiPoly c = random_poly(k, kXYZ, 3, rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == MultiPoly::zero(k, kXYZ));
      CHECK(a + (-a) == MultiPoly::zero(k, kXYZ));
      if (!a.is_zero() && !b.is_zero())
        CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
    }
  }
}

TEST_CASE("degrees, coefficients, occurring variables") {
  MultiPoly f = parse_q("X^2*Y+3*Z-5");
  CHECK(f.total_degree() == 3);
  CHECK(f.degree_in("X") == 2);
  CHECK(f.degree_in("Y") == 1);
  CHECK(f.degree_in("Z") == 1);
  CHECK(f.occurring_vars() == kXYZ);
  CHECK(parse_q("Y^4").occurring_vars() == std::vector<std::string>{"Y"});
  CHECK(MultiPoly::zero(make_rationals(), kXYZ).total_degree() == -1);
  CHECK(fe_to_string(f.coeff({2, 1, 0})) == "1");
  CHECK(fe_to_string(f.coeff({0, 0, 0})) == "-5");
  CHECK(f.coeff({1, 1, 1}).is_zero());
  CHECK(!f.is_homogeneous());
  CHECK(parse_q("X^3+Y^3+Z^3").is_homogeneous());
  CHECK(parse_q("X^2+Y").is_homogeneous() == false);
}

TEST_CASE("leading form selects top-degree terms and is multiplicative") {
  MultiPoly f = parse_q("X^2+Y^2-1");
  HomogeneousForm lf = leading_form(f);
  CHECK(lf.degree == 2);
  CHECK(lf.poly == parse_q("X^2+Y^2"));
  CHECK(code_of([&] {
          leading_form(MultiPoly::zero(make_rationals(), kXYZ));
        }) == ErrorCode::ZeroPolynomial);

  std::mt19937_64 rng(43);
  Field F11 = make_prime_field(11);
  for (int i = 0; i < 150; ++i) {
    MultiPoly a = random_poly(F11, kXYZ, 3, rng);
    MultiPoly b = random_poly(F11, kXYZ, 3, rng);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(leading_form(a * b).poly ==
          leading_form(a).poly * leading_form(b).poly);
  }
}

TEST_CASE("homogenization and dehomogenization") {
  MultiPoly f = parse_q("X^2+Y^2-1", kXY);
  HomogeneousForm F = homogenize(f, "W");
  CHECK(F.degree == 2);
  CHECK(F.poly.vars() == std::vector<std::string>{"W", "X", "Y"});
  CHECK(F.poly == poly_parse("X^2+Y^2-W^2", {"W", "X", "Y"},
                             make_rationals()));
  CHECK(dehomogenize(F.poly, "W") == f);
  CHECK(code_of([&] { homogenize(f, "X"); }) == ErrorCode::VariableClash);
  CHECK(code_of([&] { dehomogenize(f, "W"); }) == ErrorCode::VariableClash);

  std::mt19937_64 rng(44);
  Field Q = make_rationals();
  for (int i = 0; i < 100; ++i) {
    MultiPoly g = random_poly(Q, kXYZ, 4, rng);
    if (g.is_zero()) continue;
    HomogeneousForm G = homogenize(g, "W");
    CHECK(G.poly.is_homogeneous());
    CHECK(G.degree == g.total_degree());
    CHECK(dehomogenize(G.poly, "W") == g);
  }
}

TEST_CASE("partial derivatives: linearity, Leibniz, characteristic p") {
  std::mt19937_64 rng(45);
  for (const auto& k : {make_rationals(), make_prime_field(5)}) {
    for (int i = 0; i < 100; ++i) {
      MultiPoly a = random_poly(k, kXYZ, 3, rng);
      MultiPoly b = random_poly(k, kXYZ, 3, rng);
      for (const auto& v : kXYZ) {
        CHECK(partial_derivative(a + b, v) ==
              partial_derivative(a, v) + partial_derivative(b, v));
        CHECK(partial_derivative(a * b, v) ==
              partial_derivative(a, v) * b + a * partial_derivative(b, v));
      }
    }
  }
  Field F5 = make_prime_field(5);
  MultiPoly xp = poly_parse("X^5+2*X^3", kXYZ, F5);
  CHECK(partial_derivative(xp, "X") == poly_parse("X^2", kXYZ, F5));
  CHECK(partial_derivative(poly_parse("X^5", kXYZ, F5), "X").is_zero());
}

TEST_CASE("substitution and evaluation agree") {
  std::mt19937_64 rng(46);
  Field F13 = make_prime_field(13);
  for (int i = 0; i < 100; ++i) {
    MultiPoly f = random_poly(F13, kXYZ, 4, rng);
    std::vector<Value> pt;
    std::vector<MultiPoly> images;
    for (int j = 0; j < 3; ++j) {
      Value c = Value::integer(F13, BigInt(rng() % 13));
      pt.push_back(c);
      images.push_back(MultiPoly::constant(F13, kXYZ, c));
    }
    CHECK(fe_eq(poly_eval(f, pt), substitute_all(f, images).constant_value()));
    MultiPoly g = substitute(f, "Y", images[1]);
    CHECK(fe_eq(poly_eval(g, pt), poly_eval(f, pt)));
  }
  // evaluation embeds coefficients into the coordinate tower
  Field Q = make_rationals();
  Field Qt = make_rational_functions(Q);
  MultiPoly circ = parse_q("X^2+Y^2-1", kXY);
  Value t = Value::generator(Qt);
  Value r = poly_eval(circ, {t, Value::one(Qt)});
  CHECK(fe_eq(r, fe_mul(t, t)));
}

TEST_CASE("coefficient extraction in one variable reconstructs the input") {
  std::mt19937_64 rng(47);
  Field Q = make_rationals();
  for (int i = 0; i < 60; ++i) {
    MultiPoly f = random_poly(Q, kXYZ, 4, rng);
    MultiPoly back = MultiPoly::zero(Q, kXYZ);
    MultiPoly z = MultiPoly::variable(Q, kXYZ, "Z");
    for (int k = 0; k <= std::max(0, f.degree_in("Z")); ++k) {
      MultiPoly ck = coeff_in(f, "Z", k);
      CHECK(ck.degree_in("Z") <= 0);
      back = back + ck * z.pow(k);
    }
    CHECK(back == f);
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(48);
  for (const auto& k : {make_rationals(), make_prime_field(7)}) {
    for (int i = 0; i < 80; ++i) {
      MultiPoly a = random_poly(k, kXYZ, 3, rng);
      MultiPoly b = random_poly(k, kXYZ, 3, rng);
      if (b.is_zero()) continue;
      auto q = poly_divexact(a * b, b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
      CHECK(poly_divides(b, a * b));
    }
  }
  CHECK(!poly_divexact(parse_q("X^2+Y"), parse_q("X+1")).has_value());
  CHECK(!poly_divides(parse_q("X+Y"), parse_q("X^2+Y^2")));
}

TEST_CASE("resultant oracles") {
  // res_Y(Y - X, Y + X) = 2X: the polynomials share a zero iff X = 0.
  MultiPoly r1 = resultant(parse_q("Y-X", kXY), parse_q("Y+X", kXY), "Y");
  CHECK(r1 == parse_q("2*X", kXY));

  // res_Z(X + Y, X^3 + Y^3 + Z^3): first argument has Z-degree 0, so the
  // convention res(f, g) = f^(deg_Z g) applies.
  MultiPoly r2 = resultant(parse_q("X+Y"), parse_q("X^3+Y^3+Z^3"), "Z");
  CHECK(r2 == parse_q("(X+Y)^3"));
  MultiPoly r2b = resultant(parse_q("X^3+Y^3+Z^3"), parse_q("X+Y"), "Z");
  CHECK(r2b == parse_q("(X+Y)^3"));

  CHECK(code_of([&] {
          resultant(parse_q("X+Y"), parse_q("X-Y"), "Z");
        }) == ErrorCode::DegreeZeroInVariable);
  CHECK(code_of([&] {
          resultant(MultiPoly::zero(make_rationals(), kXYZ), parse_q("X"),
                    "X");
        }) == ErrorCode::ZeroPolynomial);

  // res_X(f, f') for f = (X-1)(X-2): f'(1) * f'(2) = (-1)(1) = -1.
  MultiPoly f = parse_q("X^2-3*X+2", kXY);
  MultiPoly df = partial_derivative(f, "X");
  MultiPoly disc = resultant(f, df, "X");
  CHECK(fe_to_string(disc.constant_value()) == "-1");
}

TEST_CASE("resultant vanishes exactly on common roots: random univariate") {
  std::mt19937_64 rng(49);
  Field F7 = make_prime_field(7);
  int common = 0;
  for (int i = 0; i < 1200; ++i) {
    // random univariate polynomials in X presented in the trivariate ring
    MultiPoly f = MultiPoly::zero(F7, kXYZ);
    MultiPoly g = MultiPoly::zero(F7, kXYZ);
    int df = 1 + static_cast<int>(rng() % 4);
    int dg = 1 + static_cast<int>(rng() % 4);
    for (int j = 0; j <= df; ++j)
      f.add_term({j, 0, 0}, Value::integer(F7, BigInt(rng() % 7)));
    for (int j = 0; j <= dg; ++j)
      g.add_term({j, 0, 0}, Value::integer(F7, BigInt(rng() % 7)));
    if (f.degree_in("X") < 1 || g.degree_in("X") < 1) continue;
    MultiPoly r = resultant(f, g, "X");
    UniPoly uf = to_unipoly(f, "X"), ug = to_unipoly(g, "X");
    bool share = up_deg(up_gcd(uf, ug)) > 0;
    if (share) ++common;
    CHECK(r.is_zero() == share);
  }
  CHECK(common > 50);  // the check above exercised both branches
}

TEST_CASE("resultant is multiplicative in the first argument") {
  std::mt19937_64 rng(50);
  Field F5 = make_prime_field(5);
  for (int i = 0; i < 60; ++i) {
    MultiPoly a = random_poly(F5, kXY, 2, rng);
    MultiPoly b = random_poly(F5, kXY, 2, rng);
    MultiPoly g = random_poly(F5, kXY, 2, rng);
    if (a.degree_in("Y") < 1 || b.degree_in("Y") < 1 || g.degree_in("Y") < 1)
      continue;
    MultiPoly lhs = resultant(a * b, g, "Y");
    MultiPoly rhs = resultant(a, g, "Y") * resultant(b, g, "Y");
    CHECK(lhs == rhs);
  }
}

TEST_CASE("coefficient embedding into larger towers") {
  Field Q = make_rationals();
  Field Qt = make_rational_functions(Q);
  MultiPoly f = parse_q("X^2+Y^2-1", kXY);
  MultiPoly ft = poly_embed(f, Qt);
  CHECK(field_eq(ft.field(), Qt));
  CHECK(ft == poly_parse("X^2+Y^2-1", kXY, Qt));
  CHECK(code_of([&] {
          poly_embed(poly_parse("X", kXY, make_prime_field(5)), Q);
        }) == ErrorCode::DescriptorMismatch);
}

TEST_CASE("variable list changes") {
  MultiPoly f = parse_q("X^2+1", {"X"});
  MultiPoly g = poly_change_vars(f, kXYZ);
  CHECK(g.vars() == kXYZ);
  CHECK(g == parse_q("X^2+1"));
  CHECK(poly_change_vars(g, {"X"}) == f);
  CHECK(code_of([&] { poly_change_vars(parse_q("X+Y"), {"X"}); }) ==
        ErrorCode::UnknownVariable);
}

TEST_CASE("unipoly conversions") {
  Field Q = make_rationals();
  MultiPoly f = parse_q("Z^3-2*Z+1");
  UniPoly u = to_unipoly(f, "Z");
  CHECK(up_deg(u) == 3);
  CHECK(from_unipoly(u, Q, kXYZ, "Z") == f);
  CHECK(code_of([&] { to_unipoly(parse_q("X+Y"), "X"); }) ==
        ErrorCode::UnsupportedShape);
}
