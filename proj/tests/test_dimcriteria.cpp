// Dimension verdicts: curve analysis through points at infinity, the quadric
// classifier, the surface criterion ladder with certified witnesses, unit
// upper bounds, and mechanical certificate replay.  Expected values are
// frozen from hand computations noted inline.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "recipdim/dimcriteria.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "recipdim/polyops.hpp"

using namespace recipdim;

namespace {

const std::vector<std::string> kXY = {"X", "Y"};
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

bool notes_contain(const Certificate& c, const std::string& needle) {
  for (const std::string& n : c.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

MultiPoly random_plane_poly(const Field& k, int d, std::mt19937_64& rng) {
  MultiPoly f = MultiPoly::zero(k, kXY);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j)
      if (rng() % 3 != 0)
        f.add_term({i, j}, Value::integer(k, BigInt(rng() % 19)));
  return f;
}

MultiPoly random_quadric(const Field& k, std::mt19937_64& rng) {
  MultiPoly f = MultiPoly::zero(k, kXYZ);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; i + j <= 2; ++j)
      for (int l = 0; i + j + l <= 2; ++l)
        if (rng() % 2 == 0)
          f.add_term({i, j, l}, Value::integer(k, BigInt(rng() % 11)));
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Plane curves
// ---------------------------------------------------------------------------

TEST_CASE("hyperbola: two regular points at infinity make the reciprocal "
          "complement a field") {
  Field Q = make_rationals();
  MultiPoly f = parse("X*Y-1", kXY, Q);
  DimensionVerdict v = analyze_curve(f);
  CHECK(v.is_exact(0));
  REQUIRE(v.certificate.has_value());
  CHECK(v.certificate->criterion == "Thm-ptoinf");
  CHECK(replay_certificate(f, v));
  CurveSubsetReport rep = curve_recip_subset(f);
  CHECK(rep.answer == CurveSubsetReport::Answer::Yes);
}

TEST_CASE("parabola: a single regular point at infinity gives dimension 1") {
  Field Q = make_rationals();
  MultiPoly f = parse("Y-X^2", kXY, Q);
  DimensionVerdict v = analyze_curve(f);
  CHECK(v.is_exact(1));
  REQUIRE(v.certificate.has_value());
  REQUIRE(v.certificate->witness_point.has_value());
  // Leading form X^2 cuts the single infinity point [0:1] of the W=0 line.
  CHECK(orbit_to_string(*v.certificate->witness_point) == "[0:0:1]");
  CHECK(notes_contain(*v.certificate, "integral closure"));
  CHECK(replay_certificate(f, v));
  CHECK(curve_recip_subset(f).answer == CurveSubsetReport::Answer::No);
}

TEST_CASE("circle: one quadratic orbit over Q, two rational points over "
          "GF(5)") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^2+Y^2-1", kXY, Q);
  DimensionVerdict v = analyze_curve(f);
  CHECK(v.is_exact(1));
  REQUIRE(v.certificate->witness_point.has_value());
  CHECK(v.certificate->witness_point->degree == 2);

  Field F5 = make_prime_field(BigInt(5));
  MultiPoly f5 = parse("X^2+Y^2-1", kXY, F5);
  DimensionVerdict v5 = analyze_curve(f5);
  CHECK(v5.is_exact(0));
  CHECK(replay_certificate(f5, v5));
}

TEST_CASE("curve singular at infinity is reported inconclusive, pointing at "
          "normalization") {
  Field Q = make_rationals();
  // W^3*Y^2 - X^5 has a non-smooth point at [0:0:1].
  MultiPoly f = parse("Y^2-X^5", kXY, Q);
  DimensionVerdict v = analyze_curve(f, true);
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.reason.find("normalization") != std::string::npos);
  CHECK_FALSE(replay_certificate(f, v));  // nothing to replay
}

TEST_CASE("reducible and unverifiable curve inputs are rejected") {
  Field Q = make_rationals();
  CHECK(code_of([&] { analyze_curve(parse("X^2-Y^2", kXY, Q)); }) ==
        ErrorCode::ReducibleInput);
  // Cuspidal cubic: the closure is singular, so irreducibility cannot be
  // certified here and must be asserted.
  CHECK(code_of([&] { analyze_curve(parse("Y^2-X^3", kXY, Q)); }) ==
        ErrorCode::HypothesisUnverified);
  DimensionVerdict v = analyze_curve(parse("Y^2-X^3", kXY, Q), true);
  CHECK(v.is_exact(1));  // [0:0:1] is a smooth point of W*Y^2 - X^3
  CHECK(code_of([&] { analyze_curve(parse("3", kXY, Q)); }) ==
        ErrorCode::ConstantPolynomial);
  CHECK(code_of([&] { analyze_curve(parse("X+Y+Z", kXYZ, Q)); }) ==
        ErrorCode::ShapeMismatch);
}

TEST_CASE("coordinate-shaped curve is exact even when its closure is "
          "singular at infinity") {
  Field Q = make_rationals();
  // W^2*Y - X^3 has a cusp at [0:0:1], so the infinity route alone fails;
  // but Y - X^3 presents its ring as K[X], which settles the dimension.
  MultiPoly f = parse("Y-X^3", kXY, Q);
  DimensionVerdict v = analyze_curve(f);  // irreducibility needs no assertion
  CHECK(v.is_exact(1));
  CHECK(v.certificate->criterion == "Iso-graph");
  CHECK(replay_certificate(f, v));
  CHECK(curve_recip_subset(f).answer == CurveSubsetReport::Answer::No);
}

// ---------------------------------------------------------------------------
// Space curves given by a pair
// ---------------------------------------------------------------------------

TEST_CASE("space-curve pair: circle in the Z = 0 plane") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^2+Y^2+Z^2-1", kXYZ, Q);
  MultiPoly g = parse("Z", kXYZ, Q);
  CHECK(code_of([&] { analyze_curve_pair(f, g); }) ==
        ErrorCode::HypothesisUnverified);
  DimensionVerdict v = analyze_curve_pair(f, g, true);
  CHECK(v.is_exact(1));  // single conjugate orbit [0:1:th:0], th^2 = -1
  REQUIRE(v.certificate->witness_point.has_value());
  CHECK(v.certificate->witness_point->degree == 2);
  CHECK(replay_certificate(f, v, true));

  Field F5 = make_prime_field(BigInt(5));
  DimensionVerdict v5 = analyze_curve_pair(parse("X^2+Y^2+Z^2-1", kXYZ, F5),
                                           parse("Z", kXYZ, F5), true);
  CHECK(v5.is_exact(0));  // -1 is a square mod 5: two rational points
}

TEST_CASE("pair whose leading forms share a component is refused") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^2+Y^2+Z^2-1", kXYZ, Q);
  MultiPoly g = parse("X^2+Y^2+Z^2-2", kXYZ, Q);
  CHECK(code_of([&] { analyze_curve_pair(f, g, true); }) ==
        ErrorCode::NonCoprimePair);
}

// ---------------------------------------------------------------------------
// Quadric classification
// ---------------------------------------------------------------------------

TEST_CASE("quadric suite: exact dimensions with replayable certificates") {
  Field Q = make_rationals();
  struct Case {
    const char* poly;
    int dim;
  };
  const Case cases[] = {
      {"X*Y-1", 1},          // split infinity lines, no transversal term
      {"X*Y+Z", 2},          // split lines but Z survives: a graph
      {"X^2+5", 2},          // double line, -5 not a square
      {"X^2+Y", 2},          // double line with a linear term
      {"X^2+Y^2+Z^2-1", 2},  // irreducible conic without rational points
      {"X^2-Y*Z+1", 2},      // irreducible conic with a rational point
  };
  for (const Case& c : cases) {
    CAPTURE(c.poly);
    MultiPoly f = parse(c.poly, kXYZ, Q);
    DimensionVerdict v = classify_quadric(f);
    CHECK(v.is_exact(c.dim));
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->criterion == "Ex-quadrics");
    CHECK(replay_certificate(f, v));
  }
}

TEST_CASE("quadric branches are taken as expected") {
  Field Q = make_rationals();
  DimensionVerdict sphere = classify_quadric(parse("X^2+Y^2+Z^2-1", kXYZ, Q));
  CHECK(notes_contain(*sphere.certificate, "irreducible-section"));
  DimensionVerdict cone = classify_quadric(parse("X^2-Y*Z+1", kXYZ, Q));
  CHECK(notes_contain(*cone.certificate, "tangent-plane"));
  DimensionVerdict hyper = classify_quadric(parse("X*Y-1", kXYZ, Q));
  CHECK(notes_contain(*hyper.certificate, "V(UV - 1)"));
  // X^2 - Y^2 + 1 is affinely the same surface as XY - 1.
  DimensionVerdict diff = classify_quadric(parse("X^2-Y^2+1", kXYZ, Q));
  CHECK(diff.is_exact(1));
  // The recorded unit identity must hold and yield the matching upper bound.
  const Certificate& c = *diff.certificate;
  REQUIRE(c.witness_g.has_value());
  REQUIRE(c.witness_g2.has_value());
  REQUIRE(c.witness_const.has_value());
  DimensionVerdict ub = units_upper_bound(parse("X^2-Y^2+1", kXYZ, Q),
                                          *c.witness_g, *c.witness_g2,
                                          *c.witness_const);
  CHECK(ub.kind == VerdictKind::UpperBound);
  CHECK(ub.n == 1);
}

TEST_CASE("vertex-only rational point still classifies: X^2+Y^2+1") {
  Field Q = make_rationals();
  // The infinity conic X^2+Y^2 is a conjugate line pair whose only rational
  // point is its singular vertex [0:0:1]; the classifier must fall back to
  // an irreducible linear section rather than a tangent plane.
  MultiPoly f = parse("X^2+Y^2+1", kXYZ, Q);
  DimensionVerdict v = classify_quadric(f);
  CHECK(v.is_exact(2));
  CHECK(notes_contain(*v.certificate, "irreducible-section"));
  CHECK(replay_certificate(f, v));
}

TEST_CASE("quadrics over small prime fields") {
  Field F7 = make_prime_field(BigInt(7));
  DimensionVerdict v1 = classify_quadric(parse("X*Y-1", kXYZ, F7));
  CHECK(v1.is_exact(1));
  CHECK(replay_certificate(parse("X*Y-1", kXYZ, F7), v1));
  DimensionVerdict v2 = classify_quadric(parse("X^2+Y^2+Z^2-1", kXYZ, F7));
  CHECK(v2.is_exact(2));
  // Over GF(5) the infinity conic X^2+Y^2 splits rationally (-1 = 2^2), so
  // X^2+Y^2+1 is affinely equivalent to the hyperbolic cylinder XY - 1.
  Field F5 = make_prime_field(BigInt(5));
  MultiPoly f5 = parse("X^2+Y^2+1", kXYZ, F5);
  DimensionVerdict v5 = classify_quadric(f5);
  CHECK(v5.is_exact(1));
  CHECK(replay_certificate(f5, v5));
}

TEST_CASE("quadric edge errors") {
  Field Q = make_rationals();
  CHECK(code_of([&] { classify_quadric(parse("X*Y", kXYZ, Q)); }) ==
        ErrorCode::ReducibleInput);
  CHECK(code_of([&] { classify_quadric(parse("X^2+2*X+1", kXYZ, Q)); }) ==
        ErrorCode::ReducibleInput);  // a double plane
  CHECK(code_of([&] { classify_quadric(parse("X^3+Y-1", kXYZ, Q)); }) ==
        ErrorCode::WrongDegree);
  Field F2 = make_prime_field(BigInt(2));
  CHECK(code_of([&] { classify_quadric(parse("X*Y-1", kXYZ, F2)); }) ==
        ErrorCode::CharacteristicTwo);
}

// ---------------------------------------------------------------------------
// Graphs and unit products
// ---------------------------------------------------------------------------

TEST_CASE("graph surfaces are recognized syntactically") {
  Field Q = make_rationals();
  MultiPoly f = parse("Y-X^4-Z^2+3", kXYZ, Q);
  AnalysisReport rep = analyze_surface(f);
  CHECK(rep.verdict.is_exact(2));
  CHECK(rep.verdict.certificate->criterion == "Iso-graph");
  CHECK(replay_certificate(f, rep.verdict));
}

TEST_CASE("units_upper_bound checks the identity and transcendence") {
  Field Q = make_rationals();
  MultiPoly f = parse("X*Y-1", kXYZ, Q);
  MultiPoly g1 = parse("X", kXYZ, Q);
  MultiPoly g2 = parse("Y", kXYZ, Q);
  DimensionVerdict v = units_upper_bound(f, g1, g2, Value::integer(Q, 1));
  CHECK(v.kind == VerdictKind::UpperBound);
  CHECK(v.n == 1);
  CHECK(v.certificate->criterion == "Cor-units-product");
  CHECK(replay_certificate(f, v));
  CHECK(code_of([&] { units_upper_bound(f, g1, g2, Value::integer(Q, 2)); }) ==
        ErrorCode::IdentityFails);
  CHECK(code_of([&] {
          units_upper_bound(f, g1, MultiPoly::constant(Q, kXYZ, Value::one(Q)),
                            Value::integer(Q, 1));
        }) == ErrorCode::IdentityFails);
}

TEST_CASE("units_upper_bound rejects factors that are algebraic on the "
          "hypersurface") {
  Field Q = make_rationals();
  // X^2 + 1 = X*X - (-1), but X satisfies a univariate relation modulo f,
  // so it cannot generate a one-dimensional quotient: the coordinate ring is
  // Q(i)[Y,Z] of dimension two, and an upper bound of one would be wrong.
  MultiPoly f = parse("X^2+1", kXYZ, Q);
  MultiPoly x = parse("X", kXYZ, Q);
  CHECK(code_of([&] { units_upper_bound(f, x, x, Value::integer(Q, -1)); }) ==
        ErrorCode::IdentityFails);
}

TEST_CASE("product-of-units shape is detected by analyze_surface") {
  Field Q = make_rationals();
  // X^2*Y - 1: inverting f makes X and X*Y units, which caps the dimension.
  MultiPoly f = parse("X^2*Y-1", kXYZ, Q);
  AnalysisReport rep = analyze_surface(f);
  CHECK(rep.verdict.kind == VerdictKind::UpperBound);
  CHECK(rep.verdict.n == 1);
  REQUIRE(rep.upper.has_value());
  CHECK(rep.upper->certificate->criterion == "Cor-units-product");
  CHECK(replay_certificate(f, *rep.upper));

  // X*Y*Z + 1 is not binary, but the monomial split still applies.
  MultiPoly g = parse("X*Y*Z+1", kXYZ, Q);
  AnalysisReport rep2 = analyze_surface(g, /*assume_irreducible=*/true);
  CHECK(rep2.verdict.kind == VerdictKind::UpperBound);
  CHECK(rep2.verdict.n == 1);
  REQUIRE(rep2.upper.has_value());
  CHECK(replay_certificate(g, *rep2.upper));
}

// ---------------------------------------------------------------------------
// Surface lower bound
// ---------------------------------------------------------------------------

TEST_CASE("lower bound from an irreducible infinity curve with a regular "
          "point") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^3+Y^3+Z^3+1", kXYZ, Q);
  DimensionVerdict v = surface_lower_bound(f, true);
  CHECK(v.kind == VerdictKind::LowerBound);
  CHECK(v.n == 1);
  CHECK(v.certificate->criterion == "Prop-dim2-infty-irred");
  CHECK(v.certificate->witness_point.has_value());
  CHECK(replay_certificate(f, v, true));
  // Without the irreducibility assertion the cubic input is rejected.
  CHECK(code_of([&] { surface_lower_bound(f); }) ==
        ErrorCode::HypothesisUnverified);
}

// ---------------------------------------------------------------------------
// Prime-degree and split-leading-form criteria
// ---------------------------------------------------------------------------

TEST_CASE("prime degree with an irreducible binary tail: X^3+Y^3+2Z^3+1") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^3+Y^3+2*Z^3+1", kXYZ, Q);
  DimensionVerdict v = criterion_prime_degree(f, true);
  CHECK(v.is_exact(2));
  CHECK(v.certificate->criterion == "Prop-noKrational-Xd");
  REQUIRE(v.certificate->witness_g.has_value());
  CHECK(*v.certificate->witness_g == parse("X", kXYZ, Q));
  REQUIRE(v.certificate->witness_point.has_value());
  CHECK(v.certificate->witness_point->degree == 3);
  CHECK(replay_certificate(f, v, true));
}

TEST_CASE("prime degree refuses the Fermat cubic: every tail splits") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^3+Y^3+Z^3+1", kXYZ, Q);
  CHECK(code_of([&] { criterion_prime_degree(f, true); }) ==
        ErrorCode::GReducible);
  CHECK(code_of([&] {
          criterion_prime_degree(parse("X^4+Y^4+Z^4+1", kXYZ, Q), true);
        }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("split leading form: Fermat surfaces of degree 3 and 5") {
  Field Q = make_rationals();
  for (int m : {3, 5}) {
    CAPTURE(m);
    std::string s = "X^" + std::to_string(m) + "+Y^" + std::to_string(m) +
                    "+Z^" + std::to_string(m) + "+1";
    MultiPoly f = parse(s, kXYZ, Q);
    DimensionVerdict v = criterion_leading_split(f, true);
    CHECK(v.is_exact(2));
    CHECK(v.certificate->criterion == "Prop-touchdegn");
    REQUIRE(v.certificate->witness_g.has_value());
    CHECK(*v.certificate->witness_g == parse("Y+Z", kXYZ, Q));
    CHECK(replay_certificate(f, v, true));
  }
}

TEST_CASE("split leading form handles a higher-multiplicity cofactor") {
  Field Q = make_rationals();
  // Leading form X^4 - Y*Z^3: the simple factor Y works; Z (multiplicity 3)
  // must be passed over.
  MultiPoly f = parse("X^4-Y*Z^3+1", kXYZ, Q);
  DimensionVerdict v = criterion_leading_split(f, true);
  CHECK(v.is_exact(2));
  CHECK(*v.certificate->witness_g == parse("Y", kXYZ, Q));
  CHECK(replay_certificate(f, v, true));
}

TEST_CASE("split-leading-form shape errors") {
  Field Q = make_rationals();
  // X*Y*Z has no pure power in any variable.
  CHECK(code_of([&] {
          criterion_leading_split(parse("X*Y*Z+1", kXYZ, Q), true);
        }) == ErrorCode::ShapeMismatch);
  // Tail is a square: no simple linear factor anywhere.
  CHECK(code_of([&] {
          criterion_leading_split(parse("X^2-Y^2+1", kXYZ, Q), true);
        }) == ErrorCode::HypothesisUnverified);
  Field F3 = make_prime_field(BigInt(3));
  CHECK(code_of([&] {
          criterion_leading_split(parse("X^3+Y^3+2*Z^3+1", kXYZ, F3), true);
        }) == ErrorCode::HypothesisUnverified);  // char divides degree
}

// ---------------------------------------------------------------------------
// Sections without rational points
// ---------------------------------------------------------------------------

TEST_CASE("no-rational-point criterion via an irreducible linear section") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^2+Y^2+Z^2+1", kXYZ, Q);
  DimensionVerdict v = criterion_no_k_rational(f);
  CHECK(v.is_exact(2));
  CHECK(v.certificate->criterion == "Prop-noKrational-deg23");
  REQUIRE(v.certificate->witness_g.has_value());
  CHECK(replay_certificate(f, v));
}

TEST_CASE("no-rational-point criterion also resolves the Fermat cubic via "
          "an irreducible section") {
  Field Q = make_rationals();
  // The section of X^3+Y^3+Z^3 by Y+2Z is X^3 - 7Z^3, irreducible over Q, so
  // the criterion succeeds even though the infinity curve has rational
  // points elsewhere.
  MultiPoly f = parse("X^3+Y^3+Z^3+1", kXYZ, Q);
  DimensionVerdict v = criterion_no_k_rational(f, true);
  CHECK(v.is_exact(2));
  REQUIRE(v.certificate->witness_point.has_value());
  CHECK(v.certificate->witness_point->degree == 3);
  CHECK(replay_certificate(f, v, true));
}

TEST_CASE("no-rational-point criterion reports its limits") {
  Field Q = make_rationals();
  // Every linear section of the infinity curve XYZ splits into rational
  // lines, so the criterion defers to the tangent-witness route.
  DimensionVerdict v = criterion_no_k_rational(parse("X*Y*Z+1", kXYZ, Q), true);
  CHECK(v.kind == VerdictKind::Inconclusive);
  CHECK(v.reason.find("tangent") != std::string::npos);
  CHECK(code_of([&] {
          criterion_no_k_rational(parse("X^4+Y^4+Z^4+1", kXYZ, Q), true);
        }) == ErrorCode::WrongDegree);
  Field F5 = make_prime_field(BigInt(5));
  CHECK(code_of([&] {
          criterion_no_k_rational(parse("X^2+Y^2+Z^2+1", kXYZ, F5), true);
        }) == ErrorCode::FiniteField);
}

// ---------------------------------------------------------------------------
// Witness search and direct certification
// ---------------------------------------------------------------------------

TEST_CASE("inflexion tangent of the Fermat cubic is found and certifies") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^3+Y^3+Z^3+1", kXYZ, Q);
  std::optional<MultiPoly> g = search_witness_linear(f);
  REQUIRE(g.has_value());
  CHECK(*g == parse("X+Y", kXYZ, Q));
  DimensionVerdict v = certify_dim2_with_witness(f, *g, true);
  CHECK(v.is_exact(2));
  CHECK(v.certificate->criterion == "Prop-affine-irred-VXFreg");
  REQUIRE(v.certificate->witness_point.has_value());
  CHECK(orbit_to_string(*v.certificate->witness_point) == "[0:1:-1:0]");
  CHECK(replay_certificate(f, v, true));
}

TEST_CASE("a witness meeting the infinity curve twice is rejected") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^3+Y^3+Z^3+1", kXYZ, Q);
  // X = 0 meets the Fermat infinity curve in [0:1:-1] and a conjugate pair.
  CHECK(code_of([&] {
          certify_dim2_with_witness(f, parse("X", kXYZ, Q), true);
        }) == ErrorCode::WitnessRejected);
  CHECK(code_of([&] {
          certify_dim2_with_witness(f, parse("2", kXYZ, Q), true);
        }) == ErrorCode::WitnessRejected);
}

// ---------------------------------------------------------------------------
// The orchestrator
// ---------------------------------------------------------------------------

TEST_CASE("analyze_surface routes each input to the right criterion") {
  Field Q = make_rationals();
  struct Case {
    const char* poly;
    int dim;
    const char* criterion;
  };
  const Case cases[] = {
      {"X*Y-1", 1, "Ex-quadrics"},
      {"X^2+Y^2+Z^2-1", 2, "Ex-quadrics"},
      {"X+Y^3-Z^2", 2, "Iso-graph"},
      {"X^3+Y^3+2*Z^3+1", 2, "Prop-noKrational-Xd"},
      {"X^3+Y^3+Z^3+1", 2, "Prop-touchdegn"},
      {"X^5+Y^5+Z^5+1", 2, "Prop-touchdegn"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.poly);
    MultiPoly f = parse(c.poly, kXYZ, Q);
    AnalysisReport rep = analyze_surface(f, true);
    CHECK(rep.verdict.is_exact(c.dim));
    REQUIRE(rep.verdict.certificate.has_value());
    CHECK(rep.verdict.certificate->criterion == c.criterion);
    CHECK_FALSE(rep.trace.empty());
  }
}

TEST_CASE("analyze_surface records bounds consistent with the verdict") {
  Field Q = make_rationals();
  AnalysisReport hyper = analyze_surface(parse("X*Y-1", kXYZ, Q));
  CHECK(hyper.verdict.is_exact(1));
  REQUIRE(hyper.upper.has_value());
  CHECK(hyper.upper->n == 1);

  AnalysisReport fermat = analyze_surface(parse("X^3+Y^3+Z^3+1", kXYZ, Q), true);
  CHECK(fermat.verdict.is_exact(2));
  REQUIRE(fermat.lower.has_value());
  CHECK(fermat.lower->n == 1);
  CHECK(fermat.lower->n <= fermat.verdict.n);
  // The trace shows the prime-degree criterion was tried and fell through.
  bool saw_prime = false;
  for (const CriterionOutcome& t : fermat.trace)
    if (t.name == std::string("criterion_prime_degree") &&
        t.outcome.find("failed") != std::string::npos)
      saw_prime = true;
  CHECK(saw_prime);
}

TEST_CASE("analyze_surface stays honest when nothing applies") {
  Field Q = make_rationals();
  // Degree 4, no graph variable, composite degree, tail Y^4+Z^4 splits over
  // Q into conjugate quadratics with no linear factor, and degree 4 is
  // outside the no-rational-point criterion.
  MultiPoly f = parse("X^4+Y^4+Z^4+1", kXYZ, Q);
  AnalysisReport rep = analyze_surface(f, true);
  CHECK(rep.verdict.kind == VerdictKind::LowerBound);
  CHECK(rep.verdict.n == 1);
  CHECK(rep.lower.has_value());
}

// ---------------------------------------------------------------------------
// Replay is not vacuous
// ---------------------------------------------------------------------------

TEST_CASE("tampered certificates fail replay") {
  Field Q = make_rationals();
  MultiPoly f = parse("X^3+Y^3+Z^3+1", kXYZ, Q);
  AnalysisReport rep = analyze_surface(f, true);
  REQUIRE(rep.verdict.is_exact(2));
  DimensionVerdict wrong_n = rep.verdict;
  wrong_n.n = 1;
  CHECK_FALSE(replay_certificate(f, wrong_n, true));
  DimensionVerdict wrong_witness = rep.verdict;
  wrong_witness.certificate->witness_g = parse("X", kXYZ, Q);
  CHECK_FALSE(replay_certificate(f, wrong_witness, true));
  DimensionVerdict wrong_criterion = rep.verdict;
  wrong_criterion.certificate->criterion = "made-up";
  CHECK_FALSE(replay_certificate(f, wrong_criterion, true));
  DimensionVerdict no_cert = rep.verdict;
  no_cert.certificate.reset();
  CHECK_FALSE(replay_certificate(f, no_cert, true));
  // A certificate replayed against a different surface must fail.
  CHECK_FALSE(replay_certificate(parse("X^3+Y^3+2*Z^3+1", kXYZ, Q),
                                 rep.verdict, true));
}

// ---------------------------------------------------------------------------
// Randomized consistency
// ---------------------------------------------------------------------------

TEST_CASE("random quadrics over GF(7): classify or reject, and always "
          "replay") {
  Field F7 = make_prime_field(BigInt(7));
  std::mt19937_64 rng(0xd1c7);
  int exact = 0, rejected = 0;
  for (int trial = 0; trial < 60; ++trial) {
    MultiPoly f = random_quadric(F7, rng);
    if (!f.valid() || f.total_degree() != 2) continue;
    try {
      DimensionVerdict v = classify_quadric(f);
      CHECK(v.kind == VerdictKind::Exact);
      CHECK((v.n == 1 || v.n == 2));
      CHECK(replay_certificate(f, v));
      ++exact;
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::ReducibleInput ||
             e.code() == ErrorCode::ConstantPolynomial));
      ++rejected;
    }
  }
  CHECK(exact >= 10);
  CHECK(rejected >= 1);
}

TEST_CASE("random plane curves over GF(5): exact verdicts replay and agree "
          "with the subset test") {
  Field F5 = make_prime_field(BigInt(5));
  std::mt19937_64 rng(0xcafe5);
  int verdicts = 0;
  for (int trial = 0; trial < 120; ++trial) {
    MultiPoly f = random_plane_poly(F5, 3, rng);
    if (!f.valid() || f.total_degree() < 1) continue;
    DimensionVerdict v;
    try {
      v = analyze_curve(f, true);
    } catch (const Error&) {
      continue;  // reducible or otherwise rejected input
    }
    if (v.kind != VerdictKind::Exact) continue;
    ++verdicts;
    CHECK(replay_certificate(f, v, true));
    CurveSubsetReport rep = curve_recip_subset(f, true);
    if (v.n == 0) CHECK(rep.answer == CurveSubsetReport::Answer::Yes);
    if (v.n == 1) CHECK(rep.answer == CurveSubsetReport::Answer::No);
  }
  CHECK(verdicts >= 25);
}
