// Dimension verdicts for reciprocal complements of affine coordinate rings.
//
// Each analysis either pins the Krull dimension of the reciprocal complement
// exactly, brackets it with a bound, or reports Inconclusive with the first
// hypothesis it could not verify.  Exact verdicts always carry a certificate
// that re-verifies mechanically: `replay_certificate` re-runs every recorded
// check from the serialized witnesses and must reproduce the verdict.
//
// Curves are handled by the points-at-infinity theorem (count and regularity
// of the orbits at infinity decide everything in the regular case).  Surfaces
// go through a fixed ladder of criteria: quadric classification, unit-pair
// upper bounds, a nonsingular-infinity lower bound, and three constructive
// Exact(2) criteria that exhibit a hyperplane witness whose section of the
// infinity curve is a single orbit, then certify the induced curve over K(t)
// to be regular at that orbit.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recipdim/field.hpp"
#include "recipdim/multipoly.hpp"
#include "recipdim/projgeom.hpp"

namespace recipdim {

enum class VerdictKind { Exact, LowerBound, UpperBound, Inconclusive };

std::string verdict_kind_name(VerdictKind k);

// Machine-replayable justification for a verdict.  `criterion` names the
// decision rule; the witness slots hold the data the rule needs to re-check
// itself.  `verified` lists hypotheses the library established by
// computation, `assumed` lists hypotheses taken on the caller's word (these
// are echoed, never silently dropped), `notes` carry derived conclusions
// that need no further checking.
struct Certificate {
  std::string criterion;
  std::optional<MultiPoly> witness_g;       // hyperplane / unit factor
  std::optional<MultiPoly> witness_g2;      // second unit factor
  std::optional<Value> witness_const;       // constant in a unit identity
  std::optional<ProjPointOrbit> witness_point;
  std::vector<std::string> verified;
  std::vector<std::string> assumed;
  std::vector<std::string> notes;
};

struct DimensionVerdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  int n = -1;          // dimension (Exact) or bound value; -1 for Inconclusive
  std::string reason;  // first unverifiable hypothesis when Inconclusive
  std::optional<Certificate> certificate;

  bool is_exact(int m) const { return kind == VerdictKind::Exact && n == m; }
};

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

// Decides the dimension of the reciprocal complement of K[X,Y]/(f) from the
// points at infinity: all orbits regular and exactly one orbit gives
// Exact(1); all regular and two or more orbits gives Exact(0) (the
// reciprocal complement is a field); a singular orbit gives Inconclusive
// (the criterion requires the curve to be regular at infinity).
//
// Irreducibility of f is decided for deg <= 2 and must be asserted via
// `assume_irreducible` for deg >= 3 (HypothesisUnverified otherwise);
// detected reducibility fails with ReducibleInput.  Works over any
// supported field, including rational-function fields.
DimensionVerdict analyze_curve(const MultiPoly& f, bool assume_irreducible = false);

// Same analysis for a curve cut out by two surfaces in affine 3-space.
// The orbits at infinity are the common projective zeros of the two leading
// forms (NonCoprimePair if those share a component); regularity asks the
// Jacobian of the homogenized pair to have rank 2 at the orbit.
// Irreducibility of the curve is always an assumption here.
DimensionVerdict analyze_curve_pair(const MultiPoly& f, const MultiPoly& g,
                                    bool assume_irreducible = false);

// Whether the coordinate ring embeds into its reciprocal complement.  For a
// curve this holds exactly when the reciprocal complement is a field
// (equivalently the intersection with the coordinate ring exceeds the
// constants), so the answer is derived from analyze_curve.
struct CurveSubsetReport {
  enum class Answer { Yes, No, Unknown } answer = Answer::Unknown;
  std::string reason;  // set when Unknown
  Certificate certificate;
};
CurveSubsetReport curve_recip_subset(const MultiPoly& f,
                                     bool assume_irreducible = false);

// ---------------------------------------------------------------------------
// Surfaces in affine 3-space
// ---------------------------------------------------------------------------

// Lower bound dim >= 1 for an irreducible surface whose infinity curve is
// irreducible and contains a point that is nonsingular on the projective
// closure.  The witness orbit is recorded; the same certificate notes that
// the coordinate ring then meets the reciprocal complement only in K.
// Throws HypothesisUnverified when a hypothesis fails or cannot be checked.
DimensionVerdict surface_lower_bound(const MultiPoly& f,
                                     bool assume_irreducible = false);

// Exact(2) from a hyperplane witness g: verifies that V(g) meets the
// infinity curve in a single orbit p, that p is nonsingular on the closure
// of the surface, that g is linear (or p is nonsingular on the closure of
// the g-slice), and that the induced curve over K(t) is regular at p.
// Rejected witnesses throw WitnessRejected.
DimensionVerdict certify_dim2_with_witness(const MultiPoly& f, const MultiPoly& g,
                                           bool assume_irreducible = false);

// Searches for a linear witness usable by certify_dim2_with_witness.
// Degree 2: a rational point on the infinity conic (found by enumeration
// over finite fields, by small sections over infinite ones) yields the
// tangent plane there.  Degree 3: a rational inflexion of the smooth
// infinity cubic (intersection with its Hessian) yields the tangent line.
// Absence of a witness is a normal outcome (std::nullopt).
std::optional<MultiPoly> search_witness_linear(const MultiPoly& f);

// Exact(2) for degree 2 or 3 over an infinite field when some linear section
// of the infinity curve is irreducible over K: the section is then a single
// orbit of degree >= 2 and the hyperplane is a certified witness.  Finding a
// rational point instead reports Inconclusive (the tangent-witness path
// applies).  Throws FiniteField / WrongDegree on unmet preconditions.
DimensionVerdict criterion_no_k_rational(const MultiPoly& f,
                                         bool assume_irreducible = false);

// Exact(2) when, after scaling and choosing a variable for the leading role,
// the leading form is v^d + g with g a nonzero binary form owning a linear
// factor g1 whose section point avoids the residual factor g/g1.  The
// witness plane is g1.  Throws ShapeMismatch when no variable fits and
// HypothesisUnverified when the characteristic divides the degree or no
// factor passes the disjointness check.
DimensionVerdict criterion_leading_split(const MultiPoly& f,
                                         bool assume_irreducible = false);

// Exact(2) for prime degree d (char not dividing d) when the leading form is
// v^d + g with g an irreducible binary form in the other two variables: the
// v = 0 section of the infinity curve is a single orbit of degree d and the
// coordinate plane is a certified witness.  Throws ShapeMismatch on shape or
// degree failure and GReducible when g factors.
DimensionVerdict criterion_prime_degree(const MultiPoly& f,
                                        bool assume_irreducible = false);

// Complete classification of irreducible quadric surfaces (char != 2):
// Exact(1) exactly for surfaces affinely equivalent to V(XY - 1), Exact(2)
// in every other case, with the certificate naming the branch (graph,
// irreducible infinity conic with tangent or irreducible-section witness,
// double-line reductions).  Reducible inputs throw ReducibleInput,
// characteristic 2 throws CharacteristicTwo.
DimensionVerdict classify_quadric(const MultiPoly& f);

// UpperBound(1) from an exact unit identity f = g1*g2 - d with d a nonzero
// constant: the factors become units of the coordinate ring, and a unit
// transcendental over K caps the dimension of the reciprocal complement one
// below the dimension of the ring.  The identity and the transcendence of
// g1's image are re-verified; failures throw IdentityFails.
DimensionVerdict units_upper_bound(const MultiPoly& f, const MultiPoly& g1,
                                   const MultiPoly& g2, const Value& d);

// ---------------------------------------------------------------------------
// Orchestrator
// ---------------------------------------------------------------------------

struct CriterionOutcome {
  std::string name;     // criterion that ran
  std::string outcome;  // verdict or the reason it passed / was skipped
};

struct AnalysisReport {
  MultiPoly input;
  DimensionVerdict verdict;
  std::vector<CriterionOutcome> trace;        // every criterion, in run order
  std::optional<DimensionVerdict> lower;      // surviving lower bound, if any
  std::optional<DimensionVerdict> upper;      // surviving upper bound, if any
};

// Runs the surface criteria in a fixed order — quadric classification,
// unit-pattern probe, coordinate-graph detection, the nonsingular-infinity
// lower bound, the prime-degree and leading-split constructions, the
// tangent-witness search, and the irreducible-section criterion — recording
// one trace entry per criterion and returning the strongest verdict.  Exact
// verdicts are replayed from their certificate before being returned, and a
// verdict that violates a recorded bound aborts with InternalContradiction.
AnalysisReport analyze_surface(const MultiPoly& f, bool assume_irreducible = false);

// Re-runs every machine-checkable hypothesis of the verdict's certificate
// against the input; true when the criterion reproduces the same conclusion.
bool replay_certificate(const MultiPoly& f, const DimensionVerdict& v,
                        bool assume_irreducible = false);

}  // namespace recipdim
