// Localizations of the reciprocal complement of the plane's coordinate ring
// K[X,Y] at the prime p_f attached to an irreducible curve V(f).
//
// Three questions are decided (or honestly left open) about that localization:
//   * is it a field?  Decided by the points at infinity of the curve, with the
//     orbit count independently recomputed from the generic fiber f - t over
//     K(t); the two computations must agree.
//   * is it a DVR (equivalently, in the non-field case: integrally closed)?
//     The localization is a DVR exactly when the curve's coordinate ring is a
//     polynomial ring in one variable.  A syntactic coordinate detector proves
//     Yes; two refuters prove No (more than one point at infinity or a single
//     non-rational one, and a smooth projective closure of genus >= 1, which
//     obstructs rationality); everything else is Unknown by design, since full
//     coordinate recognition is out of scope.
//   * witness family: f = X^d + Y^(d-1) + 1 over Q has a single regular
//     rational point at infinity and smooth closure of genus (d-1)(d-2)/2 > 0
//     for d >= 3, so its localization is one-dimensional but not a DVR --
//     proving that the reciprocal complement of Q[X,Y] is not integrally
//     closed.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "recipdim/field.hpp"
#include "recipdim/multipoly.hpp"
#include "recipdim/projgeom.hpp"

namespace recipdim {

enum class TriState { Yes, No, Unknown };

const char* tri_state_name(TriState s);

// Proof that f is a coordinate of the plane: f = a * solved_var + h(other)
// with a nonzero constant a, so K[X,Y] = K[f, complement_var] and the curve's
// coordinate ring is a polynomial ring in complement_var.  The detector is a
// sufficient syntactic test: absence proves nothing.
struct CoordinateCertificate {
  std::string solved_var;
  std::string complement_var;
  Value coeff;  // the constant coefficient of solved_var
  std::string note;
};

std::optional<CoordinateCertificate> coordinate_detect(const MultiPoly& f);

// Outcome of the field test, carrying both independently computed sides.
struct FieldTest {
  TriState is_field = TriState::Unknown;
  InfinityProfile profile;        // orbits at infinity over K, regularity-flagged
  int orbit_count = 0;            // closed points at infinity over K
  int transform_orbit_count = 0;  // recomputed from f - t over K(t)
  std::vector<std::string> notes;
};

// Outcome of the DVR / integral-closure test.  `coordinate` is present
// exactly when is_dvr == Yes; a No always carries its refuting note; `genus`
// is attached whenever the projective closure is smooth.
struct DvrTest {
  TriState is_dvr = TriState::Unknown;
  TriState integrally_closed = TriState::Unknown;
  std::optional<CoordinateCertificate> coordinate;
  std::optional<int> genus;
  std::vector<std::string> notes;
};

struct LocalizationReport {
  MultiPoly input;
  FieldTest field;
  DvrTest dvr;
};

// Full analysis of the localization at p_f.  Preconditions: f lives in two
// variables over Q (FiniteField for finite fields, UnsupportedField for other
// infinite towers) and deg f >= 2 (DegreeCharConflict); irreducibility is
// decided when possible and must otherwise be asserted via
// `assume_irreducible` (HypothesisUnverified / ReducibleInput as in
// analyze_curve).  CrossCheckMismatch reports a disagreement between the two
// orbit computations and means a library bug.
LocalizationReport analyze_plane_localization(const MultiPoly& f,
                                              bool assume_irreducible = false);

// The two halves of the report as standalone operations.
FieldTest localization_is_field(const MultiPoly& f,
                                bool assume_irreducible = false);
DvrTest localization_dvr(const MultiPoly& f, bool assume_irreducible = false);

// Certified witness that the reciprocal complement of Q[X,Y] is not
// integrally closed, built from f = X^d + Y^(d-1) + 1.  Every claim is
// machine-verified: smoothness of the projective closure (which also proves f
// irreducible), the single regular rational point [0:0:1] at infinity, and
// the genus value.  Error BadDegree for d < 3 (the genus would be 0).
struct NonIntegralityWitness {
  MultiPoly f;
  int d = 0;
  int genus = 0;
  InfinityProfile profile;            // the single orbit at infinity
  std::vector<std::string> verified;  // the checked claims, in order
  std::string conclusion;
};

NonIntegralityWitness non_integrally_closed_witness(int d);

}  // namespace recipdim
