// Projective geometry over exact non-closed fields: points at infinity as
// Galois orbits, exact solving of pairs of homogeneous forms in P^2 by
// resultant elimination and back-substitution, Jacobian ranks at orbit
// points, regularity profiles at infinity, plane-curve smoothness and genus,
// and a brute-force finite-field oracle.
#pragma once

#include "recipdim/multipoly.hpp"
#include "recipdim/polyops.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recipdim {

// One Galois orbit of projective points. The orbit is presented over
// ext = base[th]/(minpoly) (or base itself when the point is rational);
// coords live in ext, the first nonzero coordinate is normalized to 1, and
// deg minpoly equals the number of geometric points in the orbit.
struct ProjPointOrbit {
  Field base;
  Field ext;
  UniPoly minpoly;            // monic over base; x itself for rational orbits
  std::vector<Value> coords;  // over ext; coords[chart] == 1
  int chart = 0;              // index of the first nonzero coordinate
  int degree = 1;             // = deg minpoly
};

// Normalizes (chart/scale), checks deg minpoly >= 1, and wires ext. The
// coords must lie in `ext`, which is `base` itself or one extension layer
// whose modulus is `minpoly`.
ProjPointOrbit make_orbit(const Field& base, const UniPoly& minpoly,
                          const Field& ext, std::vector<Value> coords);
// Convenience for rational orbits: coords over base.
ProjPointOrbit make_rational_orbit(const Field& base,
                                   std::vector<Value> coords);

// "[0:1:-th] where th^2+1=0" (rational orbits omit the minpoly clause).
std::string orbit_to_string(const ProjPointOrbit& p);

// Deterministic total order used to sort solver output.
bool orbit_less(const ProjPointOrbit& a, const ProjPointOrbit& b);

// Exact orbit identity via chart, degree, and characteristic polynomials of
// deterministic coordinate combinations (presentation-independent).
bool orbit_eq(const ProjPointOrbit& a, const ProjPointOrbit& b);

// Re-express an orbit over a larger base field (base -> newbase stagewise,
// e.g. K -> K(t)); the minimal polynomial must stay irreducible, which holds
// for the rational-function extensions this library performs.
ProjPointOrbit orbit_embed_base(const ProjPointOrbit& p, const Field& newbase);

// [x:y:z] -> [0:x:y:z]: view a point of the W=0 plane inside P^3.
ProjPointOrbit orbit_prepend_zero(const ProjPointOrbit& p);

enum class OrbitRegularity { Regular, Singular, Undetermined };

struct OrbitStatus {
  ProjPointOrbit orbit;
  OrbitRegularity flag = OrbitRegularity::Undetermined;
};

struct InfinityProfile {
  std::vector<OrbitStatus> orbits;
  int geometric_count = 0;  // = sum of orbit degrees
};

// The points at infinity of a hypersurface V(f) in A^3 are cut out of the
// W=0 plane by the leading form f_d. Error ConstantPolynomial.
HomogeneousForm surface_infinity(const MultiPoly& f);

// Points at infinity of a plane curve V(f) in A^2 as orbits [0:x:y],
// obtained by factoring the leading binary form. Error ConstantPolynomial.
InfinityProfile curve_infinity_profile(const MultiPoly& f);

// Per-orbit regularity flags for the projective closure of the affine
// hypersurface V(f): regular iff the Jacobian of the homogenization has
// rank 1 at the (zero-prepended) orbit point.
InfinityProfile regular_at_infinity(const MultiPoly& f,
                                    InfinityProfile profile);

// Records the linear coordinate changes a solve had to apply.
struct SolveTrace {
  std::vector<std::string> coordinate_changes;
};

// Complete solution set of F = G = 0 in P^2 as Galois orbits, for coprime
// nonzero homogeneous forms in 3 variables. Eliminates the last variable by
// resultant, factors the resulting binary form, and back-substitutes; a
// deterministic (seedable via RECIPDIM_SEED) family of linear coordinate
// changes separates non-generic fiber configurations. Errors:
// ZeroPolynomial, CommonComponent, UnsupportedFactorization (propagated).
std::vector<ProjPointOrbit> solve_proj_system(const MultiPoly& F,
                                              const MultiPoly& G,
                                              SolveTrace* trace = nullptr);

// Rank over the orbit's coefficient field of the matrix of all partial
// derivatives of `polys` evaluated at p. The forms may live over a larger
// tower than the orbit (both are lifted to a common one). Error
// PointNotOnVariety when p does not satisfy every poly.
int jacobian_rank_at(const std::vector<MultiPoly>& polys,
                     const ProjPointOrbit& p);

struct SingularityScan {
  enum class Verdict { NotAllSingular, AllSingular, Undetermined } verdict =
      Verdict::Undetermined;
  std::optional<ProjPointOrbit> witness;  // regular point for NotAllSingular
};

// Decides whether the infinity curve of the surface V(f) contains a point
// that is regular on the projective closure: finds a witness by sampling
// line sections, or proves every infinity point singular by the divisibility
// containment test f_d | dF/dv mod W; otherwise Undetermined. The leading
// form must be irreducible over K (error ReducibleLeadingForm when it is
// detectably reducible).
SingularityScan infinity_not_all_singular(const MultiPoly& f);

// True iff the gradient system dF/dv = 0 (all three variables) has no
// solution in P^2. Pre: F squarefree.
bool smooth_plane_curve(const MultiPoly& F);

// (d-1)(d-2)/2 for a smooth plane projective curve of degree d.
// Error NotSmooth.
int genus_smooth_plane_curve(const MultiPoly& F);

// Exhaustive enumeration of P^2(GF(p^k)) solutions of F = G = 0; the forms
// must be defined over GF(p). Points are coordinate triples over GF(p^k)
// with the first nonzero coordinate normalized to 1. Error TooLarge when
// p^(2k) > 10^6.
std::vector<std::vector<Value>> bruteforce_proj_points(const MultiPoly& F,
                                                       const MultiPoly& G,
                                                       const Field& gfp,
                                                       int k);

// Geometric points of an orbit over GF(p^K): evaluates the coordinate
// expressions at every root of the minimal polynomial in the given field
// (empty when deg does not divide K). Same normalization as the
// brute-force enumeration.
std::vector<std::vector<Value>> expand_orbit(const ProjPointOrbit& p,
                                             const Field& gfq);

// GF(p^k) with a deterministic modulus (k = 1 returns GF(p) itself).
Field make_finite_field(const BigInt& p, int k);

}  // namespace recipdim
