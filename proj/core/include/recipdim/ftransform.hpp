// Transform of a variety by a regular function: lift the defining system to
// K(t) by adjoining f - t, track the dimension drop, compute the transformed
// curve's points at infinity redundantly over K and over K(t), and transfer
// regularity at those points between the two pictures.
#pragma once

#include "recipdim/multipoly.hpp"
#include "recipdim/projgeom.hpp"

#include <optional>
#include <vector>

namespace recipdim {

// The curve V(g, f - t) (or V(f - t) when the base variety is the whole
// plane) over K(t), together with its provenance over K.
struct TransformedVariety {
  Field base;                        // K
  Field ext;                         // K(t)
  std::optional<MultiPoly> ambient;  // g over K; empty = base variety is A^2
  MultiPoly f;                       // transform polynomial over K
  std::vector<MultiPoly> lifted;     // {g, f-t} (or {f-t}) over K(t)
  int dim_base = 2;
  int dim_transform = 1;
};

// Surface case: base variety V(g) in A^3, f in the same ring. The image of f
// must be non-constant on V(g), decided exactly by reduction modulo g
// (a single polynomial is a Groebner basis of the ideal it generates).
// Error ConstantOnVariety.
TransformedVariety build_transform(const MultiPoly& g, const MultiPoly& f);

// Plane case: base variety A^2, f in K[x,y] non-constant.
// Error ConstantOnVariety.
TransformedVariety build_transform_plane(const MultiPoly& f);

// Points at infinity of the transformed curve. Because f and f - t share
// their leading form, these are computed from data over K: the profile's
// orbits live over K, in the homogenized ring (plane: [0:x:y]; surface:
// [0:x:y:z]). The same computation is repeated over K(t) whenever the kernel
// can factor there; the orbit-degree multisets of the two runs must then
// coincide (error CrossCheckMismatch - always a library bug).
struct TransformInfinity {
  InfinityProfile profile;             // over K; regularity flags undetermined
  int orbit_count_base = 0;            // orbits found over K
  std::optional<int> orbit_count_ext;  // orbits found over K(t), if computable
};

// Errors: NonCoprimeLeadingForms (surface case, leading forms of f and g
// share a factor, so the infinity set is not finite); CrossCheckMismatch.
TransformInfinity transform_infinity(const TransformedVariety& T);

// True iff the projective closure of the transformed curve is nonsingular at
// p (an orbit from transform_infinity). Requires p nonsingular on the
// closure of the base variety (error SingularOnAmbient). For linear f over a
// hypersurface the answer is always true; for nonlinear f it equals
// nonsingularity of p on the closure of V(g, f), decided over K. In every
// case the Jacobian rank of the lifted homogeneous system over K(t) is also
// computed and must agree (error CrossCheckMismatch).
bool transform_regular_at(const TransformedVariety& T, const ProjPointOrbit& p);

}  // namespace recipdim
