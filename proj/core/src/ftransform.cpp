// Transform construction over K(t), redundant infinity computation over K
// and K(t), and regularity transfer via Jacobian ranks in both pictures.
#include "recipdim/ftransform.hpp"

#include "recipdim/polyops.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace recipdim {
namespace {


// f - t over K(t).
MultiPoly lift_minus_t(const MultiPoly& f, const Field& kt) {
  MultiPoly lifted = poly_embed(f, kt);
  return lifted - MultiPoly::constant(kt, f.vars(), Value::generator(kt));
}

TransformedVariety assemble(std::optional<MultiPoly> ambient,
                            const MultiPoly& f) {
  TransformedVariety T;
  T.base = f.field();
  T.ext = make_rational_functions(T.base, "t");
  T.ambient = std::move(ambient);
  T.f = f;
  if (T.ambient) T.lifted.push_back(poly_embed(*T.ambient, T.ext));
  T.lifted.push_back(lift_minus_t(f, T.ext));
  T.dim_base = 2;
  T.dim_transform = 1;
  return T;
}

// Sorted orbit degrees, the exact invariant preserved between K and K(t).
std::vector<int> degree_profile(const std::vector<OrbitStatus>& orbits) {
  std::vector<int> d;
  d.reserve(orbits.size());
  for (const auto& s : orbits) d.push_back(s.orbit.degree);
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> degree_profile(const std::vector<ProjPointOrbit>& orbits) {
  std::vector<int> d;
  d.reserve(orbits.size());
  for (const auto& p : orbits) d.push_back(p.degree);
  std::sort(d.begin(), d.end());
  return d;
}

// The homogeneous lifted system over K(t): homogenizing f - t turns the -t
// constant into -t*W^d, exactly the leading-form-preserving shift the
// infinity computation relies on.
std::vector<MultiPoly> homogeneous_lifted(const TransformedVariety& T,
                                          const std::string& w) {
  std::vector<MultiPoly> out;
  for (const auto& h : T.lifted) out.push_back(homogenize(h, w).poly);
  return out;
}

}  // namespace

TransformedVariety build_transform(const MultiPoly& g, const MultiPoly& f) {
  require_internal(g.valid() && f.valid(), "transform of unset polynomials");
  require_internal(f.vars() == g.vars() && field_eq(f.field(), g.field()),
                   "transform polynomial and surface share one ring");
  require_internal(f.vars().size() == 3,
                   "surface transforms live in three variables");
  if (g.is_constant())
    fail(ErrorCode::ConstantPolynomial, "ambient surface polynomial constant");
  if (reduce_mod_principal(f, g).is_constant())
    fail(ErrorCode::ConstantOnVariety,
         "transform polynomial is constant on the surface");
  return assemble(g, f);
}

TransformedVariety build_transform_plane(const MultiPoly& f) {
  require_internal(f.valid(), "transform of an unset polynomial");
  require_internal(f.vars().size() == 2,
                   "plane transforms live in two variables");
  if (f.is_constant())
    fail(ErrorCode::ConstantOnVariety, "transform polynomial is constant");
  return assemble(std::nullopt, f);
}

TransformInfinity transform_infinity(const TransformedVariety& T) {
  TransformInfinity out;
  if (!T.ambient) {
    // Plane case: infinity of V(f - t) is cut out by the leading binary form
    // of f, identical over K and K(t).
    out.profile = curve_infinity_profile(T.f);
    out.orbit_count_base = static_cast<int>(out.profile.orbits.size());
    try {
      InfinityProfile over_ext = curve_infinity_profile(T.lifted.back());
      out.orbit_count_ext = static_cast<int>(over_ext.orbits.size());
      if (degree_profile(over_ext.orbits) !=
          degree_profile(out.profile.orbits))
        fail(ErrorCode::CrossCheckMismatch,
             "infinity orbits differ between K and K(t)");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedFactorization &&
          e.code() != ErrorCode::UnsupportedField)
        throw;
    }
    return out;
  }

  MultiPoly fd = leading_form(T.f).poly;
  MultiPoly ge = leading_form(*T.ambient).poly;
  std::vector<ProjPointOrbit> base_orbits;
  try {
    base_orbits = solve_proj_system(fd, ge);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CommonComponent)
      fail(ErrorCode::NonCoprimeLeadingForms,
           "leading forms of f and the surface share a component");
    throw;
  }
  out.orbit_count_base = static_cast<int>(base_orbits.size());
  for (const auto& p : base_orbits) {
    OrbitStatus s;
    s.orbit = orbit_prepend_zero(p);
    out.profile.orbits.push_back(std::move(s));
    out.profile.geometric_count += p.degree;
  }
  try {
    std::vector<ProjPointOrbit> ext_orbits =
        solve_proj_system(poly_embed(fd, T.ext), poly_embed(ge, T.ext));
    out.orbit_count_ext = static_cast<int>(ext_orbits.size());
    if (degree_profile(ext_orbits) != degree_profile(base_orbits))
      fail(ErrorCode::CrossCheckMismatch,
           "infinity orbits differ between K and K(t)");
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedFactorization &&
        e.code() != ErrorCode::UnsupportedField)
      throw;
  }
  return out;
}

bool transform_regular_at(const TransformedVariety& T,
                          const ProjPointOrbit& p) {
  const std::string w = "W";
  // Homogeneous systems over K and over K(t); the transformed curve has
  // codimension codim in its projective space, so regular means full rank.
  std::vector<MultiPoly> over_base;
  if (T.ambient) over_base.push_back(homogenize(*T.ambient, w).poly);
  over_base.push_back(homogenize(T.f, w).poly);
  std::vector<MultiPoly> over_ext = homogeneous_lifted(T, w);
  int codim = static_cast<int>(over_base.size());

  if (T.ambient) {
    int ambient_rank = jacobian_rank_at({over_base[0]}, p);
    if (ambient_rank < 1)
      fail(ErrorCode::SingularOnAmbient,
           "point is singular on the closure of the base surface");
  }

  int rank_ext = jacobian_rank_at(over_ext, p);
  bool regular_ext = rank_ext == codim;

  if (T.f.total_degree() == 1) {
    // Linear transform of a hypersurface (or of the plane): always regular;
    // the concrete K(t) rank must confirm it.
    if (!regular_ext)
      fail(ErrorCode::CrossCheckMismatch,
           "linear transform reported singular at a regular ambient point");
    return true;
  }

  // Nonlinear transform: regularity coincides with regularity of p on the
  // closure of the zero set of f in the base variety, decided over K; the
  // K(t) rank agrees because the extra t-term vanishes at infinity.
  bool regular_base = jacobian_rank_at(over_base, p) == codim;
  if (regular_base != regular_ext)
    fail(ErrorCode::CrossCheckMismatch,
         "Jacobian ranks over K and K(t) disagree at an infinity point");
  return regular_base;
}

}  // namespace recipdim
