// Deterministic JSON reports for every analysis the tools expose.  Identical
// inputs produce identical bytes: object keys are emitted in a fixed order,
// polynomials are rendered in canonical graded-lex form, optional fields
// appear exactly when their data exists, and timing is attached only when the
// caller explicitly measured it.  Every report carries "schema": 1.

#pragma once

#include <optional>
#include <string>

#include "recipdim/dimcriteria.hpp"
#include "recipdim/ftransform.hpp"
#include "recipdim/planeloc.hpp"

namespace recipdim {

inline constexpr const char* kToolName = "recipdim";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

// Fields common to every report: the subcommand that ran and the input echo.
struct ReportMeta {
  std::string command;
  std::string field_spec;  // canonical field description
  bool assume_irreducible = false;
  std::optional<double> elapsed_ms;  // set only when timing was requested
};

// Surface analysis: verdict, certificate, criterion trace, surviving bounds.
std::string report_surface(const ReportMeta& meta, const AnalysisReport& rep);

// Single verdict with certificate (curve analysis, quadric classification).
std::string report_verdict(const ReportMeta& meta, const MultiPoly& f,
                           const DimensionVerdict& v);

// Curve cut out by a pair of surfaces.
std::string report_verdict_pair(const ReportMeta& meta, const MultiPoly& f,
                                const MultiPoly& g, const DimensionVerdict& v);

// Points at infinity of a plane curve, with regularity flags.
std::string report_points(const ReportMeta& meta, const MultiPoly& f,
                          const InfinityProfile& profile);

// Infinity curve of a surface (the points at infinity form a curve, reported
// as its defining form).
std::string report_infinity_form(const ReportMeta& meta, const MultiPoly& f,
                                 const HomogeneousForm& form);

// Transform of a variety by a regular function: the lifted system over K(t),
// the transformed curve's points at infinity (computed over K and, when the
// kernel can factor there, recomputed over K(t)), and per-orbit regularity.
struct TransformReportData {
  TransformedVariety variety;
  TransformInfinity infinity;
  // orbit text -> "regular" / "singular" / the reason regularity could not
  // be decided there
  std::vector<std::pair<std::string, std::string>> regularity;
};
std::string report_transform(const ReportMeta& meta,
                             const TransformReportData& data);

// Localization of the plane's reciprocal complement at the prime of a curve.
std::string report_localization(const ReportMeta& meta,
                                const LocalizationReport& rep);

// Witness that the plane's reciprocal complement is not integrally closed.
std::string report_witness(const ReportMeta& meta,
                           const NonIntegralityWitness& w);

}  // namespace recipdim
