#include "recipdim/report.hpp"

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace recipdim {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* regularity_name(OrbitRegularity r) {
  switch (r) {
    case OrbitRegularity::Regular: return "Regular";
    case OrbitRegularity::Singular: return "Singular";
    case OrbitRegularity::Undetermined: return "Undetermined";
  }
  return "?";
}

std::string value_text(const Field& k, const std::vector<std::string>& vars,
                       const Value& v) {
  return poly_format(MultiPoly::constant(k, vars, v));
}

ordered_json orbit_json(const ProjPointOrbit& p) {
  ordered_json j;
  j["orbit"] = orbit_to_string(p);
  j["degree"] = p.degree;
  return j;
}

ordered_json profile_json(const InfinityProfile& p, bool with_regularity) {
  ordered_json j;
  j["orbits"] = ordered_json::array();
  for (const OrbitStatus& st : p.orbits) {
    ordered_json o = orbit_json(st.orbit);
    if (with_regularity) o["regularity"] = regularity_name(st.flag);
    j["orbits"].push_back(std::move(o));
  }
  j["geometric_count"] = p.geometric_count;
  return j;
}

ordered_json certificate_json(const Certificate& c, const Field& k,
                              const std::vector<std::string>& vars) {
  ordered_json j;
  j["criterion"] = c.criterion;
  if (c.witness_g) j["witness_g"] = poly_format(*c.witness_g);
  if (c.witness_g2) j["witness_g2"] = poly_format(*c.witness_g2);
  if (c.witness_const) j["witness_const"] = value_text(k, vars, *c.witness_const);
  if (c.witness_point) j["witness_point"] = orbit_to_string(*c.witness_point);
  j["verified"] = c.verified;
  j["assumed"] = c.assumed;
  j["notes"] = c.notes;
  return j;
}

ordered_json verdict_json(const DimensionVerdict& v, const Field& k,
                          const std::vector<std::string>& vars) {
  ordered_json j;
  j["kind"] = verdict_kind_name(v.kind);
  if (v.kind != VerdictKind::Inconclusive) j["n"] = v.n;
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate, k, vars);
  return j;
}

ordered_json envelope(const ReportMeta& meta) {
  ordered_json j;
  j["schema"] = kReportSchema;
  j["tool"] = ordered_json{{"name", kToolName}, {"version", kToolVersion}};
  j["command"] = meta.command;
  return j;
}

ordered_json input_json(const ReportMeta& meta, const MultiPoly& f) {
  ordered_json j;
  j["poly"] = poly_format(f);
  j["vars"] = f.vars();
  j["field"] = meta.field_spec;
  j["degree"] = f.total_degree();
  j["assume_irreducible"] = meta.assume_irreducible;
  return j;
}

std::string finish(ordered_json& j, const ReportMeta& meta) {
  if (meta.elapsed_ms) j["elapsed_ms"] = *meta.elapsed_ms;
  return j.dump(2) + "\n";
}

}  // namespace

std::string report_surface(const ReportMeta& meta, const AnalysisReport& rep) {
  const Field& k = rep.input.field();
  const auto& vars = rep.input.vars();
  ordered_json j = envelope(meta);
  j["input"] = input_json(meta, rep.input);
  j["verdict"] = verdict_json(rep.verdict, k, vars);
  if (rep.lower) j["lower"] = verdict_json(*rep.lower, k, vars);
  if (rep.upper) j["upper"] = verdict_json(*rep.upper, k, vars);
  j["trace"] = ordered_json::array();
  for (const CriterionOutcome& t : rep.trace)
    j["trace"].push_back(
        ordered_json{{"criterion", t.name}, {"outcome", t.outcome}});
  return finish(j, meta);
}

std::string report_verdict(const ReportMeta& meta, const MultiPoly& f,
                           const DimensionVerdict& v) {
  ordered_json j = envelope(meta);
  j["input"] = input_json(meta, f);
  j["verdict"] = verdict_json(v, f.field(), f.vars());
  return finish(j, meta);
}

std::string report_verdict_pair(const ReportMeta& meta, const MultiPoly& f,
                                const MultiPoly& g,
                                const DimensionVerdict& v) {
  ordered_json j = envelope(meta);
  j["input"] = input_json(meta, f);
  j["input"]["second_poly"] = poly_format(g);
  j["verdict"] = verdict_json(v, f.field(), f.vars());
  return finish(j, meta);
}

std::string report_points(const ReportMeta& meta, const MultiPoly& f,
                          const InfinityProfile& profile) {
  ordered_json j = envelope(meta);
  j["input"] = input_json(meta, f);
  j["points_at_infinity"] = profile_json(profile, /*with_regularity=*/true);
  return finish(j, meta);
}

std::string report_infinity_form(const ReportMeta& meta, const MultiPoly& f,
                                 const HomogeneousForm& form) {
  ordered_json j = envelope(meta);
  j["input"] = input_json(meta, f);
  j["infinity_curve"] = ordered_json{{"form", poly_format(form.poly)},
                                     {"degree", form.degree}};
  return finish(j, meta);
}

std::string report_transform(const ReportMeta& meta,
                             const TransformReportData& data) {
  const TransformedVariety& tv = data.variety;
  ordered_json j = envelope(meta);
  j["input"] = input_json(meta, tv.ambient ? *tv.ambient : tv.f);
  ordered_json t;
  t["function"] = poly_format(tv.f);
  t["base_field"] = field_to_string(tv.base);
  t["extension_field"] = field_to_string(tv.ext);
  t["lifted_system"] = ordered_json::array();
  for (const MultiPoly& p : tv.lifted) t["lifted_system"].push_back(poly_format(p));
  t["dim_base"] = tv.dim_base;
  t["dim_transform"] = tv.dim_transform;
  t["points_at_infinity"] =
      profile_json(data.infinity.profile, /*with_regularity=*/false);
  t["orbit_count_base"] = data.infinity.orbit_count_base;
  if (data.infinity.orbit_count_ext)
    t["orbit_count_ext"] = *data.infinity.orbit_count_ext;
  t["regularity"] = ordered_json::array();
  for (const auto& [orbit, status] : data.regularity)
    t["regularity"].push_back(
        ordered_json{{"orbit", orbit}, {"status", status}});
  j["transform"] = std::move(t);
  return finish(j, meta);
}

std::string report_localization(const ReportMeta& meta,
                                const LocalizationReport& rep) {
  ordered_json j = envelope(meta);
  j["input"] = input_json(meta, rep.input);
  ordered_json fj;
  fj["is_field"] = tri_state_name(rep.field.is_field);
  fj["orbit_count"] = rep.field.orbit_count;
  fj["transform_orbit_count"] = rep.field.transform_orbit_count;
  fj["profile"] = profile_json(rep.field.profile, /*with_regularity=*/true);
  fj["notes"] = rep.field.notes;
  j["field_test"] = std::move(fj);
  ordered_json dj;
  dj["is_dvr"] = tri_state_name(rep.dvr.is_dvr);
  dj["integrally_closed"] = tri_state_name(rep.dvr.integrally_closed);
  if (rep.dvr.genus) dj["genus"] = *rep.dvr.genus;
  if (rep.dvr.coordinate) {
    const CoordinateCertificate& c = *rep.dvr.coordinate;
    dj["coordinate"] = ordered_json{
        {"solved_var", c.solved_var},
        {"complement_var", c.complement_var},
        {"coeff", value_text(rep.input.field(), rep.input.vars(), c.coeff)},
        {"note", c.note}};
  }
  dj["notes"] = rep.dvr.notes;
  j["dvr_test"] = std::move(dj);
  return finish(j, meta);
}

std::string report_witness(const ReportMeta& meta,
                           const NonIntegralityWitness& w) {
  ordered_json j = envelope(meta);
  j["input"] = ordered_json{{"witness_degree", w.d},
                            {"field", meta.field_spec}};
  ordered_json wj;
  wj["f"] = poly_format(w.f);
  wj["genus"] = w.genus;
  wj["points_at_infinity"] = profile_json(w.profile, /*with_regularity=*/true);
  wj["verified"] = w.verified;
  wj["conclusion"] = w.conclusion;
  j["witness"] = std::move(wj);
  return finish(j, meta);
}

}  // namespace recipdim
