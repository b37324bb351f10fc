#pragma once

// Serialization of audit reports: JSON for machines, Markdown for people.
// Output depends only on the report contents, so equal reports give
// byte-identical text.

#include <cstdio>
#include <sstream>
#include <string>

#include <json.hpp>

#include "rotsurf/audit/audit.hpp"

namespace rotsurf::audit {

namespace detail {

inline nlohmann::ordered_json verdict_json(const AuditVerdict& v, bool with_formula_fields) {
  nlohmann::ordered_json j;
  if (with_formula_fields) {
    j["formula_id"] = v.formula_id;
    j["paper_anchor"] = v.anchor;
    j["counterpart"] = v.counterpart;
    j["notes"] = v.notes;
  } else {
    j["check_id"] = v.formula_id;
    j["description"] = v.anchor;
  }
  j["samples"] = v.samples;
  j["evaluated"] = v.evaluated;
  j["skipped"] = v.skipped;
  nlohmann::ordered_json reasons = nlohmann::ordered_json::object();
  for (const auto& [reason, count] : v.skip_reasons) reasons[reason] = count;
  j["skip_reasons"] = reasons;
  j["max_abs_err"] = v.max_abs_err;
  j["max_rel_err"] = v.max_rel_err;
  j["argmax"] = {v.argmax_u, v.argmax_v};
  j["argmax_component"] = v.argmax_component;
  j["subject_at_argmax"] = v.transcribed_at_argmax;
  j["reference_at_argmax"] = v.pipeline_at_argmax;
  j["tolerance"] = v.tolerance;
  j["verdict"] = to_string(v.verdict);
  return j;
}

inline std::string fmt(double x, const char* spec = "%.3e") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const AuditReport& r) {
  nlohmann::ordered_json j;
  j["engine_version"] = r.engine_version;
  nlohmann::ordered_json ranges = nlohmann::ordered_json::array();
  for (const auto& range : r.grid.u_ranges) ranges.push_back({range.lo, range.hi});
  j["grid"] = {{"u_ranges", ranges},
               {"nu", r.grid.nu_total()},
               {"v_range", {r.grid.v_min, r.grid.v_max}},
               {"nv", r.grid.nv},
               {"u_exclude", r.grid.u_exclude}};
  j["tolerance"] = r.tolerance;
  j["min_samples"] = r.min_samples;
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(detail::verdict_json(v, true));
  j["verdicts"] = verdicts;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.consistency_checks) checks.push_back(detail::verdict_json(c, false));
  j["consistency_checks"] = checks;
  return j;
}

inline std::string to_json_string(const AuditReport& r) { return to_json(r).dump(2) + "\n"; }

inline std::string to_markdown(const AuditReport& r) {
  std::ostringstream os;
  os << "# Formula audit report\n\n";
  os << "- engine version: " << r.engine_version << "\n";
  os << "- grid: " << r.grid.nu_total() << " u-samples over";
  for (const auto& range : r.grid.u_ranges) os << " [" << detail::fmt(range.lo, "%g") << ", " << detail::fmt(range.hi, "%g") << "]";
  os << ", " << r.grid.nv << " v-samples over [" << detail::fmt(r.grid.v_min, "%g") << ", "
     << detail::fmt(r.grid.v_max, "%g") << ")\n";
  os << "- tolerance (relative, denominator max(|reference|, 1)): " << detail::fmt(r.tolerance, "%g") << "\n";
  os << "- minimum evaluated samples per verdict: " << r.min_samples << "\n\n";

  auto table = [&os](const std::vector<AuditVerdict>& rows) {
    os << "| id | samples | evaluated | skipped | max abs err | max rel err | arg-max (u, v) | component | verdict |\n";
    os << "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& v : rows) {
      os << "| " << v.formula_id << " | " << v.samples << " | " << v.evaluated << " | " << v.skipped << " | "
         << detail::fmt(v.max_abs_err) << " | " << detail::fmt(v.max_rel_err) << " | ("
         << detail::fmt(v.argmax_u, "%.6g") << ", " << detail::fmt(v.argmax_v, "%.6g") << ") | "
         << v.argmax_component << " | " << to_string(v.verdict) << " |\n";
    }
  };

  os << "## Printed formulas against the pipeline\n\n";
  table(r.verdicts);
  os << "\n## Printed formulas against each other\n\n";
  table(r.consistency_checks);
  os << "\n## Notes\n\n";
  for (const auto& v : r.verdicts) {
    os << "- **" << v.formula_id << "**: `" << v.anchor << "` compared with " << v.counterpart;
    if (!v.notes.empty()) os << " (" << v.notes << ")";
    os << ".\n";
  }
  for (const auto& c : r.consistency_checks) os << "- **" << c.formula_id << "**: " << c.anchor << ".\n";
  return os.str();
}

}  // namespace rotsurf::audit
