#pragma once

// Command-line front end.  Exit codes: 0 success, 1 usage, 2 domain or
// degeneracy failure, 3 strict-audit failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rotsurf/rotsurf.hpp"

namespace rotsurf::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kStrictFailure = 3 };

struct MeshArgs {
  GridSpec grid;
  std::string format = "obj";
  std::string out;
  bool attrs = false;
};

struct InvariantsArgs {
  double u = 0.0, v = 0.0;
  bool json = false;
  double u_exclude = kDefaultUExclude;
  int lorentz_sign = +1;
};

struct AuditArgs {
  std::string grid = "40x24";
  double u_exclude = kDefaultUExclude;
  std::optional<double> tol;
  std::string out = "report.json";
  std::string markdown = "report.md";
  bool strict = false;
};

struct MinimalLocusArgs {
  std::optional<double> v;
  std::optional<int> sweep;
};

inline int cmd_mesh(const MeshArgs& a, std::ostream& out, std::ostream& err) {
  try {
    a.grid.validate();
  } catch (const std::invalid_argument& e) {
    err << "mesh: " << e.what() << '\n';
    return kUsage;
  }
  const Mesh mesh = build_mesh(tl_surface(a.grid.u_exclude), a.grid, a.attrs);
  if (mesh.vertices.empty()) {
    err << "mesh: every sample fell in the excluded band\n";
    return kDomain;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file) {
    err << "mesh: cannot open " << a.out << '\n';
    return kUsage;
  }
  if (a.format == "obj") {
    write_obj(file, mesh, a.attrs);
  } else {
    write_csv(file, mesh, a.attrs);
  }
  out << "wrote " << mesh.vertices.size() << " vertices, " << mesh.faces.size() << " triangles to " << a.out << '\n';
  return kOk;
}

inline int cmd_invariants(const InvariantsArgs& a, std::ostream& out, std::ostream& err) {
  const ParametricSurface surface = tl_surface(a.u_exclude);
  PointGeometry g;
  LVec3 lb3, lb1;
  try {
    g = point_geometry(surface, a.u, a.v, {1e-12, a.lorentz_sign});
    lb3 = lb3_position(surface, a.u, a.v);
    lb1 = lb1_position(surface, a.u, a.v);
  } catch (const GeometryError& e) {
    err << "invariants: " << to_string(e.code()) << " (" << e.what() << ")\n";
    return kDomain;
  }

  const std::vector<std::pair<std::string, double>> fields = {
      {"u", g.u},         {"v", g.v},         {"E", g.E},           {"F", g.F},           {"G", g.G},
      {"detI", g.detI},   {"n1", g.n.x1},     {"n2", g.n.x2},       {"n3", g.n.x3},       {"L", g.L},
      {"M", g.M},         {"N", g.N},         {"detII", g.detII},   {"e11", g.e11},       {"e12", g.e12},
      {"e22", g.e22},     {"H", g.H},         {"K", g.K},           {"X", g.X},           {"Y", g.Y},
      {"Z", g.Z},         {"lb3_1", lb3.x1},  {"lb3_2", lb3.x2},    {"lb3_3", lb3.x3},    {"lb1_1", lb1.x1},
      {"lb1_2", lb1.x2},  {"lb1_3", lb1.x3},
  };
  if (a.json) {
    nlohmann::ordered_json j;
    for (const auto& [name, value] : fields) j[name] = value;
    j["character"] = to_string(g.character);
    out << j.dump() << '\n';
  } else {
    for (const auto& [name, value] : fields) out << name << " = " << format_double(value) << '\n';
    out << "character = " << to_string(g.character) << '\n';
  }
  return kOk;
}

/// "NUxNV"; NU counts u-samples over both signs and must be even.
inline std::optional<audit::AuditGrid> parse_audit_grid(const std::string& spec, double u_exclude) {
  const auto x = spec.find_first_of("xX");
  if (x == std::string::npos) return std::nullopt;
  int nu = 0, nv = 0;
  try {
    std::size_t used = 0;
    nu = std::stoi(spec.substr(0, x), &used);
    if (used != x) return std::nullopt;
    const std::string tail = spec.substr(x + 1);
    nv = std::stoi(tail, &used);
    if (used != tail.size()) return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (nu < 2 || nu % 2 != 0 || nv < 1) return std::nullopt;
  audit::AuditGrid g;
  g.nu_per_range = nu / 2;
  g.nv = nv;
  g.u_exclude = u_exclude;
  return g;
}

inline double default_tolerance() {
  if (const char* env = std::getenv("ROTSURF_TOL")) {
    try {
      const double t = std::stod(env);
      if (t > 0.0) return t;
    } catch (const std::exception&) {
    }
  }
  return audit::kDefaultTolerance;
}

inline int cmd_audit(const AuditArgs& a, std::ostream& out, std::ostream& err) {
  const auto grid = parse_audit_grid(a.grid, a.u_exclude);
  if (!grid) {
    err << "audit: --grid expects NUxNV with even NU >= 2, got '" << a.grid << "'\n";
    return kUsage;
  }
  const double tol = a.tol.value_or(default_tolerance());
  if (!(tol > 0.0)) {
    err << "audit: --tol must be positive\n";
    return kUsage;
  }
  const audit::AuditReport report = audit::audit_all(*grid, tol);

  for (const auto& [path, text] : {std::pair{a.out, audit::to_json_string(report)},
                                   std::pair{a.markdown, audit::to_markdown(report)}}) {
    if (path.empty()) continue;
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "audit: cannot open " << path << '\n';
      return kUsage;
    }
    file << text;
  }
  for (const auto& v : report.verdicts) {
    out << v.formula_id << ' ' << to_string(v.verdict) << " max_rel_err=" << format_double(v.max_rel_err) << '\n';
  }
  for (const auto& c : report.consistency_checks) {
    out << c.formula_id << ' ' << to_string(c.verdict) << " max_rel_err=" << format_double(c.max_rel_err) << '\n';
  }
  if (a.strict && report.any_mismatch()) {
    err << "audit: strict mode and at least one MISMATCH\n";
    return kStrictFailure;
  }
  return kOk;
}

inline void print_locus(const audit::MinimalLocus& m, std::ostream& out) {
  out << "v = " << format_double(m.v) << '\n';
  if (m.corrected_roots.empty()) {
    out << "  corrected roots: none (discriminant " << format_double(m.discriminant) << ")\n";
  } else {
    for (std::size_t i = 0; i < m.corrected_roots.size(); ++i) {
      out << "  corrected root: u = " << format_double(m.corrected_roots[i])
          << "  H-numerator residual = " << format_double(m.corrected_residuals[i]) << '\n';
    }
  }
  if (m.printed_roots) {
    out << "  printed u3 = " << format_double(m.printed_roots->first)
        << "  residual = " << format_double(m.printed_residuals.first) << '\n';
    out << "  printed u4 = " << format_double(m.printed_roots->second)
        << "  residual = " << format_double(m.printed_residuals.second) << '\n';
  } else {
    out << "  printed u3,4: domain failure (" << m.printed_failure << ")\n";
  }
  out << "  printed complex roots -i/2, +i/2: |residual| = " << format_double(m.complex_root_residuals.first) << ", "
      << format_double(m.complex_root_residuals.second) << '\n';
}

inline int cmd_minimal_locus(const MinimalLocusArgs& a, std::ostream& out, std::ostream& err) {
  if (a.v.has_value() == a.sweep.has_value()) {
    err << "minimal-locus: give exactly one of --v or --sweep\n";
    return kUsage;
  }
  if (a.v) {
    print_locus(audit::minimal_locus(*a.v), out);
    return kOk;
  }
  if (*a.sweep < 1) {
    err << "minimal-locus: --sweep must be positive\n";
    return kUsage;
  }
  for (int k = 0; k < *a.sweep; ++k) print_locus(audit::minimal_locus(2.0 * std::numbers::pi * k / *a.sweep), out);
  return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Geometry engine and formula audit for the (T,L)-type rotational surface in L^3", "rotsurf"};
  app.require_subcommand(1);

  MeshArgs mesh;
  auto* mesh_cmd = app.add_subcommand("mesh", "export a triangle mesh (OBJ) or sample table (CSV)");
  mesh_cmd->add_option("--u-min", mesh.grid.u_min)->required();
  mesh_cmd->add_option("--u-max", mesh.grid.u_max)->required();
  mesh_cmd->add_option("--nu", mesh.grid.nu)->required();
  mesh_cmd->add_option("--v-min", mesh.grid.v_min)->required();
  mesh_cmd->add_option("--v-max", mesh.grid.v_max)->required();
  mesh_cmd->add_option("--nv", mesh.grid.nv)->required();
  mesh_cmd->add_option("--u-exclude", mesh.grid.u_exclude, "half-width of the band dropped around u = 0");
  mesh_cmd->add_option("--format", mesh.format)->check(CLI::IsMember({"obj", "csv"}));
  mesh_cmd->add_option("--out", mesh.out)->required();
  mesh_cmd->add_flag("--attrs", mesh.attrs, "add E..K (CSV) or H, K, detII comments (OBJ)");

  InvariantsArgs inv;
  auto* inv_cmd = app.add_subcommand("invariants", "pointwise geometry and Laplace-Beltrami values");
  inv_cmd->add_option("--u", inv.u)->required();
  inv_cmd->add_option("--v", inv.v)->required();
  inv_cmd->add_flag("--json", inv.json);
  inv_cmd->add_option("--u-exclude", inv.u_exclude);
  inv_cmd->add_option("--lorentz-sign", inv.lorentz_sign)->check(CLI::IsMember({-1, 1}));

  AuditArgs aud;
  auto* aud_cmd = app.add_subcommand("audit", "grade the printed formulas against the pipeline");
  aud_cmd->add_option("--grid", aud.grid, "NUxNV, NU split evenly between u < 0 and u > 0");
  aud_cmd->add_option("--u-exclude", aud.u_exclude);
  aud_cmd->add_option("--tol", aud.tol, "relative tolerance (default 1e-6 or $ROTSURF_TOL)");
  aud_cmd->add_option("--out", aud.out);
  aud_cmd->add_option("--markdown", aud.markdown);
  aud_cmd->add_flag("--strict", aud.strict, "exit 3 if any verdict is MISMATCH");

  MinimalLocusArgs loc;
  auto* loc_cmd = app.add_subcommand("minimal-locus", "real zeros of the printed mean curvature");
  auto* v_opt = loc_cmd->add_option("--v", loc.v);
  auto* sweep_opt = loc_cmd->add_option("--sweep", loc.sweep);
  v_opt->excludes(sweep_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  if (mesh_cmd->parsed()) return cmd_mesh(mesh, out, err);
  if (inv_cmd->parsed()) return cmd_invariants(inv, out, err);
  if (aud_cmd->parsed()) return cmd_audit(aud, out, err);
  return cmd_minimal_locus(loc, out, err);
}

}  // namespace rotsurf::cli
