#pragma once

// Grades every transcribed closed form against the jet pipeline over a
// sampling grid.  Pipeline quantities are computed once per grid point and
// shared by all formulas.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotsurf/audit/transcribed.hpp"
#include "rotsurf/beltrami.hpp"
#include "rotsurf/curvature.hpp"
#include "rotsurf/error.hpp"
#include "rotsurf/surfaces.hpp"

namespace rotsurf::audit {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr int kDefaultMinSamples = 100;

struct Range {
  double lo, hi;
};

/// u is sampled at nu_per_range points (endpoints included) in each range;
/// v at nv points of the half-open [v_min, v_max).
struct AuditGrid {
  std::vector<Range> u_ranges{{-3.0, -0.2}, {0.2, 3.0}};
  int nu_per_range = 20;
  double v_min = 0.0;
  double v_max = 2.0 * std::numbers::pi;
  int nv = 24;
  double u_exclude = kDefaultUExclude;

  int nu_total() const { return nu_per_range * static_cast<int>(u_ranges.size()); }
  std::size_t size() const { return static_cast<std::size_t>(nu_total()) * static_cast<std::size_t>(nv); }

  void validate() const {
    if (u_ranges.empty() || nu_per_range < 1 || nv < 1 || !(v_min < v_max)) {
      throw std::invalid_argument("audit grid is empty");
    }
    for (const Range& r : u_ranges) {
      if (!(r.lo <= r.hi)) throw std::invalid_argument("audit grid u-range is reversed");
    }
  }
};

/// Grid points in u-major order.
inline std::vector<std::pair<double, double>> grid_points(const AuditGrid& g) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(g.size());
  for (const Range& r : g.u_ranges) {
    for (int i = 0; i < g.nu_per_range; ++i) {
      const double u = g.nu_per_range == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (g.nu_per_range - 1);
      for (int j = 0; j < g.nv; ++j) pts.emplace_back(u, g.v_min + (g.v_max - g.v_min) * j / g.nv);
    }
  }
  return pts;
}

/// Pipeline values at one grid point; a missing value carries the reason.
struct PipelineSample {
  double u = 0.0, v = 0.0;
  bool excluded = false;
  LVec3 point;
  std::optional<PointGeometry> geometry;
  ErrorCode geometry_error = ErrorCode::DegenerateMetric;
  std::optional<LVec3> lb3;
  ErrorCode lb3_error = ErrorCode::ParabolicPoint;

  const PointGeometry& geom() const {
    if (!geometry) throw GeometryError(geometry_error, "pipeline geometry unavailable");
    return *geometry;
  }
  const LVec3& delta3() const {
    if (!lb3) throw GeometryError(lb3_error, "pipeline operator unavailable");
    return *lb3;
  }
};

inline PipelineSample evaluate_pipeline(const ParametricSurface& surface, double u, double v) {
  PipelineSample s;
  s.u = u;
  s.v = v;
  s.point = surface.point(u, v);
  if (!surface.admissible(u, v)) {
    s.excluded = true;
    s.geometry_error = s.lb3_error = ErrorCode::DomainExcluded;
    return s;
  }
  try {
    s.geometry = point_geometry(surface, u, v);
  } catch (const GeometryError& e) {
    s.geometry_error = e.code();
  }
  try {
    s.lb3 = lb3_position(surface, u, v);
  } catch (const GeometryError& e) {
    s.lb3_error = e.code();
  }
  return s;
}

inline std::vector<PipelineSample> evaluate_pipeline(const ParametricSurface& surface, const AuditGrid& grid) {
  std::vector<PipelineSample> out;
  out.reserve(grid.size());
  for (const auto& [u, v] : grid_points(grid)) out.push_back(evaluate_pipeline(surface, u, v));
  return out;
}

enum class Sampling {
  Grid,    ///< one sample per (u, v) grid point
  VSweep,  ///< grid.size() values of v spread over [v_min, v_max); u unused
};

using Values = std::vector<double>;

struct TranscribedFormula {
  std::string id;
  std::string anchor;
  std::string counterpart;
  std::string notes;
  std::size_t arity = 1;
  Sampling sampling = Sampling::Grid;
  std::function<Values(double, double)> evaluate;
  std::function<Values(const PipelineSample&)> pipeline;
};

namespace detail {

inline Values vec(const LVec3& p) { return {p.x1, p.x2, p.x3}; }

inline double safe_div(double num, double den, const char* what) {
  if (!(std::abs(den) > transcribed::kSingularGuard)) {
    throw GeometryError(ErrorCode::SingularDenominator, std::string(what) + " vanishes");
  }
  return num / den;
}

}  // namespace detail

/// One entry per printed formula, ordered by id.
inline const std::vector<TranscribedFormula>& registry() {
  namespace tr = transcribed;
  using detail::vec;
  static const std::vector<TranscribedFormula> entries = [] {
    std::vector<TranscribedFormula> r;
    r.push_back({"COR4_H", "H=-(eta'/u^4)(u^3 sin(2v)+2u^2 cos(2v)+u^4)", "pipeline H (shape operator trace / 2)",
                 "", 1, Sampling::Grid, [](double u, double v) { return Values{tr::mean_curvature(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().H}; }});
    r.push_back({"COR4_K", "K=(eta'^2/u^6)[-(2u^3+4u)sin(2v)+2u^2 cos(2v)+u sin(4v)+(-2u^2+3/2)cos(4v)-2u^4-3u^2-3/2]",
                 "pipeline K = det II / det I", "", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::gaussian_curvature(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().K}; }});
    r.push_back({"EQ2_SURFACE", "R(u,v)=(u^2cos(v)-usin(v), u^2sin(v)+ucos(v), 1/2 u sqrt(4u^2+1)+1/4 sinh^-1(2u))",
                 "rotational construction T(v) gamma(u)", "", 3, Sampling::Grid,
                 [](double u, double v) { return vec(tr::surface(u, v)); },
                 [](const PipelineSample& s) { return vec(s.point); }});
    r.push_back({"EQ3_GAUSS", "e=(1/sqrt|det I|)(-u(sin(v)+ucos(v))eta', -u(cos(v)+usin(v))eta', -2u^3+u)",
                 "pipeline n = cross(R_u, R_v)/sqrt|det I|", "third component transcribed as printed (-2u^3+u)", 3,
                 Sampling::Grid, [](double u, double v) { return vec(tr::gauss_map(u, v)); },
                 [](const PipelineSample& s) { return vec(s.geom().n); }});
    r.push_back({"MIN_ROOTS", "u_{3,4}=-+sqrt(2cos(2v)+2^-2 sin(2v))-2^-1 sin(2v)",
                 "zero: H-numerator u^3 sin(2v)+2u^2 cos(2v)+u^4 at each printed root",
                 "graded by residual; complex roots -+i/2 not sampled", 2, Sampling::VSweep,
                 [](double /*u*/, double v) {
                   const auto [u3, u4] = tr::printed_real_roots(v);
                   return Values{tr::mean_curvature_numerator(u3, v), tr::mean_curvature_numerator(u4, v)};
                 },
                 [](const PipelineSample&) { return Values{0.0, 0.0}; }});
    r.push_back({"PHI", "Phi=eta'^2[u sin(4v)-(2u^3+4u)sin(2v)+...]*[(64u^7+192u^5+176u^3+144u)sin(2v)+...]",
                 "implied denominator -u^4 [printed R1 bracket] / (pipeline third-form operator on R1)",
                 "no independent meaning is printed; graded as the denominator the R1 numerator would need", 1,
                 Sampling::Grid, [](double u, double v) { return Values{tr::phi(u, v)}; },
                 [](const PipelineSample& s) {
                   return Values{detail::safe_div(-std::pow(s.u, 4) * tr::delta3_r1_bracket(s.u, s.v),
                                                  s.delta3().x1, "pipeline operator R1")};
                 }});
    r.push_back({"PROOF_DETII",
                 "det II=(eta'^2/u^2)[(-2u^3-4u)sin(2v)+2u^2cos(2v)+u sin(4v)+(-2u^2+3/2)cos(4v)-2u^4-3u^2-3/2]",
                 "pipeline det II = L N - M^2", "", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::det_ii(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().detII}; }});
    r.push_back({"PROOF_EFG", "E=0, F=-u^2, G=u^4+u^2", "pipeline (E, F, G)", "", 3, Sampling::Grid,
                 [](double u, double v) { return vec(tr::first_form(u, v)); },
                 [](const PipelineSample& s) {
                   const auto& g = s.geom();
                   return Values{g.E, g.F, g.G};
                 }});
    r.push_back({"PROOF_L", "L=(-2u sin(2v)-2u^2)eta'/sqrt|det I|", "pipeline L = <R_uu, n>", "", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::second_L(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().L}; }});
    r.push_back({"PROOF_M", "M=(u sin(2v)-2u^2cos(2v)+u^2)eta'/sqrt|det I|", "pipeline M = <R_uv, n>", "", 1,
                 Sampling::Grid, [](double u, double v) { return Values{tr::second_M(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().M}; }});
    r.push_back({"PROOF_N", "N=(u sin(2v)+u^2cos(2v)+u^4)eta'/sqrt|det I|", "pipeline N = <R_vv, n>", "", 1,
                 Sampling::Grid, [](double u, double v) { return Values{tr::second_N(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().N}; }});
    r.push_back({"PROOF_X", "X=2u eta'^2[4u^2sin(2v)+4u cos(2v)+2sin(4v)-u cos(4v)+2u^3+u]",
                 "pipeline X = E M^2 - 2F L M + G L^2", "", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::third_X(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().X}; }});
    r.push_back({"PROOF_Y", "Y=2^-1 eta'^2[-(12u^3+8u)sin(2v)+(8u^4-4u^2)cos(2v) (4u^3-2u)sin(4v)+...]",
                 "pipeline Y = E M N - F L N + G L M - F M^2",
                 "missing operator before (4u^3-2u)sin(4v) read as '+'", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::third_Y(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().Y}; }});
    r.push_back({"PROOF_Z", "Z=-2^-1 eta'^2[-(8u^3+8u)sin 2v+(16u^4+4u^2)cos 2v+...]",
                 "pipeline Z = G M^2 - 2F N M + E N^2", "", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::third_Z(u, v)}; },
                 [](const PipelineSample& s) { return Values{s.geom().Z}; }});
    r.push_back({"THETA", "Theta=eta'^2[3*2^-5 u(32u^10+136u^8+...)sin(2v)+...]",
                 "implied denominator -u^4 {printed R3 numerator} / (pipeline third-form operator on R3)",
                 "no independent meaning is printed; graded as the denominator the R3 numerator would need", 1,
                 Sampling::Grid, [](double u, double v) { return Values{tr::theta(u, v)}; },
                 [](const PipelineSample& s) {
                   return Values{detail::safe_div(-std::pow(s.u, 4) * tr::delta3_r3_braced(s.u, s.v),
                                                  s.delta3().x3, "pipeline operator R3")};
                 }});
    r.push_back({"THM_DELTA3_R1", "Delta^III R_1=-(u^4/Phi)[(224u^9+760u^7+...)sin(v)+...]",
                 "pipeline third-form operator on R1", "", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::delta3(u, v).x1}; },
                 [](const PipelineSample& s) { return Values{s.delta3().x1}; }});
    r.push_back({"THM_DELTA3_R2", "Delta^III R_2=-(2u^4/Phi)[(64u^10-272u^8-...)sin(v)+...]",
                 "pipeline third-form operator on R2",
                 "unclosed leading bracket read as closing after the cos(9v) term", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::delta3(u, v).x2}; },
                 [](const PipelineSample& s) { return Values{s.delta3().x2}; }});
    r.push_back({"THM_DELTA3_R3", "Delta^III R_3=-(u^4/Theta){[2^-4u(32u^6+83u^4+65u^2+36)sin(2v)...]eta'^2+[...]eta'}",
                 "pipeline third-form operator on R3", "", 1, Sampling::Grid,
                 [](double u, double v) { return Values{tr::delta3(u, v).x3}; },
                 [](const PipelineSample& s) { return Values{s.delta3().x3}; }});
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return r;
  }();
  return entries;
}

inline const TranscribedFormula& find_formula(const std::string& id) {
  for (const auto& f : registry()) {
    if (f.id == id) return f;
  }
  throw std::invalid_argument("unknown formula id: " + id);
}

/// Literal evaluation of a printed expression.
inline Values eval_transcribed(const std::string& id, double u, double v) { return find_formula(id).evaluate(u, v); }

enum class Verdict { Match, Mismatch, Inconclusive };

constexpr const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Match: return "MATCH";
    case Verdict::Mismatch: return "MISMATCH";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "UNKNOWN";
}

struct AuditVerdict {
  std::string formula_id;
  std::string anchor;
  std::string counterpart;
  std::string notes;
  std::size_t samples = 0;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> skip_reasons;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;
  double argmax_u = std::numeric_limits<double>::quiet_NaN();
  double argmax_v = std::numeric_limits<double>::quiet_NaN();
  /// 1-based component governing max_rel_err; 0 when nothing was evaluated.
  std::size_t argmax_component = 0;
  double transcribed_at_argmax = std::numeric_limits<double>::quiet_NaN();
  double pipeline_at_argmax = std::numeric_limits<double>::quiet_NaN();
  double tolerance = kDefaultTolerance;
  Verdict verdict = Verdict::Inconclusive;
};

inline AuditVerdict labelled(std::string id, std::string anchor, std::string counterpart, std::string notes) {
  AuditVerdict v;
  v.formula_id = std::move(id);
  v.anchor = std::move(anchor);
  v.counterpart = std::move(counterpart);
  v.notes = std::move(notes);
  return v;
}

/// Accumulates per-sample comparisons into a verdict.  Relative error uses
/// the denominator max(|reference|, 1); vectors are graded by their worst
/// component.
class VerdictBuilder {
 public:
  VerdictBuilder(AuditVerdict base, double tol, int min_samples) : v_(std::move(base)), min_samples_(min_samples) {
    v_.tolerance = tol;
  }

  void skip(const std::string& reason) {
    ++v_.samples;
    ++v_.skipped;
    ++v_.skip_reasons[reason];
  }

  void compare(double u, double v, const Values& subject, const Values& reference) {
    ++v_.samples;
    if (subject.size() != reference.size()) throw std::logic_error("arity mismatch in " + v_.formula_id);
    bool finite = true;
    for (std::size_t i = 0; i < subject.size(); ++i) {
      finite = finite && std::isfinite(subject[i]) && std::isfinite(reference[i]);
    }
    if (!finite) {
      ++v_.skipped;
      ++v_.skip_reasons["non-finite value"];
      return;
    }
    ++v_.evaluated;
    for (std::size_t i = 0; i < subject.size(); ++i) {
      const double abs_err = std::abs(subject[i] - reference[i]);
      const double rel_err = abs_err / std::max(std::abs(reference[i]), 1.0);
      v_.max_abs_err = std::max(v_.max_abs_err, abs_err);
      if (v_.argmax_component == 0 || rel_err > v_.max_rel_err) {
        v_.max_rel_err = rel_err;
        v_.argmax_u = u;
        v_.argmax_v = v;
        v_.argmax_component = i + 1;
        v_.transcribed_at_argmax = subject[i];
        v_.pipeline_at_argmax = reference[i];
      }
    }
  }

  AuditVerdict finish() {
    if (v_.evaluated < static_cast<std::size_t>(min_samples_)) {
      v_.verdict = Verdict::Inconclusive;
    } else {
      v_.verdict = v_.max_rel_err <= v_.tolerance ? Verdict::Match : Verdict::Mismatch;
    }
    return v_;
  }

 private:
  AuditVerdict v_;
  int min_samples_;
};

inline AuditVerdict audit(const TranscribedFormula& f, const AuditGrid& grid,
                          const std::vector<PipelineSample>& pipeline, double tol,
                          int min_samples = kDefaultMinSamples) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  VerdictBuilder b(labelled(f.id, f.anchor, f.counterpart, f.notes), tol, min_samples);
  if (f.sampling == Sampling::VSweep) {
    const std::size_t count = grid.size();
    for (std::size_t k = 0; k < count; ++k) {
      const double v = grid.v_min + (grid.v_max - grid.v_min) * static_cast<double>(k) / static_cast<double>(count);
      try {
        b.compare(0.0, v, f.evaluate(0.0, v), f.pipeline(PipelineSample{}));
      } catch (const GeometryError& e) {
        b.skip(std::string(to_string(e.code())));
      }
    }
    return b.finish();
  }
  for (const PipelineSample& s : pipeline) {
    if (s.excluded) {
      b.skip(std::string(to_string(ErrorCode::DomainExcluded)));
      continue;
    }
    try {
      b.compare(s.u, s.v, f.evaluate(s.u, s.v), f.pipeline(s));
    } catch (const GeometryError& e) {
      b.skip(std::string(to_string(e.code())));
    }
  }
  return b.finish();
}

inline AuditVerdict audit(const std::string& id, const AuditGrid& grid, double tol,
                          int min_samples = kDefaultMinSamples) {
  grid.validate();
  const auto pipeline = evaluate_pipeline(tl_surface(grid.u_exclude), grid);
  return audit(find_formula(id), grid, pipeline, tol, min_samples);
}

/// Printed formulas checked against each other, no pipeline involved.
struct ConsistencyCheck {
  std::string id;
  std::string description;
  std::function<Values(double, double)> subject;
  std::function<Values(double, double)> reference;
};

inline const std::vector<ConsistencyCheck>& consistency_checks() {
  namespace tr = transcribed;
  static const std::vector<ConsistencyCheck> checks = {
      {"CHECK_A_DETII", "PROOF_DETII against L*N - M^2 built from PROOF_L, PROOF_M, PROOF_N",
       [](double u, double v) {
         const double L = tr::second_L(u, v), M = tr::second_M(u, v), N = tr::second_N(u, v);
         return Values{L * N - M * M};
       },
       [](double u, double v) { return Values{tr::det_ii(u, v)}; }},
      {"CHECK_B_XYZ", "PROOF_X, PROOF_Y, PROOF_Z against the X, Y, Z combinations of PROOF_EFG and PROOF_L/M/N",
       [](double u, double v) {
         const LVec3 efg = tr::first_form(u, v);
         const auto c = xyz_combos(efg.x1, efg.x2, efg.x3, tr::second_L(u, v), tr::second_M(u, v), tr::second_N(u, v));
         return Values{c.X, c.Y, c.Z};
       },
       [](double u, double v) { return Values{tr::third_X(u, v), tr::third_Y(u, v), tr::third_Z(u, v)}; }},
      {"CHECK_C_K", "COR4_K against PROOF_DETII / u^4",
       [](double u, double v) { return Values{detail::safe_div(tr::det_ii(u, v), std::pow(u, 4), "u^4")}; },
       [](double u, double v) { return Values{tr::gaussian_curvature(u, v)}; }},
  };
  return checks;
}

inline AuditVerdict run_consistency_check(const ConsistencyCheck& c, const AuditGrid& grid, double tol,
                                          int min_samples = kDefaultMinSamples) {
  VerdictBuilder b(labelled(c.id, c.description, "", ""), tol, min_samples);
  for (const auto& [u, v] : grid_points(grid)) {
    if (std::abs(u) < grid.u_exclude) {
      b.skip(std::string(to_string(ErrorCode::DomainExcluded)));
      continue;
    }
    try {
      b.compare(u, v, c.subject(u, v), c.reference(u, v));
    } catch (const GeometryError& e) {
      b.skip(std::string(to_string(e.code())));
    }
  }
  return b.finish();
}

struct AuditReport {
  std::string engine_version = kEngineVersion;
  AuditGrid grid;
  double tolerance = kDefaultTolerance;
  int min_samples = kDefaultMinSamples;
  std::vector<AuditVerdict> verdicts;
  std::vector<AuditVerdict> consistency_checks;

  bool any_mismatch() const {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.verdict == Verdict::Mismatch; });
  }
};

inline AuditReport audit_all(const AuditGrid& grid, double tol, int min_samples = kDefaultMinSamples) {
  grid.validate();
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  AuditReport report;
  report.grid = grid;
  report.tolerance = tol;
  report.min_samples = min_samples;
  const auto pipeline = evaluate_pipeline(make_rotational(lightlike_profile(), grid.u_exclude), grid);
  for (const auto& f : registry()) report.verdicts.push_back(audit(f, grid, pipeline, tol, min_samples));
  for (const auto& c : consistency_checks()) {
    report.consistency_checks.push_back(run_consistency_check(c, grid, tol, min_samples));
  }
  return report;
}

/// Outcome of the minimal-point analysis at one v.
struct MinimalLocus {
  double v = 0.0;
  /// Printed real roots u3, u4 and the H-numerator at each; empty on a domain failure.
  std::optional<std::pair<double, double>> printed_roots;
  std::pair<double, double> printed_residuals{0.0, 0.0};
  std::string printed_failure;
  /// |numerator / u^2| at the printed complex roots -i/2 and +i/2.
  std::pair<double, double> complex_root_residuals{0.0, 0.0};
  /// Real roots of u^2 + u sin 2v + 2 cos 2v = 0 with u != 0.
  double discriminant = 0.0;
  std::vector<double> corrected_roots;
  std::vector<double> corrected_residuals;
};

inline MinimalLocus minimal_locus(double v) {
  MinimalLocus m;
  m.v = v;
  try {
    const auto roots = transcribed::printed_real_roots(v);
    m.printed_roots = roots;
    m.printed_residuals = {transcribed::mean_curvature_numerator(roots.first, v),
                           transcribed::mean_curvature_numerator(roots.second, v)};
  } catch (const GeometryError& e) {
    m.printed_failure = e.what();
  }
  const double s = std::sin(2.0 * v);
  const double c = std::cos(2.0 * v);
  auto quadratic = [&](std::complex<double> u) { return u * u + u * s + 2.0 * c; };
  m.complex_root_residuals = {std::abs(quadratic({0.0, -0.5})), std::abs(quadratic({0.0, 0.5}))};
  m.discriminant = s * s - 8.0 * c;
  if (m.discriminant >= 0.0) {
    const double r = std::sqrt(m.discriminant);
    std::vector<double> candidates{(-s - r) / 2.0};
    if (r > 0.0) candidates.push_back((-s + r) / 2.0);
    for (double u : candidates) {
      if (std::abs(u) > transcribed::kSingularGuard) {
        m.corrected_roots.push_back(u);
        m.corrected_residuals.push_back(transcribed::mean_curvature_numerator(u, v));
      }
    }
  }
  return m;
}

}  // namespace rotsurf::audit
