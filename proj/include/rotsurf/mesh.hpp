#pragma once

// Triangle meshes of a chart over a rectangular (u, v) grid, written as OBJ
// or CSV.  L^3 coordinates are emitted as plain Euclidean triples.

#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotsurf/curvature.hpp"
#include "rotsurf/minkowski.hpp"
#include "rotsurf/surfaces.hpp"

namespace rotsurf {

/// Closed grid [u_min, u_max] x [v_min, v_max]; samples with |u| < u_exclude are dropped.
struct GridSpec {
  double u_min = 0.2, u_max = 3.0;
  int nu = 80;
  double v_min = 0.0, v_max = 6.283185307179586;
  int nv = 120;
  double u_exclude = kDefaultUExclude;

  void validate() const {
    if (nu < 2 || nv < 2) throw std::invalid_argument("nu and nv must be at least 2");
    if (!(u_min < u_max)) throw std::invalid_argument("u-min must be below u-max");
    if (!(v_min < v_max)) throw std::invalid_argument("v-min must be below v-max");
    if (!(u_exclude >= 0.0)) throw std::invalid_argument("u-exclude must be nonnegative");
  }

  double u_at(int i) const { return u_min + (u_max - u_min) * i / (nu - 1); }
  double v_at(int j) const { return v_min + (v_max - v_min) * j / (nv - 1); }
};

/// Per-vertex geometry channels; NaN where the pipeline fails.
struct VertexAttributes {
  double E, F, G, detI, L, M, N, detII, H, K;
};

struct MeshVertex {
  double u, v;
  LVec3 position;
  std::optional<VertexAttributes> attrs;
};

struct Mesh {
  std::vector<MeshVertex> vertices;
  /// 0-based vertex indices, wound (i,j) -> (i+1,j) -> (i+1,j+1) and (i,j) -> (i+1,j+1) -> (i,j+1).
  std::vector<std::array<std::size_t, 3>> faces;
};

inline VertexAttributes vertex_attributes(const ParametricSurface& surface, double u, double v) {
  try {
    const PointGeometry g = point_geometry(surface, u, v);
    return {g.E, g.F, g.G, g.detI, g.L, g.M, g.N, g.detII, g.H, g.K};
  } catch (const GeometryError&) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, nan, nan, nan, nan, nan, nan, nan, nan};
  }
}

inline Mesh build_mesh(const ParametricSurface& surface, const GridSpec& grid, bool with_attrs = false) {
  grid.validate();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(static_cast<std::size_t>(grid.nu) * grid.nv, kNone);
  auto slot = [&](int i, int j) -> std::size_t& { return index[static_cast<std::size_t>(i) * grid.nv + j]; };

  Mesh mesh;
  for (int i = 0; i < grid.nu; ++i) {
    const double u = grid.u_at(i);
    if (std::abs(u) < grid.u_exclude) continue;
    for (int j = 0; j < grid.nv; ++j) {
      const double v = grid.v_at(j);
      MeshVertex vert{u, v, surface.point(u, v), std::nullopt};
      if (with_attrs) vert.attrs = vertex_attributes(surface, u, v);
      slot(i, j) = mesh.vertices.size();
      mesh.vertices.push_back(vert);
    }
  }
  for (int i = 0; i + 1 < grid.nu; ++i) {
    for (int j = 0; j + 1 < grid.nv; ++j) {
      const std::size_t a = slot(i, j), b = slot(i + 1, j), c = slot(i + 1, j + 1), d = slot(i, j + 1);
      if (a == kNone || b == kNone || c == kNone || d == kNone) continue;
      mesh.faces.push_back({a, b, c});
      mesh.faces.push_back({a, c, d});
    }
  }
  return mesh;
}

/// Shortest-safe 17 significant digits, independent of the C locale.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline void write_obj(std::ostream& os, const Mesh& mesh, bool with_attrs = false) {
  os << "# rotational surface mesh: " << mesh.vertices.size() << " vertices, " << mesh.faces.size() << " triangles\n";
  for (const auto& v : mesh.vertices) {
    os << "v " << format_double(v.position.x1) << ' ' << format_double(v.position.x2) << ' '
       << format_double(v.position.x3) << '\n';
  }
  if (with_attrs) {
    os << "# per-vertex attributes: index H K detII\n";
    for (std::size_t k = 0; k < mesh.vertices.size(); ++k) {
      const auto& a = mesh.vertices[k].attrs;
      if (!a) continue;
      os << "#attr " << (k + 1) << ' ' << format_double(a->H) << ' ' << format_double(a->K) << ' '
         << format_double(a->detII) << '\n';
    }
  }
  for (const auto& f : mesh.faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
}

inline void write_csv(std::ostream& os, const Mesh& mesh, bool with_attrs = false) {
  os << "u,v,x,y,z";
  if (with_attrs) os << ",E,F,G,detI,L,M,N,detII,H,K";
  os << '\n';
  for (const auto& v : mesh.vertices) {
    os << format_double(v.u) << ',' << format_double(v.v) << ',' << format_double(v.position.x1) << ','
       << format_double(v.position.x2) << ',' << format_double(v.position.x3);
    if (with_attrs && v.attrs) {
      const auto& a = *v.attrs;
      for (double x : {a.E, a.F, a.G, a.detI, a.L, a.M, a.N, a.detII, a.H, a.K}) os << ',' << format_double(x);
    }
    os << '\n';
  }
}

}  // namespace rotsurf
