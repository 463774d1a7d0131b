#pragma once

#include "g29/singlocus/surface.hpp"

#include <array>
#include <ostream>
#include <string>
#include <vector>

namespace g29::cli {

struct MeshOptions {
  int chart = 3;            // variable set to 1; the other three are the axes
  int resolution = 64;      // cells per axis
  double half_width = 2.0;  // box [-w, w]^3
  long precision = 53;      // bits for evaluating F; above 53 MPFR is used
};

struct Mesh {
  std::array<std::string, 3> axes;
  std::vector<std::array<double, 3>> vertices;
  std::vector<std::array<int, 3>> faces;  // 0-based
  std::vector<std::string> warnings;
};

/// Real coefficients of F under the real embedding sending the field
/// generator to its largest real root. Throws std::invalid_argument when the
/// field has no real embedding or a coefficient is not real there.
std::vector<std::pair<std::array<int, 4>, double>> real_coefficients(const Poly& F, long precision = 128);

/// Marching tetrahedra on the real zero set of F with chart variable = 1.
/// Throws std::invalid_argument for resolution < 1, a bad chart or box, or
/// non-real coefficients. An empty result carries a warning.
Mesh mesh_surface(const SurfaceSpec& s, const MeshOptions& o);

/// Wavefront OBJ, ASCII, 1-based faces.
void write_obj(std::ostream& out, const Mesh& m, const std::string& comment);

}  // namespace g29::cli
