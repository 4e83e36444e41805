#pragma once

#include <functional>
#include <string>

#include "fembem/coupling/norms.hpp"
#include "fembem/mesh/tet_mesh.hpp"

namespace fembem {

/// Model problem with its domain generator and, when known, the exact
/// solution. `base_subdivisions` is the generator argument of level 1; each
/// further level doubles it.
struct ManufacturedCase {
  std::string name;
  ScalarField forcing;
  ExactSolution exact;
  bool has_exact = false;
  std::function<TetMesh(int)> generator;
  int base_subdivisions = 4;
  /// Default Lambda degree for this domain.
  int lambda_degree = 1;

  int subdivisions(int level) const;
  /// Throws ConfigError when the case has no exact solution.
  const ExactSolution& require_exact() const;
};

/// Unit ball, eps = 1, s = |x|^2:
///   u- = (sin(pi s) + cos(pi s)) / (2 pi) + (2 pi + 1) / (2 pi),  u+ = 1/|x|
/// and f = -Laplace u- + u-.
ManufacturedCase sphere_case();

/// Unit cube with f = 1; no exact solution.
ManufacturedCase cube_case();

/// "sphere" or "cube".
ManufacturedCase case_by_name(const std::string& name);

}  // namespace fembem
