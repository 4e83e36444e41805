#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fembem {

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double threshold = 0.0;
  std::string detail;
};

/// Structural and operator invariants on coarse meshes: mesh closure,
/// symmetry of a_h and of the reduced exterior form, V/W definiteness,
/// W annihilating constants, K' = K^T, block sparsity, Schur symmetry and
/// the monolithic residual of a solved system. `seed` drives the random
/// probe vectors.
std::vector<CheckResult> run_invariant_checks(unsigned seed = 0);

/// One "PASS"/"FAIL" line per check; returns true when all passed.
bool print_checks(const std::vector<CheckResult>& checks, std::ostream& out);

}  // namespace fembem
