#pragma once

#include "fembem/coupling/coupled_system.hpp"
#include "fembem/coupling/schur.hpp"
#include "fembem/solvers/solver_config.hpp"

namespace fembem {

struct JacobiConfig {
  /// Stopping test on ||u~^{n+1} - u~^n||_{L2(Gamma)} and the iteration cap.
  SolverConfig iteration{"jacobi", 1e-10, 5000, "none", 1};
  SolverConfig interior{"cg", 1e-12, 5000, "jacobi", 100};
  SolverConfig exterior{"cg", 1e-12, 5000, "mass", 200};
  /// Divergence: the increment grows monotonically by at least this factor
  /// over `divergence_window` consecutive steps.
  double divergence_factor = 10.0;
  int divergence_window = 5;
  /// false drops the volume source (homogeneous problem).
  bool include_load = true;
};

struct JacobiResult {
  SolutionBundle bundle;
  IterationTrace trace;
};

/// Two-step relaxed Jacobi iteration. Step 1 solves the interior and
/// exterior problems with u~^n fixed; step 2 solves
///   (P_int + P_ext + sigma P_int) u~^{n+1} = sigma P_int u~^n - (trace row without the P u~ terms)
/// where P_int, P_ext are the tau/h weighted trace masses of the two sides
/// (equal for a shared tau, giving (2 + sigma) P_mm); factorized once.
/// Returns an unconverged result at the iteration cap and throws
/// DivergenceError when divergence is detected.
JacobiResult relaxed_jacobi(const CoupledSystem& system, double sigma, const JacobiConfig& config = {},
                            const Vector* initial = nullptr);

}  // namespace fembem
