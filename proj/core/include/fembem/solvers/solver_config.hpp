#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fembem {

struct SolverConfig {
  std::string method = "cg";
  /// Relative (preconditioned) residual at which the iteration stops.
  double tolerance = 1e-8;
  int max_iterations = 2000;
  /// "none", "jacobi" (interior) or "mass" (exterior, trace).
  std::string preconditioner = "none";
  /// GMRES restart length.
  int restart = 100;

  /// Throws ConfigError when tolerance <= 0 or max_iterations < 1.
  void validate() const;
};

struct IterationTrace {
  std::vector<double> residuals;
  /// ||u~^{n+1} - u~^n||_{L2} per relaxed Jacobi step; empty for Krylov runs.
  std::vector<double> increments;
  double wall_time = 0.0;
  int iterations = 0;
  bool converged = false;

  /// CSV with columns iteration,residual,increment,time.
  void write_csv(std::ostream& out) const;
};

}  // namespace fembem
