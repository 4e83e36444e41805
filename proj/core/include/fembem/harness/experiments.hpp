#pragma once

#include <memory>
#include <vector>

#include "fembem/bem/boundary_operators.hpp"
#include "fembem/bem/exterior.hpp"
#include "fembem/coupling/coupled_system.hpp"
#include "fembem/coupling/norms.hpp"
#include "fembem/harness/cases.hpp"
#include "fembem/harness/experiment_config.hpp"
#include "fembem/harness/result_table.hpp"

namespace fembem {

/// Mesh, spaces and boundary operators of one refinement level. Everything
/// here is independent of tau, so sweeps reuse it.
struct LevelSetup {
  int level = 0;
  int subdivisions = 0;
  double h = 0.0;
  std::shared_ptr<const TetMesh> mesh;
  std::shared_ptr<const VolumeSpace> volume;
  std::shared_ptr<const TraceSpace> w_space;
  std::shared_ptr<const TraceSpace> lambda_space;
  std::shared_ptr<const TraceSpace> trace_space;
  BoundaryOperators operators;
  double assembly_time = 0.0;
};

LevelSetup build_level(const ManufacturedCase& c, const ExperimentConfig& config, int level);
CoupledSystem build_system(const LevelSetup& setup, const ManufacturedCase& c, const ExperimentConfig& config,
                           double tau);

/// Solve with the configured method and fill a table row (errors, counts, time).
ResultRow solve_row(const LevelSetup& setup, const CoupledSystem& system, const ManufacturedCase& c,
                    const ExperimentConfig& config, SolutionBundle* bundle_out = nullptr);

ResultTable run_convergence(const ExperimentConfig& config);

/// One row per (level, tau); solver failures become rows with status "failed".
ResultTable run_tau_sweep(const ExperimentConfig& config);

/// Inner-solver iteration counts with the configured preconditioners
/// (status "preconditioned") and without (status "unpreconditioned").
ResultTable run_preconditioning_study(const ExperimentConfig& config);

struct JacobiStudy {
  ResultTable table{true};
  std::vector<IterationTrace> traces;
  /// Smallest sigma in [sigma_min, sigma_max] found to converge by bisection
  /// (NaN when sigma_max itself fails).
  double sigma_star = 0.0;
  bool threshold_found = false;
  /// sigma_star equals sigma_min: every tested sigma converged.
  bool converges_everywhere = false;
  std::vector<std::pair<double, bool>> bisection;
};

/// Runs relaxed Jacobi for each sigma in the list on the first configured
/// level, compares converged runs with schur-cg, and bisects for sigma*.
/// Rows carry status "converged", "diverged" or "max-iterations"; err_mismatch
/// holds the relative difference to the schur-cg solution.
JacobiStudy run_jacobi_study(const ExperimentConfig& config);

/// Converged flag of one Jacobi run (divergence and the iteration cap count as failure).
bool jacobi_converges(const CoupledSystem& system, double sigma, const JacobiConfig& config,
                      IterationTrace* trace = nullptr);

/// Relative difference max over blocks of ||a_b - b_b|| / ||b_b||.
double bundle_difference(const SolutionBundle& a, const SolutionBundle& b);

}  // namespace fembem
