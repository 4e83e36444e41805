#pragma once

#include <memory>
#include <string>

#include "fembem/bem/exterior.hpp"
#include "fembem/coupling/coupled_system.hpp"
#include "fembem/fem/interior_solve.hpp"
#include "fembem/solvers/solver_config.hpp"

namespace fembem {

enum class CoupledMethod { SchurCg, SchurGmres, MonolithicDirect };

/// Accepts "schur-cg", "schur-gmres", "direct" and "monolithic-direct".
CoupledMethod parse_method(const std::string& name);
std::string method_name(CoupledMethod method);

struct CoupledSolverConfig {
  /// Outer Krylov run on u~; preconditioner "none" or "mass" (block
  /// diagonal inverse of the u~ penalty mass).
  SolverConfig outer{"cg", 1e-8, 500, "mass", 100};
  SolverConfig interior{"cg", 1e-10, 5000, "jacobi", 100};
  SolverConfig exterior{"cg", 1e-10, 5000, "mass", 200};
};

/// Subdomain solves for a given u~ and the resulting u~-row residual.
struct TraceEvaluation {
  Vector u_minus;
  Vector u_plus;
  Vector lambda;
  Vector residual;
  IterationTrace interior;
  IterationTrace exterior;
};

/// Schur complement S on the trace variable: r(u~) = S u~ + r(0), where
/// r is the u~ row of A_h after solving the interior and exterior problems
/// with u~ fixed. With the reduced exterior path S is symmetric.
class SchurComplement {
 public:
  SchurComplement(const CoupledSystem& system, bool reduced_exterior, const SolverConfig& interior,
                  const SolverConfig& exterior);

  const CoupledSystem& system() const noexcept { return *system_; }

  /// Both subdomain solves and the trace-row residual. `include_load`
  /// selects r(u~) (true) or the homogeneous part S u~ (false).
  TraceEvaluation evaluate(const Vector& u_tilde, bool include_load) const;
  Vector residual(const Vector& u_tilde) const { return evaluate(u_tilde, true).residual; }
  Vector apply(const Vector& u_tilde) const { return evaluate(u_tilde, false).residual; }

  const InteriorDirichletSolver& interior_solver() const noexcept { return interior_; }
  const ExteriorDirichletSolver& exterior_solver() const noexcept { return exterior_; }

  /// Cumulative inner iteration counts over all evaluations.
  int interior_iterations() const noexcept { return interior_iterations_; }
  int exterior_iterations() const noexcept { return exterior_iterations_; }
  void reset_counters() const noexcept { interior_iterations_ = exterior_iterations_ = 0; }

 private:
  const CoupledSystem* system_;
  InteriorDirichletSolver interior_;
  ExteriorDirichletSolver exterior_;
  mutable int interior_iterations_ = 0;
  mutable int exterior_iterations_ = 0;
};

/// r(u~) with default inner solvers (reduced exterior path).
Vector schur_residual(const CoupledSystem& system, const Vector& u_tilde, const CoupledSolverConfig& config = {});

/// Inverse of the block-diagonal u~ penalty mass, used as outer preconditioner.
LinearOperator trace_mass_preconditioner(const CoupledSystem& system);

SolutionBundle solve_coupled(const CoupledSystem& system, CoupledMethod method,
                             const CoupledSolverConfig& config = {});

}  // namespace fembem
