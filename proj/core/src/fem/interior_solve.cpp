#include "fembem/fem/interior_solve.hpp"

#include "fembem/common/errors.hpp"

namespace fembem {

InteriorDirichletSolver::InteriorDirichletSolver(const InteriorBlocks& blocks, SolverConfig config)
    : a_uu_(blocks.a_uu()), a_um_(blocks.a_um()), load_(blocks.load), config_(std::move(config)) {
  config_.validate();
  if (load_.size() != a_uu_.rows()) throw StructuralError("load vector does not match the volume space");
  if (config_.preconditioner == "jacobi") {
    precond_ = jacobi_preconditioner(a_uu_);
  } else if (config_.preconditioner != "none") {
    throw ConfigError("interior preconditioner must be none or jacobi, got " + config_.preconditioner);
  }
}

KrylovResult InteriorDirichletSolver::solve(const Vector& trace_data, bool include_load) const {
  if (trace_data.size() != a_um_.cols()) throw StructuralError("trace data does not match the trace space");
  Vector rhs = -(a_um_ * trace_data);
  if (include_load) rhs += load_;
  return cg(as_operator(a_uu_), rhs, config_, precond_);
}

KrylovResult solve_interior_dirichlet(const InteriorBlocks& blocks, const Vector& trace_data,
                                      const SolverConfig& config) {
  return InteriorDirichletSolver(blocks, config).solve(trace_data);
}

}  // namespace fembem
