#include "fembem/coupling/schur.hpp"

#include <chrono>
#include <memory>

#include "fembem/common/errors.hpp"
#include "fembem/solvers/dense.hpp"
#include "fembem/solvers/krylov.hpp"

namespace fembem {

CoupledMethod parse_method(const std::string& name) {
  if (name == "schur-cg") return CoupledMethod::SchurCg;
  if (name == "schur-gmres") return CoupledMethod::SchurGmres;
  if (name == "direct" || name == "monolithic-direct") return CoupledMethod::MonolithicDirect;
  throw ConfigError("unknown method '" + name + "' (expected schur-cg, schur-gmres or direct)");
}

std::string method_name(CoupledMethod method) {
  switch (method) {
    case CoupledMethod::SchurCg:
      return "schur-cg";
    case CoupledMethod::SchurGmres:
      return "schur-gmres";
    case CoupledMethod::MonolithicDirect:
      return "direct";
  }
  return "unknown";
}

SchurComplement::SchurComplement(const CoupledSystem& system, bool reduced_exterior, const SolverConfig& interior,
                                 const SolverConfig& exterior)
    : system_(&system),
      interior_(system.interior(), interior),
      exterior_(system.exterior(), reduced_exterior, exterior) {}

TraceEvaluation SchurComplement::evaluate(const Vector& ut, bool include_load) const {
  TraceEvaluation e;
  KrylovResult in = interior_.solve(ut, include_load);
  ExteriorSolution ex = exterior_.solve(ut);
  e.u_minus = std::move(in.solution);
  e.u_plus = std::move(ex.u_plus);
  e.lambda = std::move(ex.lambda);
  e.interior = std::move(in.trace);
  e.exterior = std::move(ex.trace);
  interior_iterations_ += e.interior.iterations;
  exterior_iterations_ += e.exterior.iterations;
  e.residual = system_->trace_row(e.u_minus, e.u_plus, e.lambda, ut);
  return e;
}

Vector schur_residual(const CoupledSystem& system, const Vector& ut, const CoupledSolverConfig& config) {
  return SchurComplement(system, true, config.interior, config.exterior).residual(ut);
}

LinearOperator trace_mass_preconditioner(const CoupledSystem& system) {
  const SparseMatrix p = system.interior().nitsche.penalty_mm + system.exterior().penalty_mm;
  auto ldlt = std::make_shared<Eigen::SimplicialLDLT<SparseMatrix>>(p);
  if (ldlt->info() != Eigen::Success) throw SolverError("trace penalty mass factorization failed", {});
  return [ldlt](const Vector& x, Vector& y) { y = ldlt->solve(x); };
}

namespace {

SolutionBundle solve_direct(const CoupledSystem& system) {
  const auto start = std::chrono::steady_clock::now();
  const Vector x = dense_solve(system.dense_matrix(), system.rhs());
  const BlockLayout& L = system.layout();
  SolutionBundle b;
  b.method = method_name(CoupledMethod::MonolithicDirect);
  b.u_minus = x.segment(L.u_minus(), L.nv);
  b.u_plus = x.segment(L.u_plus(), L.nw);
  b.lambda = x.segment(L.lambda(), L.nl);
  b.u_tilde = x.segment(L.u_tilde(), L.nm);
  const Vector r = system.apply(x) - system.rhs();
  const double bn = system.rhs().norm();
  b.outer.residuals.push_back(bn > 0.0 ? r.norm() / bn : r.norm());
  b.outer.converged = true;
  b.outer.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return b;
}

}  // namespace

SolutionBundle solve_coupled(const CoupledSystem& system, CoupledMethod method, const CoupledSolverConfig& config) {
  if (method == CoupledMethod::MonolithicDirect) return solve_direct(system);
  config.outer.validate();
  const bool reduced = method == CoupledMethod::SchurCg;
  SchurComplement schur(system, reduced, config.interior, config.exterior);

  SolutionBundle bundle;
  bundle.method = method_name(method);
  const Eigen::Index nm = system.layout().nm;
  const TraceEvaluation at_zero = schur.evaluate(Vector::Zero(nm), true);
  bundle.interior_solves.push_back(at_zero.interior);
  bundle.exterior_solves.push_back(at_zero.exterior);
  const Vector rhs = -at_zero.residual;

  LinearOperator op = [&](const Vector& x, Vector& y) {
    TraceEvaluation e = schur.evaluate(x, false);
    bundle.interior_solves.push_back(std::move(e.interior));
    bundle.exterior_solves.push_back(std::move(e.exterior));
    y = std::move(e.residual);
  };
  LinearOperator precond;
  if (config.outer.preconditioner == "mass") {
    precond = trace_mass_preconditioner(system);
  } else if (config.outer.preconditioner != "none") {
    throw ConfigError("outer preconditioner must be none or mass, got " + config.outer.preconditioner);
  }
  KrylovResult outer = reduced ? cg(op, rhs, config.outer, precond) : gmres(op, rhs, config.outer, precond);
  bundle.u_tilde = std::move(outer.solution);
  bundle.outer = std::move(outer.trace);

  TraceEvaluation final = schur.evaluate(bundle.u_tilde, true);
  bundle.u_minus = std::move(final.u_minus);
  bundle.u_plus = std::move(final.u_plus);
  bundle.lambda = std::move(final.lambda);
  bundle.interior_solves.push_back(std::move(final.interior));
  bundle.exterior_solves.push_back(std::move(final.exterior));
  return bundle;
}

}  // namespace fembem
