#include "fembem/solvers/relaxed_jacobi.hpp"

#include <chrono>
#include <cmath>

#include "fembem/bem/surface_mass.hpp"
#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

bool diverging(const std::vector<double>& inc, double factor, int window) {
  const auto n = static_cast<int>(inc.size());
  if (n <= window) return false;
  for (int k = n - window; k < n; ++k) {
    if (!(inc[k] > inc[k - 1])) return false;
  }
  return inc[n - 1] >= factor * inc[n - 1 - window];
}

}  // namespace

JacobiResult relaxed_jacobi(const CoupledSystem& system, double sigma, const JacobiConfig& config,
                            const Vector* initial) {
  if (!(sigma > 0.0)) throw InvalidArgument("relaxation parameter sigma must be positive");
  config.iteration.validate();
  if (config.divergence_window < 1 || !(config.divergence_factor > 1.0)) {
    throw ConfigError("divergence detection needs window >= 1 and factor > 1");
  }
  const auto start = std::chrono::steady_clock::now();
  const Eigen::Index nm = system.layout().nm;
  Vector ut = initial ? *initial : Vector::Zero(nm);
  if (ut.size() != nm) throw StructuralError("initial trace vector has the wrong length");

  const SparseMatrix p_mm = system.interior().nitsche.penalty_mm;
  const SparseMatrix two_p = system.interior().nitsche.penalty_mm + system.exterior().penalty_mm;
  Eigen::SimplicialLDLT<SparseMatrix> step2(SparseMatrix(two_p + sigma * p_mm));
  if (step2.info() != Eigen::Success) throw SolverError("relaxed Jacobi trace system factorization failed", {});
  const SparseMatrix mass = surface_mass(system.trace_space(), system.trace_space());

  SchurComplement sub(system, true, config.interior, config.exterior);
  JacobiResult result;
  IterationTrace& trace = result.trace;
  TraceEvaluation e;
  for (int n = 0;; ++n) {
    e = sub.evaluate(ut, config.include_load);
    result.bundle.interior_solves.push_back(e.interior);
    result.bundle.exterior_solves.push_back(e.exterior);
    trace.residuals.push_back(e.residual.norm());
    // e.residual contains two_p * ut; remove it to get the coupling terms only.
    const Vector coupling = e.residual - two_p * ut;
    const Vector next = step2.solve(sigma * (p_mm * ut) - coupling);
    const Vector d = next - ut;
    const double inc = std::sqrt(std::max(0.0, d.dot(mass * d)));
    trace.increments.push_back(inc);
    if (!std::isfinite(inc)) {
      trace.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      throw DivergenceError(sigma, trace.increments);
    }
    if (inc <= config.iteration.tolerance) {
      trace.converged = true;
      trace.iterations = n;
      break;
    }
    if (n >= config.iteration.max_iterations) {
      trace.iterations = n;
      break;
    }
    if (diverging(trace.increments, config.divergence_factor, config.divergence_window)) {
      trace.iterations = n;
      trace.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      throw DivergenceError(sigma, trace.increments);
    }
    ut = next;
  }
  trace.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.bundle.method = "relaxed-jacobi";
  result.bundle.u_tilde = ut;
  result.bundle.u_minus = std::move(e.u_minus);
  result.bundle.u_plus = std::move(e.u_plus);
  result.bundle.lambda = std::move(e.lambda);
  result.bundle.outer = trace;
  return result;
}

}  // namespace fembem
