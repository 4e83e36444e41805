#include "fembem/harness/experiments.hpp"

#include <chrono>
#include <cmath>
#include <iostream>

#include "fembem/common/errors.hpp"
#include "fembem/coupling/schur.hpp"
#include "fembem/fem/interior_assembly.hpp"
#include "fembem/mesh/surface_mesh.hpp"
#include "fembem/solvers/relaxed_jacobi.hpp"

namespace fembem {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

double mean_iterations(const std::vector<IterationTrace>& traces) {
  if (traces.empty()) return 0.0;
  double s = 0.0;
  for (const auto& t : traces) s += t.iterations;
  return s / static_cast<double>(traces.size());
}

}  // namespace

LevelSetup build_level(const ManufacturedCase& c, const ExperimentConfig& config, int level) {
  const auto start = Clock::now();
  ManufacturedCase local = c;
  if (config.base_subdivisions) local.base_subdivisions = *config.base_subdivisions;
  LevelSetup s;
  s.level = level;
  s.subdivisions = local.subdivisions(level);
  s.mesh = std::make_shared<const TetMesh>(local.generator(s.subdivisions));
  s.h = mesh_size(*s.mesh);
  s.volume = std::make_shared<const VolumeSpace>(s.mesh, config.degrees.j);
  auto surface = s.volume->boundary_ptr();
  s.w_space = std::make_shared<const TraceSpace>(surface, 1, Continuity::Continuous);
  const int l = config.degrees.l.value_or(c.lambda_degree);
  s.lambda_space = l == 1 ? s.w_space : std::make_shared<const TraceSpace>(surface, 0, Continuity::Discontinuous);
  s.trace_space = std::make_shared<const TraceSpace>(surface, config.degrees.m, Continuity::Discontinuous);
  s.operators = assemble_boundary_operators(*s.w_space, *s.lambda_space, config.quadrature);
  s.assembly_time = since(start);
  return s;
}

CoupledSystem build_system(const LevelSetup& s, const ManufacturedCase& c, const ExperimentConfig& config,
                           double tau) {
  InteriorBlocks interior = assemble_interior_blocks(*s.volume, *s.trace_space, Coefficient(config.epsilon), tau,
                                                     c.forcing);
  ExteriorBlocks exterior = assemble_exterior(s.operators, s.w_space, s.lambda_space, s.trace_space, tau);
  return assemble_coupled(s.volume, std::move(interior), std::move(exterior));
}

ResultRow solve_row(const LevelSetup& s, const CoupledSystem& system, const ManufacturedCase& c,
                    const ExperimentConfig& config, SolutionBundle* bundle_out) {
  const auto start = Clock::now();
  SolutionBundle b = solve_coupled(system, parse_method(config.method), config.solvers);
  ResultRow r;
  r.level = s.level;
  r.h = s.h;
  r.dofs_interior = static_cast<long>(s.volume->num_dofs());
  r.dofs_boundary = static_cast<long>(s.w_space->num_dofs() + s.lambda_space->num_dofs());
  const ErrorNorms n = error_norms(system, b, c.has_exact ? c.exact : ExactSolution{});
  r.err_L2_interior = n.l2_interior;
  r.err_L2_uplus = n.l2_u_plus;
  r.err_L2_lambda = n.l2_lambda;
  r.err_mismatch = n.mismatch;
  r.outer_iters = b.outer.iterations;
  r.inner_iters_interior = mean_iterations(b.interior_solves);
  r.inner_iters_exterior = mean_iterations(b.exterior_solves);
  r.time_s = since(start);
  r.tau = system.tau();
  if (bundle_out) *bundle_out = std::move(b);
  return r;
}

ResultTable run_convergence(const ExperimentConfig& config) {
  config.validate();
  const ManufacturedCase c = case_by_name(config.case_name);
  ResultTable table;
  for (int level : config.levels) {
    const LevelSetup s = build_level(c, config, level);
    const CoupledSystem system = build_system(s, c, config, config.tau);
    ResultRow r = solve_row(s, system, c, config);
    r.time_s += s.assembly_time;
    table.add(r);
  }
  return table;
}

ResultTable run_tau_sweep(const ExperimentConfig& config) {
  config.validate();
  const ManufacturedCase c = case_by_name(config.case_name);
  ResultTable table(true);
  for (int level : config.levels) {
    const LevelSetup s = build_level(c, config, level);
    for (double tau : config.tau_list) {
      ResultRow r;
      const CoupledSystem system = build_system(s, c, config, tau);
      try {
        r = solve_row(s, system, c, config);
      } catch (const SolverError& e) {
        // small tau leaves the inner blocks indefinite; the dense solve still gives the discrete errors
        ExperimentConfig direct = config;
        direct.method = "direct";
        try {
          r = solve_row(s, system, c, direct);
          r.outer_iters = static_cast<int>(e.residuals().size());
          r.status = "direct-fallback";
          r.tau = tau;
          table.add(r);
          continue;
        } catch (const Error&) {
        }
        r = ResultRow{};
        r.level = s.level;
        r.h = s.h;
        r.dofs_interior = static_cast<long>(s.volume->num_dofs());
        r.dofs_boundary = static_cast<long>(s.w_space->num_dofs() + s.lambda_space->num_dofs());
        r.outer_iters = static_cast<int>(e.residuals().size());
        r.status = "failed";
      }
      r.tau = tau;
      table.add(r);
    }
  }
  return table;
}

ResultTable run_preconditioning_study(const ExperimentConfig& config) {
  config.validate();
  const ManufacturedCase c = case_by_name(config.case_name);
  ResultTable table(true);
  for (int level : config.levels) {
    const LevelSetup s = build_level(c, config, level);
    const CoupledSystem system = build_system(s, c, config, config.tau);
    ResultRow pre = solve_row(s, system, c, config);
    pre.status = "preconditioned";
    ExperimentConfig plain = config;
    plain.solvers.interior.preconditioner = "none";
    plain.solvers.exterior.preconditioner = "none";
    ResultRow raw = solve_row(s, system, c, plain);
    raw.status = "unpreconditioned";
    table.add(pre);
    table.add(raw);
  }
  return table;
}

double bundle_difference(const SolutionBundle& a, const SolutionBundle& b) {
  auto rel = [](const Vector& x, const Vector& y) {
    if (x.size() != y.size()) throw StructuralError("bundles have different layouts");
    const double d = (x - y).norm();
    const double n = y.norm();
    return n > 0.0 ? d / n : d;
  };
  return std::max({rel(a.u_minus, b.u_minus), rel(a.u_plus, b.u_plus), rel(a.lambda, b.lambda),
                   rel(a.u_tilde, b.u_tilde)});
}

bool jacobi_converges(const CoupledSystem& system, double sigma, const JacobiConfig& config, IterationTrace* trace) {
  try {
    JacobiResult r = relaxed_jacobi(system, sigma, config);
    if (trace) *trace = r.trace;
    return r.trace.converged;
  } catch (const DivergenceError& e) {
    if (trace) {
      *trace = IterationTrace{};
      trace->increments = e.increments();
    }
    return false;
  }
}

JacobiStudy run_jacobi_study(const ExperimentConfig& config) {
  config.validate();
  const ManufacturedCase c = case_by_name(config.case_name);
  const LevelSetup s = build_level(c, config, config.levels.front());
  const CoupledSystem system = build_system(s, c, config, config.tau);
  ExperimentConfig ref_config = config;
  ref_config.method = "schur-cg";
  SolutionBundle reference;
  solve_row(s, system, c, ref_config, &reference);

  JacobiStudy study;
  for (double sigma : config.sigma_list) {
    const auto start = Clock::now();
    ResultRow r;
    r.level = s.level;
    r.h = s.h;
    r.dofs_interior = static_cast<long>(s.volume->num_dofs());
    r.dofs_boundary = static_cast<long>(s.w_space->num_dofs() + s.lambda_space->num_dofs());
    r.tau = config.tau;
    r.sigma = sigma;
    try {
      JacobiResult j = relaxed_jacobi(system, sigma, config.jacobi);
      r.outer_iters = j.trace.iterations;
      r.status = j.trace.converged ? "converged" : "max-iterations";
      r.inner_iters_interior = mean_iterations(j.bundle.interior_solves);
      r.inner_iters_exterior = mean_iterations(j.bundle.exterior_solves);
      if (j.trace.converged) {
        const ErrorNorms n = error_norms(system, j.bundle, c.has_exact ? c.exact : ExactSolution{});
        r.err_L2_interior = n.l2_interior;
        r.err_L2_uplus = n.l2_u_plus;
        r.err_L2_lambda = n.l2_lambda;
        r.err_mismatch = bundle_difference(j.bundle, reference);
      }
      study.traces.push_back(j.trace);
    } catch (const DivergenceError& e) {
      r.status = "diverged";
      r.outer_iters = static_cast<int>(e.increments().size());
      IterationTrace t;
      t.increments = e.increments();
      study.traces.push_back(t);
    }
    r.time_s = since(start);
    study.table.add(r);
  }

  // Bisection in log(sigma) for the smallest converging sigma.
  double lo = config.sigma_min, hi = config.sigma_max;
  const bool hi_ok = jacobi_converges(system, hi, config.jacobi);
  study.bisection.emplace_back(hi, hi_ok);
  if (!hi_ok) {
    study.threshold_found = false;
    study.sigma_star = std::numeric_limits<double>::quiet_NaN();
    return study;
  }
  const bool lo_ok = jacobi_converges(system, lo, config.jacobi);
  study.bisection.emplace_back(lo, lo_ok);
  study.threshold_found = true;
  if (lo_ok) {
    study.sigma_star = lo;
    study.converges_everywhere = true;
    return study;
  }
  for (int it = 0; it < 12 && hi / lo > 1.05; ++it) {
    const double mid = std::sqrt(lo * hi);
    const bool ok = jacobi_converges(system, mid, config.jacobi);
    study.bisection.emplace_back(mid, ok);
    (ok ? hi : lo) = mid;
  }
  study.sigma_star = hi;
  return study;
}

}  // namespace fembem
