#include <gtest/gtest.h>

#include "fembem/bem/trace_space.hpp"
#include "fembem/common/errors.hpp"
#include "fembem/coupling/norms.hpp"
#include "fembem/fem/interior_assembly.hpp"
#include "fembem/fem/interior_solve.hpp"
#include "fembem/harness/cases.hpp"
#include "fembem/harness/result_table.hpp"
#include "fembem/mesh/generators.hpp"

using namespace fembem;

namespace {

struct Problem {
  std::shared_ptr<const VolumeSpace> volume;
  std::shared_ptr<const TraceSpace> trace;
  InteriorBlocks blocks;
};

Problem make(const TetMesh& mesh, double eps, double tau, const ScalarField& f) {
  Problem s;
  s.volume = std::make_shared<const VolumeSpace>(std::make_shared<const TetMesh>(mesh), 1);
  s.trace = std::make_shared<const TraceSpace>(s.volume->boundary_ptr(), 1, Continuity::Discontinuous);
  s.blocks = assemble_interior_blocks(*s.volume, *s.trace, eps, tau, f);
  return s;
}

SolverConfig tight() { return SolverConfig{"cg", 1e-12, 5000, "jacobi", 100}; }

}  // namespace

TEST(InteriorDirichlet, ZeroDataGivesZero) {
  const Problem s = make(generate_ball_mesh(3), 1.0, 10.0, [](const Vec3&) { return 0.0; });
  const KrylovResult r = solve_interior_dirichlet(s.blocks, Vector::Zero(s.trace->num_dofs()), tight());
  EXPECT_EQ(r.solution.norm(), 0.0);
}

TEST(InteriorDirichlet, ConstantTraceIsReproducedWithoutReaction) {
  for (double tau : {10.0, 100.0, 1000.0}) {
    const Problem s = make(generate_cube_mesh(3), 0.0, tau, [](const Vec3&) { return 0.0; });
    const KrylovResult r = solve_interior_dirichlet(s.blocks, s.trace->constant(1.0), tight());
    EXPECT_LT(l2_error_interior(*s.volume, r.solution, [](const Vec3&) { return 1.0; }), 1e-9);
  }
}

TEST(InteriorDirichlet, ManufacturedSphereConvergesAtSecondOrder) {
  const ManufacturedCase c = sphere_case();
  std::vector<double> h, err;
  for (int n : {2, 4, 8}) {
    const TetMesh mesh = generate_ball_mesh(n);
    const Problem s = make(mesh, 1.0, 10.0, c.forcing);
    const Vector ut = s.trace->interpolate(c.exact.u_minus);
    const KrylovResult r = solve_interior_dirichlet(s.blocks, ut, tight());
    h.push_back(mesh_size(mesh));
    err.push_back(l2_error_interior(*s.volume, r.solution, c.exact.u_minus));
  }
  EXPECT_LT(err[1], err[0]);
  EXPECT_LT(err[2], err[1]);
  EXPECT_GE(fit_slope(h, err), 1.8);
}

TEST(InteriorDirichlet, SolverFailureCarriesHistory) {
  const Problem s = make(generate_ball_mesh(3), 1.0, 10.0, sphere_case().forcing);
  SolverConfig few = tight();
  few.max_iterations = 2;
  try {
    solve_interior_dirichlet(s.blocks, s.trace->constant(1.0), few);
    FAIL() << "expected SolverError";
  } catch (const SolverError& e) {
    EXPECT_GE(e.residuals().size(), 2u);
  }
}

TEST(InteriorDirichlet, ConfigurationAndSizeChecks) {
  const Problem s = make(generate_cube_mesh(2), 1.0, 10.0, [](const Vec3&) { return 0.0; });
  SolverConfig bad = tight();
  bad.preconditioner = "amg";
  EXPECT_THROW(InteriorDirichletSolver(s.blocks, bad), ConfigError);
  EXPECT_THROW(solve_interior_dirichlet(s.blocks, Vector::Zero(3), tight()), StructuralError);
}

TEST(InteriorDirichlet, ZeroReactionStillSolvable) {
  const Problem s = make(generate_cube_mesh(3), 0.0, 10.0, [](const Vec3&) { return 1.0; });
  const KrylovResult r = solve_interior_dirichlet(s.blocks, Vector::Zero(s.trace->num_dofs()), tight());
  EXPECT_TRUE(r.solution.allFinite());
  EXPECT_GT(r.solution.norm(), 0.0);
  EXPECT_TRUE(r.trace.converged);
}
