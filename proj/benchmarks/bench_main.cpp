#include <benchmark/benchmark.h>

#include <memory>

#include "fembem/bem/boundary_operators.hpp"
#include "fembem/bem/trace_space.hpp"
#include "fembem/fem/interior_assembly.hpp"
#include "fembem/fem/volume_space.hpp"
#include "fembem/mesh/generators.hpp"
#include "fembem/mesh/surface_mesh.hpp"
#include "fembem/solvers/krylov.hpp"

using namespace fembem;

static void BM_BoundaryOperators(benchmark::State& state) {
  const auto s = std::make_shared<const SurfaceMesh>(extract_boundary(generate_ball_mesh(state.range(0))));
  const TraceSpace w(s, 1, Continuity::Continuous);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_boundary_operators(w, w));
  state.counters["dofs"] = static_cast<double>(w.num_dofs());
}
BENCHMARK(BM_BoundaryOperators)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_InteriorAssembly(benchmark::State& state) {
  const VolumeSpace v(std::make_shared<const TetMesh>(generate_cube_mesh(state.range(0))), 1);
  for (auto _ : state) benchmark::DoNotOptimize(assemble_interior(v, Coefficient(1.0)));
  state.counters["dofs"] = static_cast<double>(v.num_dofs());
}
BENCHMARK(BM_InteriorAssembly)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ConjugateGradient(benchmark::State& state) {
  const VolumeSpace v(std::make_shared<const TetMesh>(generate_cube_mesh(state.range(0))), 1);
  const SparseMatrix a = assemble_interior(v, Coefficient(1.0));
  const Vector b = Vector::Ones(a.rows());
  SolverConfig c;
  c.tolerance = 1e-10;
  const LinearOperator op = as_operator(a);
  const LinearOperator pre = jacobi_preconditioner(a);
  for (auto _ : state) benchmark::DoNotOptimize(cg(op, b, c, pre));
  state.counters["dofs"] = static_cast<double>(a.rows());
}
BENCHMARK(BM_ConjugateGradient)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
