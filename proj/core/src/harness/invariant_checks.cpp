#include "fembem/harness/invariant_checks.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>

#include "fembem/bem/boundary_operators.hpp"
#include "fembem/bem/exterior.hpp"
#include "fembem/coupling/schur.hpp"
#include "fembem/fem/interior_assembly.hpp"
#include "fembem/harness/cases.hpp"
#include "fembem/harness/experiments.hpp"
#include "fembem/mesh/generators.hpp"

namespace fembem {

namespace {

double rel_asym(const DenseMatrix& m) { return (m - m.transpose()).norm() / m.norm(); }

CheckResult at_most(std::string name, double value, double threshold, std::string detail = {}) {
  return {std::move(name), value <= threshold, value, threshold, std::move(detail)};
}

CheckResult at_least(std::string name, double value, double threshold, std::string detail = {}) {
  return {std::move(name), value >= threshold, value, threshold, std::move(detail)};
}

Vector random_vector(std::mt19937& rng, Eigen::Index n) {
  std::normal_distribution<double> d;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = d(rng);
  return v;
}

}  // namespace

std::vector<CheckResult> run_invariant_checks(unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<CheckResult> out;

  // Mesh closure: solid angles of the cube surface seen from inside sum to 4 pi.
  {
    const TetMesh cube = generate_cube_mesh(2);
    const SurfaceMesh s = extract_boundary(cube);
    const Vec3 p(0.3, 0.4, 0.55);
    double omega = 0.0;
    for (const auto& t : s.triangles()) {
      const Vec3 a = s.vertices()[t[0]] - p, b = s.vertices()[t[1]] - p, c = s.vertices()[t[2]] - p;
      const double la = a.norm(), lb = b.norm(), lc = c.norm();
      const double num = a.dot(b.cross(c));
      const double den = la * lb * lc + a.dot(b) * lc + a.dot(c) * lb + b.dot(c) * la;
      omega += 2.0 * std::atan2(num, den);
    }
    out.push_back(at_most("cube boundary solid angle sums to 4pi", std::abs(omega - 4.0 * kPi), 1e-8));
  }

  ExperimentConfig cfg;
  cfg.levels = {1};
  const ManufacturedCase cube = cube_case();
  ExperimentConfig cube_cfg = cfg;
  cube_cfg.case_name = "cube";
  const LevelSetup cs = build_level(cube, cube_cfg, 1);
  const CoupledSystem csys = build_system(cs, cube, cube_cfg, 10.0);

  out.push_back(at_most("a_h symmetric (cube)", rel_asym(DenseMatrix(csys.interior().a_h())), 1e-12));

  const ManufacturedCase sphere = sphere_case();
  ExperimentConfig sph_cfg = cfg;
  sph_cfg.base_subdivisions = 3;
  const LevelSetup ss = build_level(sphere, sph_cfg, 1);
  const BoundaryOperators& ops = ss.operators;
  out.push_back(at_most("V symmetric", rel_asym(ops.V), 1e-10));
  {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> ev(0.5 * (ops.V + ops.V.transpose()));
    out.push_back(at_least("V positive definite (min eigenvalue)", ev.eigenvalues().minCoeff(), 1e-300));
  }
  out.push_back(at_most("W symmetric", rel_asym(ops.W), 1e-10));
  {
    Eigen::SelfAdjointEigenSolver<DenseMatrix> ev(0.5 * (ops.W + ops.W.transpose()));
    const double lo = ev.eigenvalues().minCoeff(), hi = ev.eigenvalues().maxCoeff();
    out.push_back(at_least("W positive semidefinite (min/max eigenvalue)", lo / hi, -1e-10));
    const Vector ones = Vector::Ones(ops.W.cols());
    out.push_back(at_most("W annihilates constants", (ops.W * ones).norm() / ops.W.norm(), 1e-8));
  }
  out.push_back(at_most("K' equals K transpose", (ops.Kp - ops.K.transpose()).norm(), 0.0));
  {
    const double v11 = Vector::Ones(ops.V.rows()).dot(ops.V * Vector::Ones(ops.V.rows()));
    const double area = ss.w_space->surface().total_area();
    out.push_back(at_most("<V1,1> close to |Gamma| (relative)", std::abs(v11 - area) / area, 0.05));
  }

  const CoupledSystem sys = build_system(ss, sphere, sph_cfg, 10.0);
  {
    const ReducedExterior red(sys.exterior());
    out.push_back(at_most("reduced exterior form symmetric", rel_asym(red.matrix()), 1e-10));
  }
  {
    const DenseMatrix m = sys.dense_matrix();
    const BlockLayout& L = sys.layout();
    const double coupling = m.block(0, L.u_plus(), L.nv, L.nw + L.nl).cwiseAbs().maxCoeff() +
                            m.block(L.u_plus(), 0, L.nw + L.nl, L.nv).cwiseAbs().maxCoeff();
    out.push_back(at_most("no direct interior/exterior coupling", coupling, 0.0));
    const Vector x = random_vector(rng, L.size());
    out.push_back(at_most("monolithic action matches blockwise action",
                          (m * x - sys.apply(x)).norm() / (m * x).norm(), 1e-13));
  }
  {
    CoupledSolverConfig sc;
    const SchurComplement s(sys, true, sc.interior, sc.exterior);
    const Vector a = random_vector(rng, sys.layout().nm), b = random_vector(rng, sys.layout().nm);
    const double sab = s.apply(a).dot(b), sba = s.apply(b).dot(a);
    out.push_back(at_most("Schur operator symmetric", std::abs(sab - sba) / std::abs(sab), 1e-8));
  }
  {
    const SolutionBundle b = solve_coupled(sys, CoupledMethod::SchurCg);
    const Vector x = sys.stack(b.u_minus, b.u_plus, b.lambda, b.u_tilde);
    const Vector r = sys.apply(x) - sys.rhs();
    out.push_back(at_most("monolithic residual of schur-cg solution (max entry)", r.cwiseAbs().maxCoeff(), 1e-8));
  }
  return out;
}

bool print_checks(const std::vector<CheckResult>& checks, std::ostream& out) {
  bool all = true;
  for (const auto& c : checks) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "value=%.3e threshold=%.3e", c.value, c.threshold);
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << buf << ")";
    if (!c.detail.empty()) out << " " << c.detail;
    out << '\n';
    all = all && c.passed;
  }
  return all;
}

}  // namespace fembem
