#include "fembem/fem/interior_assembly.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "fembem/common/errors.hpp"
#include "fembem/common/quadrature.hpp"

namespace fembem {

Coefficient::Coefficient(double value) : value_(value) {
  if (!(value >= 0.0)) throw InvalidCoefficient("reaction coefficient must be nonnegative, got " + std::to_string(value));
}

Coefficient::Coefficient(ScalarField field) : field_(std::move(field)) {
  if (!field_) throw InvalidArgument("empty coefficient field");
}

double Coefficient::operator()(const Vec3& x) const {
  if (!field_) return value_;
  const double v = field_(x);
  if (!(v >= 0.0)) {
    throw InvalidCoefficient("reaction coefficient sampled negative (" + std::to_string(v) + ") at (" +
                             std::to_string(x.x()) + ", " + std::to_string(x.y()) + ", " + std::to_string(x.z()) +
                             ")");
  }
  return v;
}

namespace {

Vec3 tet_point(const TetMesh& mesh, std::size_t t, const std::array<double, 4>& b) {
  const auto& tet = mesh.tets()[t];
  const auto& x = mesh.vertices();
  return b[0] * x[tet[0]] + b[1] * x[tet[1]] + b[2] * x[tet[2]] + b[3] * x[tet[3]];
}

std::array<double, 4> tet_bary(const std::array<double, 3>& p) {
  return {1.0 - p[0] - p[1] - p[2], p[0], p[1], p[2]};
}

std::array<double, 3> tri_bary(const std::array<double, 2>& p) { return {1.0 - p[0] - p[1], p[0], p[1]}; }

SparseMatrix from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& t) {
  SparseMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace

SparseMatrix assemble_interior(const VolumeSpace& space, const Coefficient& epsilon) {
  const TetMesh& mesh = space.mesh();
  const int nl = space.dofs_per_tet();
  const TetRule rule = tet_rule(2 * space.degree());
  std::vector<Triplet> entries;
  entries.reserve(mesh.num_tets() * nl * nl);
  std::vector<double> phi(nl);
  std::vector<Vec3> grad(nl);
  DenseMatrix local(nl, nl);
  for (std::size_t t = 0; t < mesh.num_tets(); ++t) {
    local.setZero();
    const double jac = 6.0 * mesh.signed_volume(t);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto b = tet_bary(rule.points[q]);
      space.basis_values(b, phi.data());
      space.basis_gradients(t, b, grad.data());
      const double w = rule.weights[q] * jac;
      const double eps = epsilon.is_zero() ? 0.0 : epsilon(tet_point(mesh, t, b));
      for (int i = 0; i < nl; ++i) {
        for (int j = 0; j < nl; ++j) local(i, j) += w * (grad[i].dot(grad[j]) + eps * phi[i] * phi[j]);
      }
    }
    const auto dofs = space.tet_dofs(t);
    for (int i = 0; i < nl; ++i) {
      for (int j = 0; j < nl; ++j) entries.emplace_back(dofs[i], dofs[j], local(i, j));
    }
  }
  return from_triplets(space.num_dofs(), space.num_dofs(), entries);
}

NitscheBlocks assemble_nitsche(const VolumeSpace& space, const TraceSpace& trace, double tau) {
  if (!(tau > 0.0)) throw InvalidArgument("penalty parameter tau must be positive");
  const SurfaceMesh& gamma = space.boundary();
  if (!same_surface(gamma, trace.surface())) {
    throw StructuralError("trace space does not live on the boundary of the volume mesh");
  }
  const int nl = space.dofs_per_tet();
  const int ml = trace.local_size();
  const TriangleRule rule = triangle_rule(2 * std::max(space.degree(), trace.degree()) + 1);

  std::vector<Triplet> cons, pvv, flux, pvm, pmm;
  std::vector<double> phi(nl);
  std::vector<Vec3> grad(nl);
  double mu[3];
  DenseMatrix lc(nl, nl), lpvv(nl, nl), lflux(nl, ml), lpvm(nl, ml), lpmm(ml, ml);
  for (std::size_t e = 0; e < gamma.num_triangles(); ++e) {
    const std::size_t t = static_cast<std::size_t>(gamma.source_facet(e).tet);
    const Vec3& n = gamma.normals()[e];
    const double jac = 2.0 * gamma.areas()[e];
    const double weight = tau / gamma.diameters()[e];
    lc.setZero();
    lpvv.setZero();
    lflux.setZero();
    lpvm.setZero();
    lpmm.setZero();
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto bt = tri_bary(rule.points[q]);
      const auto b = space.facet_to_tet(e, bt);
      space.basis_values(b, phi.data());
      space.basis_gradients(t, b, grad.data());
      trace.basis_values(bt, mu);
      const double w = rule.weights[q] * jac;
      for (int i = 0; i < nl; ++i) {
        const double dni = grad[i].dot(n);
        for (int j = 0; j < nl; ++j) {
          lc(i, j) += w * grad[j].dot(n) * phi[i];
          lpvv(i, j) += w * weight * phi[j] * phi[i];
        }
        for (int k = 0; k < ml; ++k) {
          lflux(i, k) += w * mu[k] * dni;
          lpvm(i, k) += w * weight * mu[k] * phi[i];
        }
      }
      for (int k = 0; k < ml; ++k) {
        for (int l = 0; l < ml; ++l) lpmm(k, l) += w * weight * mu[l] * mu[k];
      }
    }
    const auto vd = space.tet_dofs(t);
    const auto md = trace.triangle_dofs(e);
    for (int i = 0; i < nl; ++i) {
      for (int j = 0; j < nl; ++j) {
        cons.emplace_back(vd[i], vd[j], lc(i, j));
        pvv.emplace_back(vd[i], vd[j], lpvv(i, j));
      }
      for (int k = 0; k < ml; ++k) {
        flux.emplace_back(vd[i], md[k], lflux(i, k));
        pvm.emplace_back(vd[i], md[k], lpvm(i, k));
      }
    }
    for (int k = 0; k < ml; ++k) {
      for (int l = 0; l < ml; ++l) pmm.emplace_back(md[k], md[l], lpmm(k, l));
    }
  }
  NitscheBlocks blocks;
  blocks.tau = tau;
  const std::size_t nv = space.num_dofs();
  const std::size_t nm = trace.num_dofs();
  blocks.consistency = from_triplets(nv, nv, cons);
  blocks.penalty_vv = from_triplets(nv, nv, pvv);
  blocks.flux_trace = from_triplets(nv, nm, flux);
  blocks.penalty_vm = from_triplets(nv, nm, pvm);
  blocks.penalty_mm = from_triplets(nm, nm, pmm);
  return blocks;
}

Vector assemble_load(const VolumeSpace& space, const ScalarField& f, std::optional<int> degree) {
  const int d = degree.value_or(2 * space.degree() + 4);
  if (d < 0 || d > 40) throw ConfigError("load quadrature degree must lie in [0, 40]");
  const TetMesh& mesh = space.mesh();
  const int nl = space.dofs_per_tet();
  const TetRule rule = tet_rule(d);
  Vector load = Vector::Zero(static_cast<Eigen::Index>(space.num_dofs()));
  std::vector<double> phi(nl);
  for (std::size_t t = 0; t < mesh.num_tets(); ++t) {
    const double jac = 6.0 * mesh.signed_volume(t);
    const auto dofs = space.tet_dofs(t);
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const auto b = tet_bary(rule.points[q]);
      space.basis_values(b, phi.data());
      const double fw = f(tet_point(mesh, t, b)) * rule.weights[q] * jac;
      for (int i = 0; i < nl; ++i) load(dofs[i]) += fw * phi[i];
    }
  }
  return load;
}

InteriorBlocks assemble_interior_blocks(const VolumeSpace& space, const TraceSpace& trace,
                                        const Coefficient& epsilon, double tau, const ScalarField& f) {
  InteriorBlocks blocks;
  blocks.stiffness_plus_mass = assemble_interior(space, epsilon);
  blocks.nitsche = assemble_nitsche(space, trace, tau);
  blocks.load = assemble_load(space, f);
  return blocks;
}

SparseMatrix InteriorBlocks::nitsche_uu() const {
  SparseMatrix nt = nitsche.consistency.transpose();
  return SparseMatrix(nitsche.penalty_vv - nitsche.consistency - nt);
}

SparseMatrix InteriorBlocks::a_uu() const { return SparseMatrix(stiffness_plus_mass + nitsche_uu()); }

SparseMatrix InteriorBlocks::a_um() const { return SparseMatrix(nitsche.flux_trace - nitsche.penalty_vm); }

SparseMatrix InteriorBlocks::a_mm() const { return nitsche.penalty_mm; }

SparseMatrix InteriorBlocks::a_h() const {
  const SparseMatrix uu = a_uu();
  const SparseMatrix um = a_um();
  const SparseMatrix& mm = nitsche.penalty_mm;
  const Eigen::Index nv = uu.rows();
  const Eigen::Index nm = mm.rows();
  std::vector<Triplet> t;
  t.reserve(uu.nonZeros() + 2 * um.nonZeros() + mm.nonZeros());
  for (Eigen::Index k = 0; k < uu.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(uu, k); it; ++it) t.emplace_back(it.row(), it.col(), it.value());
  for (Eigen::Index k = 0; k < um.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(um, k); it; ++it) {
      t.emplace_back(it.row(), nv + it.col(), it.value());
      t.emplace_back(nv + it.col(), it.row(), it.value());
    }
  for (Eigen::Index k = 0; k < mm.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(mm, k); it; ++it) t.emplace_back(nv + it.row(), nv + it.col(), it.value());
  SparseMatrix m(nv + nm, nv + nm);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

}  // namespace fembem
