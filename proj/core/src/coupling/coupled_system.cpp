#include "fembem/coupling/coupled_system.hpp"

#include <cmath>

#include "fembem/common/errors.hpp"

namespace fembem {

CoupledSystem::CoupledSystem(std::shared_ptr<const VolumeSpace> volume, InteriorBlocks interior,
                             ExteriorBlocks exterior)
    : volume_(std::move(volume)), interior_(std::move(interior)), exterior_(std::move(exterior)) {
  if (!volume_) throw InvalidArgument("coupled system needs a volume space");
  if (!exterior_.trace_space) throw InvalidArgument("exterior blocks carry no trace space");
  layout_.nv = static_cast<Eigen::Index>(volume_->num_dofs());
  layout_.nw = static_cast<Eigen::Index>(exterior_.num_w());
  layout_.nl = static_cast<Eigen::Index>(exterior_.num_lambda());
  layout_.nm = static_cast<Eigen::Index>(exterior_.num_trace());
  if (interior_.stiffness_plus_mass.rows() != layout_.nv || interior_.nitsche.penalty_mm.rows() != layout_.nm ||
      interior_.load.size() != layout_.nv) {
    throw StructuralError("interior and exterior block layouts do not match");
  }
  if (!same_surface(volume_->boundary(), exterior_.trace_space->surface())) {
    throw StructuralError("exterior trace space is not on the volume mesh boundary");
  }
  a_uu_ = interior_.a_uu();
  a_um_ = interior_.a_um();
}

CoupledSystem assemble_coupled(std::shared_ptr<const VolumeSpace> volume, InteriorBlocks interior,
                               ExteriorBlocks exterior) {
  if (std::abs(interior.nitsche.tau - exterior.tau) > 1e-14 * std::abs(exterior.tau)) {
    throw InvalidArgument("interior and exterior blocks use different penalty parameters");
  }
  return CoupledSystem(std::move(volume), std::move(interior), std::move(exterior));
}

Vector CoupledSystem::trace_row(const Vector& um, const Vector& up, const Vector& l, const Vector& ut) const {
  return a_um_.transpose() * um + interior_.nitsche.penalty_mm * ut - exterior_.penalty_wm.transpose() * up -
         exterior_.C.transpose() * l + exterior_.penalty_mm * ut;
}

Vector CoupledSystem::apply(const Vector& x) const {
  const BlockLayout& L = layout_;
  if (x.size() != L.size()) throw StructuralError("monolithic vector has the wrong length");
  const Vector um = x.segment(L.u_minus(), L.nv);
  const Vector up = x.segment(L.u_plus(), L.nw);
  const Vector l = x.segment(L.lambda(), L.nl);
  const Vector ut = x.segment(L.u_tilde(), L.nm);
  Vector y(L.size());
  y.segment(L.u_minus(), L.nv) = a_uu_ * um + a_um_ * ut;
  const Vector ext = exterior_.apply(up, l, ut);
  y.segment(L.u_plus(), L.nw) = ext.segment(0, L.nw);
  y.segment(L.lambda(), L.nl) = ext.segment(L.nw, L.nl);
  y.segment(L.u_tilde(), L.nm) = trace_row(um, up, l, ut);
  return y;
}

Vector CoupledSystem::rhs() const {
  Vector b = Vector::Zero(layout_.size());
  b.segment(0, layout_.nv) = interior_.load;
  return b;
}

DenseMatrix CoupledSystem::dense_matrix() const {
  const BlockLayout& L = layout_;
  DenseMatrix m = DenseMatrix::Zero(L.size(), L.size());
  m.block(0, 0, L.nv, L.nv) = DenseMatrix(a_uu_);
  m.block(0, L.u_tilde(), L.nv, L.nm) = DenseMatrix(a_um_);
  m.block(L.u_tilde(), 0, L.nm, L.nv) = DenseMatrix(a_um_).transpose();
  m.block(L.u_tilde(), L.u_tilde(), L.nm, L.nm) = DenseMatrix(interior_.nitsche.penalty_mm);
  m.block(L.u_plus(), L.u_plus(), L.nw + L.nl + L.nm, L.nw + L.nl + L.nm) += exterior_.matrix();
  return m;
}

Vector CoupledSystem::stack(const Vector& um, const Vector& up, const Vector& l, const Vector& ut) const {
  const BlockLayout& L = layout_;
  if (um.size() != L.nv || up.size() != L.nw || l.size() != L.nl || ut.size() != L.nm) {
    throw StructuralError("block vectors do not match the layout");
  }
  Vector x(L.size());
  x << um, up, l, ut;
  return x;
}

int SolutionBundle::interior_iterations() const {
  int n = 0;
  for (const auto& t : interior_solves) n += t.iterations;
  return n;
}

int SolutionBundle::exterior_iterations() const {
  int n = 0;
  for (const auto& t : exterior_solves) n += t.iterations;
  return n;
}

}  // namespace fembem
