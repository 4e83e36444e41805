#include "fembem/fem/volume_space.hpp"

#include <algorithm>
#include <map>

#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

constexpr std::array<std::array<int, 2>, 6> kEdges{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

}  // namespace

VolumeSpace::VolumeSpace(std::shared_ptr<const TetMesh> mesh, int degree)
    : mesh_(std::move(mesh)), degree_(degree) {
  if (!mesh_) throw InvalidArgument("VolumeSpace needs a mesh");
  if (degree_ != 1 && degree_ != 2) {
    throw UnsupportedSpace("volume space degree " + std::to_string(degree_) + " not supported (1 or 2)");
  }
  boundary_ = std::make_shared<const SurfaceMesh>(extract_boundary(*mesh_));

  const std::size_t nv = mesh_->num_vertices();
  const int per = dofs_per_tet();
  dofs_.resize(mesh_->num_tets() * per);
  dof_points_ = mesh_->vertices();
  num_dofs_ = nv;

  std::map<std::pair<int, int>, int> edge_index;
  if (degree_ == 2) {
    for (const auto& tet : mesh_->tets()) {
      for (const auto& e : kEdges) {
        edge_index.emplace(std::minmax(tet[e[0]], tet[e[1]]), 0);
      }
    }
    int next = static_cast<int>(nv);
    for (auto& [edge, idx] : edge_index) {
      idx = next++;
      dof_points_.push_back(0.5 * (mesh_->vertices()[edge.first] + mesh_->vertices()[edge.second]));
    }
    num_dofs_ = static_cast<std::size_t>(next);
  }

  for (std::size_t t = 0; t < mesh_->num_tets(); ++t) {
    const auto& tet = mesh_->tets()[t];
    int* d = &dofs_[t * per];
    for (int k = 0; k < 4; ++k) d[k] = tet[k];
    if (degree_ == 2) {
      for (int e = 0; e < 6; ++e) d[4 + e] = edge_index.at(std::minmax(tet[kEdges[e][0]], tet[kEdges[e][1]]));
    }
  }

  std::vector<char> on_boundary(num_dofs_, 0);
  for (const auto& f : mesh_->boundary_facets()) {
    for (int v : f.vertices) on_boundary[v] = 1;
    if (degree_ == 2) {
      for (int a = 0; a < 3; ++a) {
        on_boundary[edge_index.at(std::minmax(f.vertices[a], f.vertices[(a + 1) % 3]))] = 1;
      }
    }
  }
  for (std::size_t i = 0; i < num_dofs_; ++i) {
    if (on_boundary[i]) boundary_dofs_.push_back(static_cast<int>(i));
  }
}

std::span<const int> VolumeSpace::tet_dofs(std::size_t tet) const {
  const std::size_t per = static_cast<std::size_t>(dofs_per_tet());
  return {dofs_.data() + tet * per, per};
}

Vector VolumeSpace::interpolate(const ScalarField& f) const {
  Vector v(num_dofs_);
  for (std::size_t i = 0; i < num_dofs_; ++i) v(i) = f(dof_points_[i]);
  return v;
}

void VolumeSpace::basis_values(const std::array<double, 4>& l, double* values) const {
  if (degree_ == 1) {
    for (int k = 0; k < 4; ++k) values[k] = l[k];
    return;
  }
  for (int k = 0; k < 4; ++k) values[k] = l[k] * (2.0 * l[k] - 1.0);
  for (int e = 0; e < 6; ++e) values[4 + e] = 4.0 * l[kEdges[e][0]] * l[kEdges[e][1]];
}

std::array<Vec3, 4> VolumeSpace::barycentric_gradients(std::size_t tet) const {
  const auto& t = mesh_->tets()[tet];
  const auto& x = mesh_->vertices();
  Eigen::Matrix3d jac;
  jac.col(0) = x[t[1]] - x[t[0]];
  jac.col(1) = x[t[2]] - x[t[0]];
  jac.col(2) = x[t[3]] - x[t[0]];
  const Eigen::Matrix3d inv = jac.inverse();
  std::array<Vec3, 4> g;
  for (int k = 1; k < 4; ++k) g[k] = inv.row(k - 1).transpose();
  g[0] = -(g[1] + g[2] + g[3]);
  return g;
}

void VolumeSpace::basis_gradients(std::size_t tet, const std::array<double, 4>& l, Vec3* grads) const {
  const auto g = barycentric_gradients(tet);
  if (degree_ == 1) {
    for (int k = 0; k < 4; ++k) grads[k] = g[k];
    return;
  }
  for (int k = 0; k < 4; ++k) grads[k] = (4.0 * l[k] - 1.0) * g[k];
  for (int e = 0; e < 6; ++e) {
    const int a = kEdges[e][0];
    const int b = kEdges[e][1];
    grads[4 + e] = 4.0 * (l[a] * g[b] + l[b] * g[a]);
  }
}

double VolumeSpace::evaluate(const Vector& c, std::size_t tet, const std::array<double, 4>& bary) const {
  double phi[10];
  basis_values(bary, phi);
  const auto d = tet_dofs(tet);
  double v = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) v += c(d[k]) * phi[k];
  return v;
}

Vec3 VolumeSpace::evaluate_gradient(const Vector& c, std::size_t tet, const std::array<double, 4>& bary) const {
  Vec3 grads[10];
  basis_gradients(tet, bary, grads);
  const auto d = tet_dofs(tet);
  Vec3 g = Vec3::Zero();
  for (std::size_t k = 0; k < d.size(); ++k) g += c(d[k]) * grads[k];
  return g;
}

std::array<double, 4> VolumeSpace::facet_to_tet(std::size_t t, const std::array<double, 3>& bary) const {
  const auto& facet = boundary_->source_facet(t);
  const auto local = TetMesh::local_face_vertices(facet.local_face);
  std::array<double, 4> l{0.0, 0.0, 0.0, 0.0};
  for (int a = 0; a < 3; ++a) l[local[a]] = bary[a];
  return l;
}

}  // namespace fembem
