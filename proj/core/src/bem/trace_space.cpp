#include "fembem/bem/trace_space.hpp"

#include "fembem/bem/surface_mass.hpp"
#include "fembem/common/errors.hpp"
#include "fembem/common/quadrature.hpp"

namespace fembem {

TraceSpace::TraceSpace(std::shared_ptr<const SurfaceMesh> surface, int degree, Continuity continuity)
    : surface_(std::move(surface)), degree_(degree), continuity_(continuity) {
  if (!surface_) throw InvalidArgument("TraceSpace needs a surface mesh");
  const bool supported = (continuity_ == Continuity::Continuous && degree_ == 1) ||
                         (continuity_ == Continuity::Discontinuous && (degree_ == 0 || degree_ == 1));
  if (!supported) throw UnsupportedSpace("unsupported trace space " + describe());

  const std::size_t nt = surface_->num_triangles();
  const int per = local_size();
  dofs_.resize(nt * per);
  if (continuity_ == Continuity::Continuous) {
    for (std::size_t t = 0; t < nt; ++t) {
      for (int a = 0; a < 3; ++a) dofs_[3 * t + a] = surface_->triangles()[t][a];
    }
    num_dofs_ = surface_->num_vertices();
  } else {
    for (std::size_t i = 0; i < dofs_.size(); ++i) dofs_[i] = static_cast<int>(i);
    num_dofs_ = dofs_.size();
  }
}

std::string TraceSpace::describe() const {
  return std::string(continuity_ == Continuity::Continuous ? "continuous" : "discontinuous") + " P" +
         std::to_string(degree_);
}

std::span<const int> TraceSpace::triangle_dofs(std::size_t t) const {
  const std::size_t per = static_cast<std::size_t>(local_size());
  return {dofs_.data() + t * per, per};
}

void TraceSpace::basis_values(const std::array<double, 3>& bary, double* values) const {
  if (degree_ == 0) {
    values[0] = 1.0;
  } else {
    values[0] = bary[0];
    values[1] = bary[1];
    values[2] = bary[2];
  }
}

std::array<Vec3, 3> TraceSpace::surface_gradients(std::size_t t) const {
  std::array<Vec3, 3> g{Vec3::Zero(), Vec3::Zero(), Vec3::Zero()};
  if (degree_ == 0) return g;
  const auto& tri = surface_->triangles()[t];
  const auto& x = surface_->vertices();
  const Vec3& n = surface_->normals()[t];
  const double twice_area = 2.0 * surface_->areas()[t];
  for (int a = 0; a < 3; ++a) {
    const Vec3 edge = x[tri[(a + 2) % 3]] - x[tri[(a + 1) % 3]];
    g[a] = n.cross(edge) / twice_area;
  }
  return g;
}

std::array<Vec3, 3> TraceSpace::surface_curls(std::size_t t) const {
  auto g = surface_gradients(t);
  const Vec3& n = surface_->normals()[t];
  for (auto& v : g) v = n.cross(v);
  return g;
}

double TraceSpace::evaluate(const Vector& c, std::size_t t, const std::array<double, 3>& bary) const {
  double phi[3];
  basis_values(bary, phi);
  const auto d = triangle_dofs(t);
  double v = 0.0;
  for (std::size_t k = 0; k < d.size(); ++k) v += c(d[k]) * phi[k];
  return v;
}

Vector TraceSpace::interpolate(const ScalarField& f) const {
  Vector v = Vector::Zero(num_dofs_);
  for (std::size_t t = 0; t < surface_->num_triangles(); ++t) {
    const auto d = triangle_dofs(t);
    if (degree_ == 0) {
      v(d[0]) = f(surface_->centroid(t));
    } else {
      for (int a = 0; a < 3; ++a) v(d[a]) = f(surface_->vertices()[surface_->triangles()[t][a]]);
    }
  }
  return v;
}

Vector TraceSpace::project(const NormalField& f) const {
  const TriangleRule rule = triangle_rule(2 * degree_ + 4);
  Vector rhs = Vector::Zero(num_dofs_);
  for (std::size_t t = 0; t < surface_->num_triangles(); ++t) {
    const auto& tri = surface_->triangles()[t];
    const auto& x = surface_->vertices();
    const Vec3& n = surface_->normals()[t];
    const auto d = triangle_dofs(t);
    const double jac = 2.0 * surface_->areas()[t];
    for (std::size_t q = 0; q < rule.size(); ++q) {
      const std::array<double, 3> b{1.0 - rule.points[q][0] - rule.points[q][1], rule.points[q][0],
                                    rule.points[q][1]};
      const Vec3 p = b[0] * x[tri[0]] + b[1] * x[tri[1]] + b[2] * x[tri[2]];
      double phi[3];
      basis_values(b, phi);
      const double fw = f(p, n) * rule.weights[q] * jac;
      for (std::size_t k = 0; k < d.size(); ++k) rhs(d[k]) += fw * phi[k];
    }
  }
  const SparseMatrix mass = surface_mass(*this, *this);
  Eigen::SimplicialLDLT<SparseMatrix> ldlt(mass);
  if (ldlt.info() != Eigen::Success) throw SolverError("trace space mass matrix factorization failed", {});
  return ldlt.solve(rhs);
}

Vector TraceSpace::constant(double value) const {
  return interpolate([value](const Vec3&) { return value; });
}

bool same_surface(const SurfaceMesh& a, const SurfaceMesh& b) {
  if (&a == &b) return true;
  if (a.num_triangles() != b.num_triangles() || a.num_vertices() != b.num_vertices()) return false;
  if (a.triangles() != b.triangles()) return false;
  for (std::size_t v = 0; v < a.num_vertices(); ++v) {
    if ((a.vertices()[v] - b.vertices()[v]).norm() > 1e-12) return false;
  }
  return true;
}

}  // namespace fembem
