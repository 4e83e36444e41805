#include "fembem/bem/boundary_operators.hpp"

#include <algorithm>
#include <vector>

#include "fembem/common/errors.hpp"

namespace fembem {

namespace {

constexpr double kInv4Pi = 1.0 / (4.0 * kPi);

/// Pair integrals of G and dG/dn_y against products of barycentric
/// coordinates: g[a][b] = int int G lambda_a(x) lambda_b(y).
struct PairIntegrals {
  double g[3][3];
  double k[3][3];
};

/// Physical quadrature points of one triangle for a regular rule.
struct TrianglePoints {
  std::vector<Vec3> x;
  std::vector<std::array<double, 3>> bary;
  std::vector<double> w;
};

class PairEngine {
 public:
  PairEngine(const SurfaceMesh& mesh, const BemQuadrature& config, bool need_k)
      : mesh_(mesh), quad_(config), need_k_(need_k) {
    for (int p : config.regular_points) {
      if (static_cast<std::size_t>(p) >= cache_.size()) cache_.resize(p + 1);
      if (!cache_[p].empty()) continue;
      const TriangleRule r = triangle_rule_points(p);
      cache_[p].resize(mesh.num_triangles());
      for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles()[t];
        const auto& v = mesh.vertices();
        TrianglePoints& tp = cache_[p][t];
        const double jac = 2.0 * mesh.areas()[t];
        for (std::size_t q = 0; q < r.size(); ++q) {
          const std::array<double, 3> b{1.0 - r.points[q][0] - r.points[q][1], r.points[q][0], r.points[q][1]};
          tp.x.push_back(b[0] * v[tri[0]] + b[1] * v[tri[1]] + b[2] * v[tri[2]]);
          tp.bary.push_back(b);
          tp.w.push_back(r.weights[q] * jac);
        }
      }
    }
  }

  void integrate(std::size_t tx, std::size_t ty, PairIntegrals& out) {
    std::fill(&out.g[0][0], &out.g[0][0] + 9, 0.0);
    std::fill(&out.k[0][0], &out.k[0][0] + 9, 0.0);
    const Vec3& ny = mesh_.normals()[ty];
    const auto& tri_x = mesh_.triangles()[tx];
    const auto& tri_y = mesh_.triangles()[ty];
    if (classify_pair(tri_x, tri_y) == PairKind::Regular) {
      const double h = std::max(mesh_.diameters()[tx], mesh_.diameters()[ty]);
      const double ratio = (mesh_.centroid(tx) - mesh_.centroid(ty)).norm() / h;
      const int p = quad_.config().regular_points_for(ratio);
      const TrianglePoints& px = cache_[p][tx];
      const TrianglePoints& py = cache_[p][ty];
      for (std::size_t i = 0; i < px.w.size(); ++i) {
        double sg[3] = {0, 0, 0}, sk[3] = {0, 0, 0};
        for (std::size_t j = 0; j < py.w.size(); ++j) {
          const Vec3 d = px.x[i] - py.x[j];
          const double r2 = d.squaredNorm();
          const double inv_r = 1.0 / std::sqrt(r2);
          const double g = py.w[j] * kInv4Pi * inv_r;
          const auto& by = py.bary[j];
          sg[0] += g * by[0];
          sg[1] += g * by[1];
          sg[2] += g * by[2];
          if (need_k_) {
            const double k = g * ny.dot(d) / r2;
            sk[0] += k * by[0];
            sk[1] += k * by[1];
            sk[2] += k * by[2];
          }
        }
        const auto& bx = px.bary[i];
        for (int a = 0; a < 3; ++a) {
          const double wa = px.w[i] * bx[a];
          for (int b = 0; b < 3; ++b) {
            out.g[a][b] += wa * sg[b];
            out.k[a][b] += wa * sk[b];
          }
        }
      }
      return;
    }
    quad_.rule(mesh_, tx, ty, rule_);
    const auto& v = mesh_.vertices();
    for (std::size_t q = 0; q < rule_.size(); ++q) {
      const auto& bx = rule_.bary_x[q];
      const auto& by = rule_.bary_y[q];
      const Vec3 x = bx[0] * v[tri_x[0]] + bx[1] * v[tri_x[1]] + bx[2] * v[tri_x[2]];
      const Vec3 y = by[0] * v[tri_y[0]] + by[1] * v[tri_y[1]] + by[2] * v[tri_y[2]];
      const Vec3 d = x - y;
      const double r2 = d.squaredNorm();
      if (r2 == 0.0) continue;
      const double g = rule_.weights[q] * kInv4Pi / std::sqrt(r2);
      const double k = need_k_ ? g * ny.dot(d) / r2 : 0.0;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          const double ab = bx[a] * by[b];
          out.g[a][b] += g * ab;
          out.k[a][b] += k * ab;
        }
      }
    }
  }

 private:
  const SurfaceMesh& mesh_;
  PairQuadrature quad_;
  bool need_k_;
  std::vector<std::vector<TrianglePoints>> cache_;
  PairRule rule_;
};

/// Local (test x trial) block from barycentric pair integrals.
void reduce(const double m[3][3], const TraceSpace& test, const TraceSpace& trial, double out[3][3]) {
  const bool tp0 = test.degree() == 0;
  const bool sp0 = trial.degree() == 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) out[a][b] = 0.0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) out[tp0 ? 0 : a][sp0 ? 0 : b] += m[a][b];
  }
}

/// Greedy coloring of triangles so that triangles of one color share no
/// vertex; lets rows be written concurrently without races.
std::vector<std::vector<std::size_t>> color_triangles(const SurfaceMesh& mesh) {
  std::vector<std::vector<std::size_t>> vertex_tris(mesh.num_vertices());
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t)
    for (int v : mesh.triangles()[t]) vertex_tris[v].push_back(t);
  std::vector<int> color(mesh.num_triangles(), -1);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t t = 0; t < mesh.num_triangles(); ++t) {
    std::vector<bool> used(classes.size() + 1, false);
    for (int v : mesh.triangles()[t])
      for (std::size_t s : vertex_tris[v])
        if (color[s] >= 0) used[color[s]] = true;
    int c = 0;
    while (used[c]) ++c;
    color[t] = c;
    if (static_cast<std::size_t>(c) == classes.size()) classes.emplace_back();
    classes[c].push_back(t);
  }
  return classes;
}

}  // namespace

BoundaryOperators assemble_boundary_operators(const TraceSpace& w_space, const TraceSpace& lambda_space,
                                              const BemQuadrature& quadrature, unsigned mask) {
  quadrature.validate();
  if (!same_surface(w_space.surface(), lambda_space.surface())) {
    throw StructuralError("boundary operator spaces live on different triangulations");
  }
  if ((mask & kHypersingular) && !w_space.continuous()) {
    throw UnsupportedSpace("hypersingular operator needs a continuous space, got " + w_space.describe());
  }
  const SurfaceMesh& mesh = w_space.surface();
  const auto nw = static_cast<Eigen::Index>(w_space.num_dofs());
  const auto nl = static_cast<Eigen::Index>(lambda_space.num_dofs());
  BoundaryOperators ops;
  if (mask & kSingleLayer) ops.V = DenseMatrix::Zero(nl, nl);
  if (mask & kDoubleLayer) ops.K = DenseMatrix::Zero(nl, nw);
  if (mask & kHypersingular) ops.W = DenseMatrix::Zero(nw, nw);

  std::vector<std::array<Vec3, 3>> curls;
  if (mask & kHypersingular) {
    curls.resize(mesh.num_triangles());
    for (std::size_t t = 0; t < mesh.num_triangles(); ++t) curls[t] = w_space.surface_curls(t);
  }

  const auto classes = color_triangles(mesh);
  const std::size_t nt = mesh.num_triangles();
  for (const auto& cls : classes) {
#pragma omp parallel
    {
      PairEngine engine(mesh, quadrature, (mask & kDoubleLayer) != 0);
      PairIntegrals pi;
      double loc[3][3];
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(cls.size()); ++c) {
        const std::size_t tx = cls[c];
        const auto lx = lambda_space.triangle_dofs(tx);
        const auto wx = w_space.triangle_dofs(tx);
        for (std::size_t ty = 0; ty < nt; ++ty) {
          engine.integrate(tx, ty, pi);
          if (mask & kSingleLayer) {
            const auto ly = lambda_space.triangle_dofs(ty);
            reduce(pi.g, lambda_space, lambda_space, loc);
            for (std::size_t a = 0; a < lx.size(); ++a)
              for (std::size_t b = 0; b < ly.size(); ++b) ops.V(lx[a], ly[b]) += loc[a][b];
          }
          if (mask & kDoubleLayer) {
            const auto wy = w_space.triangle_dofs(ty);
            reduce(pi.k, lambda_space, w_space, loc);
            for (std::size_t a = 0; a < lx.size(); ++a)
              for (std::size_t b = 0; b < wy.size(); ++b) ops.K(lx[a], wy[b]) += loc[a][b];
          }
          if (mask & kHypersingular) {
            const auto wy = w_space.triangle_dofs(ty);
            double i0 = 0.0;
            for (int a = 0; a < 3; ++a)
              for (int b = 0; b < 3; ++b) i0 += pi.g[a][b];
            for (int a = 0; a < 3; ++a)
              for (int b = 0; b < 3; ++b) ops.W(wx[a], wy[b]) += i0 * curls[tx][a].dot(curls[ty][b]);
          }
        }
      }
    }
  }
  // singular rules order the two triangles differently, so (tx,ty) and (ty,tx) differ at quadrature level
  if (mask & kSingleLayer) ops.V = 0.5 * (ops.V + ops.V.transpose()).eval();
  if (mask & kHypersingular) ops.W = 0.5 * (ops.W + ops.W.transpose()).eval();
  if (mask & kDoubleLayer) ops.Kp = ops.K.transpose();
  return ops;
}

DenseMatrix assemble_single_layer(const TraceSpace& trial, const TraceSpace& test, const BemQuadrature& q) {
  if (&trial != &test && (trial.degree() != test.degree() || trial.continuity() != test.continuity())) {
    throw UnsupportedSpace("single layer assembly expects identical trial and test spaces");
  }
  return assemble_boundary_operators(trial, test, q, kSingleLayer).V;
}

DenseMatrix assemble_double_layer(const TraceSpace& trial, const TraceSpace& test, const BemQuadrature& q) {
  return assemble_boundary_operators(trial, test, q, kDoubleLayer).K;
}

DenseMatrix assemble_adjoint_double_layer(const TraceSpace& trial, const TraceSpace& test,
                                          const BemQuadrature& q) {
  return assemble_boundary_operators(test, trial, q, kDoubleLayer).Kp;
}

DenseMatrix assemble_hypersingular(const TraceSpace& trial, const TraceSpace& test, const BemQuadrature& q) {
  if (!trial.continuous() || !test.continuous()) {
    throw UnsupportedSpace("hypersingular operator needs continuous spaces");
  }
  if (trial.degree() != test.degree()) throw UnsupportedSpace("hypersingular operator expects matching spaces");
  return assemble_boundary_operators(trial, test, q, kHypersingular).W;
}

}  // namespace fembem
